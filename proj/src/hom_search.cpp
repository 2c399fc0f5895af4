#include "hom_search.hpp"

#include <map>

#include "autorbit/error.hpp"

namespace autorbit::detail {

CayleyFrame::CayleyFrame(const ElementTable& src, std::vector<Index> gens)
    : src_(&src), gens_(std::move(gens)) {
  const std::size_t n = src.size(), k = gens_.size();
  next_.resize(n * k);
  for (Index x = 0; x < n; ++x)
    for (std::size_t i = 0; i < k; ++i) next_[x * k + i] = src.multiply(x, gens_[i]);
  traversal_.resize(k + 1);
  std::vector<char> seen(n);
  for (std::size_t j = 1; j <= k; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    auto& order = traversal_[j];
    order.push_back(src.identity());
    seen[src.identity()] = 1;
    for (std::size_t p = 0; p < order.size(); ++p)
      for (std::size_t i = 0; i < j; ++i) {
        Index y = next(order[p], i);
        if (!seen[y]) {
          seen[y] = 1;
          order.push_back(y);
        }
      }
  }
}

ExtensionChecker::ExtensionChecker(const CayleyFrame& frame, const ElementTable& dst)
    : frame_(&frame),
      dst_(&dst),
      phi_(frame.source().size()),
      assigned_(frame.source().size(), 0),
      used_(dst.size(), 0) {}

bool ExtensionChecker::extend(std::size_t j, std::span<const Index> images) {
  ++epoch_;
  if (epoch_ == 0) {  // wrapped
    std::fill(assigned_.begin(), assigned_.end(), 0);
    std::fill(used_.begin(), used_.end(), 0);
    epoch_ = 1;
  }
  const Index root = frame_->source().identity();
  phi_[root] = dst_->identity();
  assigned_[root] = epoch_;
  used_[dst_->identity()] = epoch_;
  for (Index x : frame_->traversal(j)) {
    const Index fx = phi_[x];
    for (std::size_t i = 0; i < j; ++i) {
      const Index y = frame_->next(x, i);
      const Index v = dst_->multiply(fx, images[i]);
      if (assigned_[y] != epoch_) {
        if (used_[v] == epoch_) return false;
        assigned_[y] = epoch_;
        used_[v] = epoch_;
        phi_[y] = v;
      } else if (phi_[y] != v) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Index> ExtensionChecker::map() const { return phi_; }

std::vector<Index> HomSearch::run(const Callback& on_found) const {
  const std::size_t k = base.size();
  std::vector<Index> reps;
  if (k == 0) {
    if (dst.size() == 1) on_found({dst.identity()}, {});
    return reps;
  }

  // fingerprint ids of the source translated to the target's ids
  std::map<std::string, std::uint32_t> dst_id;
  for (std::uint32_t i = 0; i < dst_classes.keys.size(); ++i) dst_id[dst_classes.keys[i]] = i;
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> translate(src_classes.keys.size(), kNone);
  for (std::uint32_t i = 0; i < src_classes.keys.size(); ++i) {
    auto it = dst_id.find(src_classes.keys[i]);
    if (it != dst_id.end()) translate[i] = it->second;
  }
  auto src_fp = [&](Index x) { return translate[src_classes.fingerprint_id[x]]; };
  auto dst_fp = [&](Index y) { return dst_classes.fingerprint_id[y]; };

  std::vector<std::vector<Index>> candidates(k);
  {
    const std::uint32_t want = src_fp(base[0]);
    if (want == kNone) return reps;
    for (const auto& c : dst_classes.classes)
      if (dst_fp(c.representative_index) == want) reps.push_back(c.representative_index);
    candidates[0] = reps;
  }
  for (std::size_t j = 1; j < k; ++j) {
    const std::uint32_t want = src_fp(base[j]);
    if (want == kNone) return reps;
    for (Index y = 0; y < dst.size(); ++y)
      if (dst_fp(y) == want) candidates[j].push_back(y);
  }

  // pairwise words g_i g_j and g_i g_j^-1 give cheap necessary conditions
  std::vector<std::vector<std::uint32_t>> word_fp(k, std::vector<std::uint32_t>(2 * k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      word_fp[j][2 * i] = src_fp(src.multiply(base[i], base[j]));
      word_fp[j][2 * i + 1] = src_fp(src.multiply(base[i], src.inverse(base[j])));
    }

  CayleyFrame frame(src, base);
  ExtensionChecker checker(frame, dst);
  std::vector<Index> images(k);
  std::size_t ticks = 0;
  bool stop = false;

  std::function<void(std::size_t)> descend = [&](std::size_t j) {
    for (Index h : candidates[j]) {
      if (stop) return;
      if (options.deadline && (ticks++ & 0x3ff) == 0 &&
          std::chrono::steady_clock::now() > *options.deadline)
        throw TimeoutError("automorphism search exceeded its time budget");
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        ok = dst_fp(dst.multiply(images[i], h)) == word_fp[j][2 * i] &&
             dst_fp(dst.multiply(images[i], dst.inverse(h))) == word_fp[j][2 * i + 1];
      }
      if (!ok) continue;
      images[j] = h;
      if (!checker.extend(j + 1, std::span<const Index>(images.data(), j + 1))) continue;
      if (j + 1 == k) {
        if (frame.traversal(k).size() != src.size())
          throw Error("generating sequence does not generate the group");
        if (!on_found(checker.map(), images)) stop = true;
      } else {
        descend(j + 1);
      }
    }
  };
  descend(0);
  return reps;
}

}  // namespace autorbit::detail
