#include "autorbit/element_table.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

#include "autorbit/error.hpp"

namespace autorbit {

namespace {

constexpr Index kEmpty = 0xffffffffu;

// Depth-first expansion of the stabilizer chain: every element is uniquely
// u_{k-1} * ... * u_0 with u_l from the level-l transversal.
void expand(const BSGS& bsgs, std::size_t level, std::vector<Point>& prefix,
            std::vector<Point>& out) {
  const auto& levels = bsgs.basic_orbits();
  if (level == 0) {
    out.insert(out.end(), prefix.begin(), prefix.end());
    return;
  }
  const BasicOrbit& lvl = levels[level - 1];
  std::vector<Point> next(prefix.size());
  for (const auto& u : lvl.transversal) {
    compose_into(prefix, u.images(), next);
    expand(bsgs, level - 1, next, out);
  }
}

}  // namespace

std::uint64_t element_cap() {
  if (const char* env = std::getenv("AUTORBIT_ELEMENT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultElementCap;
}

ElementTable::ElementTable(PermGroup group, std::uint64_t cap)
    : group_(std::move(group)), degree_(group_.degree()) {
  const std::uint64_t n = group_.order();
  if (n > cap) throw CapacityError(n, cap);
  size_ = static_cast<std::size_t>(n);

  std::vector<Point> raw;
  raw.reserve(size_ * degree_);
  std::vector<Point> prefix(degree_);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  expand(group_.bsgs(), group_.bsgs().basic_orbits().size(), prefix, raw);

  std::vector<Index> perm(size_);
  std::iota(perm.begin(), perm.end(), Index{0});
  auto row = [&](Index i) { return raw.begin() + static_cast<std::ptrdiff_t>(i * degree_); };
  std::sort(perm.begin(), perm.end(), [&](Index a, Index b) {
    return std::lexicographical_compare(row(a), row(a) + degree_, row(b),
                                        row(b) + degree_);
  });
  images_.resize(size_ * degree_);
  for (std::size_t i = 0; i < size_; ++i)
    std::copy(row(perm[i]), row(perm[i]) + degree_, images_.begin() + i * degree_);

  std::size_t slots = std::bit_ceil(std::max<std::size_t>(4, 2 * size_));
  slots_.assign(slots, kEmpty);
  slot_mask_ = slots - 1;
  for (std::size_t i = 0; i < size_; ++i) {
    std::size_t s = PermutationHash{}(element(static_cast<Index>(i))) & slot_mask_;
    while (slots_[s] != kEmpty) s = (s + 1) & slot_mask_;
    slots_[s] = static_cast<Index>(i);
  }

  identity_ = index_of(Permutation::identity(degree_));
  inverse_.resize(size_);
  orders_.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    Permutation p = permutation(static_cast<Index>(i));
    inverse_[i] = index_of(p.inverse());
    orders_[i] = p.order();
  }
  for (const auto& g : group_.generators()) generator_indices_.push_back(index_of(g));

  if (size_ <= kProductTableCap) {
    products_.resize(size_ * size_);
    std::vector<Point> tmp(degree_);
    for (std::size_t a = 0; a < size_; ++a)
      for (std::size_t b = 0; b < size_; ++b) {
        compose_into(element(static_cast<Index>(a)), element(static_cast<Index>(b)), tmp);
        products_[a * size_ + b] = static_cast<std::uint16_t>(*find(tmp));
      }
  }
}

Permutation ElementTable::permutation(Index i) const {
  auto e = element(i);
  return Permutation::adopt(std::vector<Point>(e.begin(), e.end()));
}

std::optional<Index> ElementTable::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  std::size_t s = PermutationHash{}(images) & slot_mask_;
  while (slots_[s] != kEmpty) {
    auto e = element(slots_[s]);
    if (std::equal(e.begin(), e.end(), images.begin())) return slots_[s];
    s = (s + 1) & slot_mask_;
  }
  return std::nullopt;
}

Index ElementTable::index_of(const Permutation& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatch("permutation of degree " + std::to_string(p.degree()) +
                         " looked up in table of degree " + std::to_string(degree_));
  auto i = find(p);
  if (!i) throw Error("permutation " + p.to_cycles() + " is not in the group");
  return *i;
}

Index ElementTable::multiply(Index a, Index b) const {
  if (!products_.empty()) return products_[static_cast<std::size_t>(a) * size_ + b];
  thread_local std::vector<Point> tmp;
  tmp.resize(degree_);
  compose_into(element(a), element(b), tmp);
  return *find(tmp);
}

Index ElementTable::power(Index a, std::uint64_t k) const {
  Index result = identity_;
  Index base = a;
  while (k) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

bool ElementTable::is_abelian() const {
  const auto& gens = generator_indices_;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (multiply(gens[i], gens[j]) != multiply(gens[j], gens[i])) return false;
  return true;
}

}  // namespace autorbit
