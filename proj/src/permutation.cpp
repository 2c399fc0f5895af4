#include "autorbit/permutation.hpp"

#include <numeric>
#include <sstream>

#include "autorbit/error.hpp"

namespace autorbit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images0) : images_(std::move(images0)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point x = images_[i];
    if (x >= images_.size())
      throw ParseError("image " + std::to_string(x + 1) + " of point " +
                       std::to_string(i + 1) + " is out of range 1.." +
                       std::to_string(images_.size()));
    if (seen[x])
      throw ParseError("image " + std::to_string(x + 1) +
                       " repeated; not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_images(std::span<const Point> images1) {
  std::vector<Point> v;
  v.reserve(images1.size());
  for (Point x : images1) {
    if (x == 0) throw ParseError("image 0 is out of range (points are 1-based)");
    v.push_back(x - 1);
  }
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles,
                                     std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (Point x : cyc) {
      if (x == 0 || x > degree)
        throw ParseError("point " + std::to_string(x) + " out of range 1.." +
                         std::to_string(degree));
      if (used[x - 1])
        throw ParseError("malformed cycle: point " + std::to_string(x) +
                         " appears more than once");
      used[x - 1] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
  }
  return adopt(std::move(img));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("malformed cycle string: expected '(' at column " +
                       std::to_string(i + 1));
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("malformed cycle string: missing ')'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] < '0' || text[i] > '9')
        throw ParseError(std::string("malformed cycle string: unexpected '") +
                         text[i] + "'");
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffULL) throw ParseError("point out of range");
        ++i;
      }
      cyc.push_back(static_cast<Point>(v));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(cycles, degree);
}

std::vector<Point> Permutation::images_one_based() const {
  std::vector<Point> v(images_);
  for (auto& x : v) ++x;
  return v;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::string Permutation::to_image_list() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << images_[i] + 1;
  }
  out << ']';
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<Point> out(p.degree());
  compose_into(p.images(), q.images(), out);
  return Permutation::adopt(std::move(out));
}

Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? p.inverse() : p;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Permutation result(p.degree());
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g.inverse(), x), g);
}

std::size_t PermutationHash::operator()(std::span<const Point> images) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ images.size();
  for (Point x : images) {
    h ^= x;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 32;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace autorbit
