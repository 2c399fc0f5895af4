#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autorbit {

using Point = std::uint32_t;

/// A bijection of {1..n}. Text forms (cycle strings, image lists) are
/// 1-based; storage is 0-based so that `p[i]` indexes directly.
///
/// Products act on the right: `compose(p, q)` first applies p, then q,
/// i.e. i -> q(p(i)). `p * q` is the same product.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<Point> images0);  // 0-based, validated

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Takes 0-based images that are already known to be a bijection.
  static Permutation adopt(std::vector<Point> images0) {
    Permutation p;
    p.images_ = std::move(images0);
    return p;
  }
  /// 1-based image list, e.g. {2,3,1}. Throws ParseError unless bijective.
  static Permutation from_images(std::span<const Point> images1);
  static Permutation from_images(std::initializer_list<Point> images1) {
    return from_images(std::span<const Point>(images1.begin(), images1.size()));
  }
  /// Parses "(1 2 3)(4 5)"; "" and "()" give the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles,
                                 std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }
  std::vector<Point> images_one_based() const;

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;
  /// Smallest moved point (0-based), or degree() when identity.
  std::size_t first_moved() const;

  /// Cycle notation, 1-based; identity prints as "()".
  std::string to_cycles() const;
  /// "[2,3,1]"
  std::string to_image_list() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// i -> q(p(i)). Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}
Permutation power(const Permutation& p, std::int64_t k);
/// g^-1 x g
Permutation conjugate(const Permutation& x, const Permutation& g);

/// Writes compose(p, q) into out without allocating; all spans have the same
/// length.
inline void compose_into(std::span<const Point> p, std::span<const Point> q,
                         std::span<Point> out) {
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
}

struct PermutationHash {
  std::size_t operator()(std::span<const Point> images) const noexcept;
  std::size_t operator()(const Permutation& p) const noexcept {
    return (*this)(p.images());
  }
};

}  // namespace autorbit
