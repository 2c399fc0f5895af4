#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autorbit/permutation.hpp"

namespace autorbit {

/// One level of a stabilizer chain: the orbit of a base point under the
/// pointwise stabilizer of the earlier base points, with coset
/// representatives.
struct BasicOrbit {
  Point base_point = 0;
  std::vector<Point> points;          // discovery order, points[0] = base_point
  std::vector<std::int32_t> position;  // per point: index into points, or -1
  std::vector<Permutation> transversal;          // maps base_point to points[k]
  std::vector<Permutation> inverse_transversal;  // inverses of the above
  std::vector<Permutation> generators;           // strong generators at this level

  bool contains(Point p) const { return position[p] >= 0; }
  const Permutation& representative(Point p) const { return transversal[position[p]]; }
};

struct SiftResult {
  Permutation residue;
  std::size_t level;  // level where sifting stopped; == base length on success
};

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Base points are always the smallest point moved by the element that
/// forces a new level.
class BSGS {
 public:
  BSGS(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  const std::vector<BasicOrbit>& basic_orbits() const { return levels_; }

  /// Product of basic orbit lengths. Throws Error on 64-bit overflow.
  std::uint64_t order() const;
  SiftResult sift(const Permutation& g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

 private:
  void add_base_point(Point p);
  void rebuild_orbit(std::size_t level);
  void run();

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_;
  std::vector<BasicOrbit> levels_;
};

/// A permutation group given by generators, with its stabilizer chain built
/// on construction. Copies share the chain.
class PermGroup {
 public:
  /// An empty generator list means the trivial group. Throws DegreeMismatch
  /// if a generator has the wrong degree, Error if degree is 0.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::string name = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  PermGroup with_name(std::string name) const;
  const BSGS& bsgs() const { return *bsgs_; }

  std::uint64_t order() const { return bsgs_->order(); }
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string name_;
  std::shared_ptr<const BSGS> bsgs_;
};

inline std::uint64_t order(const PermGroup& g) { return g.order(); }
inline bool contains(const PermGroup& g, const Permutation& p) { return g.contains(p); }
BSGS build_bsgs(const PermGroup& g);

/// Checked 64-bit multiply; throws Error on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace autorbit
