#include "autorbit/perm_group.hpp"

#include "autorbit/error.hpp"

namespace autorbit {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("group order overflows 64 bits");
  return r;
}

BSGS::BSGS(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in group of degree " + std::to_string(degree));
    if (g.is_identity()) continue;
    bool fixes_base = true;
    for (Point b : base_)
      if (g[b] != b) {
        fixes_base = false;
        break;
      }
    if (fixes_base) add_base_point(static_cast<Point>(g.first_moved()));
    strong_.push_back(g);
  }
  for (auto& lvl : levels_) lvl.generators.clear();
  for (const auto& g : strong_) {
    // g belongs to levels 0..j where j is the first base point it moves
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      levels_[l].generators.push_back(g);
      if (g[base_[l]] != base_[l]) break;
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);
  run();
}

void BSGS::add_base_point(Point p) {
  base_.push_back(p);
  BasicOrbit lvl;
  lvl.base_point = p;
  levels_.push_back(std::move(lvl));
}

void BSGS::rebuild_orbit(std::size_t level) {
  BasicOrbit& lvl = levels_[level];
  lvl.points.assign(1, lvl.base_point);
  lvl.position.assign(degree_, -1);
  lvl.position[lvl.base_point] = 0;
  lvl.transversal.assign(1, Permutation::identity(degree_));
  lvl.inverse_transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < lvl.points.size(); ++k) {
    for (const auto& s : lvl.generators) {
      Point next = s[lvl.points[k]];
      if (lvl.position[next] >= 0) continue;
      lvl.position[next] = static_cast<std::int32_t>(lvl.points.size());
      lvl.points.push_back(next);
      Permutation u = compose(lvl.transversal[k], s);
      lvl.inverse_transversal.push_back(u.inverse());
      lvl.transversal.push_back(std::move(u));
    }
  }
}

SiftResult BSGS::sift(const Permutation& g, std::size_t from_level) const {
  std::vector<Point> cur(g.images().begin(), g.images().end());
  std::vector<Point> tmp(degree_);
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const BasicOrbit& lvl = levels_[l];
    Point beta = cur[lvl.base_point];
    if (lvl.position[beta] < 0) return {Permutation::adopt(std::move(cur)), l};
    compose_into(cur, lvl.inverse_transversal[lvl.position[beta]].images(), tmp);
    cur.swap(tmp);
  }
  return {Permutation::adopt(std::move(cur)), levels_.size()};
}

bool BSGS::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    throw DegreeMismatch("permutation of degree " + std::to_string(g.degree()) +
                         " tested against group of degree " +
                         std::to_string(degree_));
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

void BSGS::run() {
  // Holt's SCHREIERSIMS: work from the deepest level up; whenever a Schreier
  // generator fails to sift, extend the chain and resume at the level where
  // it failed.
  std::vector<Point> a(degree_);
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].points.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < levels_[li].generators.size(); ++s) {
        const BasicOrbit& lvl = levels_[li];
        const Permutation& x = lvl.generators[s];
        Point beta = lvl.points[k];
        Point beta_x = x[beta];
        compose_into(lvl.transversal[k].images(), x.images(), a);
        const Permutation& u_bx = lvl.representative(beta_x);
        if (std::equal(a.begin(), a.end(), u_bx.images().begin())) continue;
        Permutation h = compose(Permutation::adopt(a),
                                lvl.inverse_transversal[lvl.position[beta_x]]);
        auto [y, j] = sift(h, li + 1);
        if (j == levels_.size() && y.is_identity()) continue;
        if (j == levels_.size()) add_base_point(static_cast<Point>(y.first_moved()));
        strong_.push_back(y);
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].generators.push_back(y);
          rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::uint64_t BSGS::order() const {
  std::uint64_t n = 1;
  for (const auto& lvl : levels_) n = checked_mul(n, lvl.points.size());
  return n;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::string name)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
  if (degree == 0) throw Error("degree-0 groups are not allowed");
  if (generators_.empty()) generators_.push_back(Permutation::identity(degree));
  for (const auto& g : generators_)
    if (g.degree() != degree)
      throw DegreeMismatch("generator " + g.to_cycles() + " has degree " +
                           std::to_string(g.degree()) + ", group degree is " +
                           std::to_string(degree));
  bsgs_ = std::make_shared<const BSGS>(degree_, generators_);
}

PermGroup PermGroup::with_name(std::string name) const {
  PermGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

bool PermGroup::contains(const Permutation& p) const { return bsgs_->contains(p); }

BSGS build_bsgs(const PermGroup& g) { return g.bsgs(); }

}  // namespace autorbit
