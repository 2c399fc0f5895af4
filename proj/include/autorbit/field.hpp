#pragma once

#include <cstdint>
#include <vector>

namespace autorbit {

/// GF(q) for small q, elements encoded as 0..q-1 by their coefficient
/// vectors over GF(p) (digit i in base p is the coefficient of x^i).
/// Extension fields use fixed moduli: x^2+x+1 (q=4), x^3+x+1 (q=8),
/// x^2+1 (q=9).
class FieldTable {
 public:
  /// Supported q: 2, 3, 4, 5, 7, 8, 9. Throws Error otherwise, or if a field
  /// axiom fails the exhaustive check.
  explicit FieldTable(unsigned q);

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const { return inv_[a]; }  // inv(0) is unspecified
  unsigned pow(unsigned a, unsigned e) const;
  unsigned frobenius(unsigned a) const { return pow(a, p_); }

  /// Smallest element generating the multiplicative group.
  unsigned primitive() const { return primitive_; }
  /// primitive()^k for k = 0..q-2
  const std::vector<unsigned>& powers() const { return powers_; }

 private:
  unsigned q_, p_, k_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
  unsigned primitive_ = 1;
  std::vector<unsigned> powers_;
};

}  // namespace autorbit
