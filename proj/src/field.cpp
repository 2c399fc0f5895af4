#include "autorbit/field.hpp"

#include <string>

#include "autorbit/error.hpp"

namespace autorbit {

namespace {

struct FieldSpec {
  unsigned q, p, k;
  std::vector<unsigned> modulus;  // monic, low degree first, length k+1
};

FieldSpec spec_for(unsigned q) {
  switch (q) {
    case 2: return {2, 2, 1, {0, 1}};
    case 3: return {3, 3, 1, {0, 1}};
    case 5: return {5, 5, 1, {0, 1}};
    case 7: return {7, 7, 1, {0, 1}};
    case 4: return {4, 2, 2, {1, 1, 1}};
    case 8: return {8, 2, 3, {1, 1, 0, 1}};
    case 9: return {9, 3, 2, {1, 0, 1}};
    default: throw Error("unsupported field size q = " + std::to_string(q));
  }
}

std::vector<unsigned> digits(unsigned a, unsigned p, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

unsigned encode(const std::vector<unsigned>& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

FieldTable::FieldTable(unsigned q) {
  const FieldSpec s = spec_for(q);
  q_ = s.q;
  p_ = s.p;
  k_ = s.k;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const auto da = digits(a, p_, k_);
    for (unsigned b = 0; b < q_; ++b) {
      const auto db = digits(b, p_, k_);
      std::vector<unsigned> sum(k_);
      for (unsigned i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(sum, p_);

      std::vector<unsigned> prod(2 * k_, 0);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (unsigned deg = 2 * k_ - 1; deg >= k_ && k_ > 1; --deg) {
        unsigned c = prod[deg];
        if (!c) continue;
        // subtract c * x^(deg-k) * modulus
        for (unsigned i = 0; i <= k_; ++i) {
          unsigned& t = prod[deg - k_ + i];
          t = (t + p_ * p_ - c * s.modulus[i] % p_) % p_;
        }
      }
      if (k_ == 1) prod[0] = (da[0] * db[0]) % p_;
      prod.resize(k_);
      mul_[a * q_ + b] = encode(prod, p_);
    }
  }
  for (unsigned a = 0; a < q_; ++a)
    for (unsigned b = 0; b < q_; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }

  // exhaustive axiom check
  for (unsigned a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0)
      throw Error("field table identity laws failed for q = " + std::to_string(q_));
    if (a != 0 && mul(a, inv(a)) != 1)
      throw Error("field table has a non-invertible element for q = " + std::to_string(q_));
    for (unsigned b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
        throw Error("field table is not commutative");
      for (unsigned c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)) || mul(mul(a, b), c) != mul(a, mul(b, c)) ||
            mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw Error("field axioms failed for q = " + std::to_string(q_));
      }
    }
  }

  for (unsigned g = 2; g < q_ + 1; ++g) {
    unsigned cand = g < q_ ? g : 1;
    unsigned x = cand, ord = 1;
    while (x != 1) {
      x = mul(x, cand);
      ++ord;
    }
    if (ord == q_ - 1) {
      primitive_ = cand;
      break;
    }
  }
  if (q_ == 2) primitive_ = 1;
  powers_.clear();
  unsigned x = 1;
  for (unsigned i = 0; i + 1 < q_; ++i) {
    powers_.push_back(x);
    x = mul(x, primitive_);
  }
  if (x != 1) throw Error("primitive element check failed");
  std::vector<char> hit(q_, 0);
  for (unsigned v : powers_) hit[v] = 1;
  for (unsigned v = 1; v < q_; ++v)
    if (!hit[v]) throw Error("multiplicative group is not cyclic under the chosen generator");
}

unsigned FieldTable::pow(unsigned a, unsigned e) const {
  unsigned r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace autorbit
