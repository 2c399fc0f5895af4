#include "autorbit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "autorbit/error.hpp"
#include "autorbit/field.hpp"
#include "autorbit/structure.hpp"

namespace autorbit::catalog {

namespace {

using Images = std::vector<Point>;

std::string normalize(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::optional<unsigned long> parse_uint(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  unsigned long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<unsigned long>(c - '0');
  }
  return v;
}

[[noreturn]] void unknown(std::string_view name, const std::string& why = {}) {
  throw UnknownGroupError("unknown group name '" + std::string(name) + "'" +
                          (why.empty() ? "" : ": " + why));
}

Permutation cycle_perm(std::size_t degree, std::size_t from, std::size_t to) {
  // the cycle (from from+1 ... to), 0-based inclusive
  Images img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = from; i < to; ++i) img[i] = static_cast<Point>(i + 1);
  img[to] = static_cast<Point>(from);
  return Permutation::adopt(std::move(img));
}

GroupDescriptor symmetric(unsigned n) {
  GroupDescriptor d{"S" + std::to_string(n), std::max(1u, n), 0, {}, "symmetric group on n points"};
  if (n >= 2) {
    d.generators.push_back(cycle_perm(n, 0, 1));
    if (n >= 3) d.generators.push_back(cycle_perm(n, 0, n - 1));
  }
  return d;
}

GroupDescriptor alternating(unsigned n) {
  GroupDescriptor d{"A" + std::to_string(n), std::max(1u, n), 0, {}, "alternating group on n points"};
  if (n >= 3) {
    d.generators.push_back(cycle_perm(n, 0, 2));
    if (n >= 4) d.generators.push_back(n % 2 ? cycle_perm(n, 0, n - 1) : cycle_perm(n, 1, n - 1));
  }
  return d;
}

GroupDescriptor cyclic(unsigned n) {
  GroupDescriptor d{"C" + std::to_string(n), std::max(1u, n), 0, {}, "regular cyclic group"};
  if (n >= 2) d.generators.push_back(cycle_perm(n, 0, n - 1));
  return d;
}

GroupDescriptor elementary_abelian(unsigned p, unsigned k) {
  GroupDescriptor d{"E" + std::to_string(p) + "^" + std::to_string(k), p * k, 0, {},
                    "k disjoint p-cycles"};
  for (unsigned i = 0; i < k; ++i) d.generators.push_back(cycle_perm(p * k, i * p, i * p + p - 1));
  return d;
}

// Projective line over GF(q): point 0 is infinity, point 1+i is zeta^i,
// point q is 0.
class ProjectiveLine {
 public:
  explicit ProjectiveLine(unsigned q) : f_(q), pos_(q) {
    pos_[0] = q;
    for (unsigned i = 0; i + 1 < q; ++i) pos_[f_.powers()[i]] = 1 + i;
    elem_.resize(q + 1);
    for (unsigned v = 0; v < q; ++v) elem_[pos_[v]] = v;
  }

  const FieldTable& field() const { return f_; }
  std::size_t size() const { return f_.q() + 1; }

  // x -> (a x + b) / (c x + d), optionally after the field automorphism
  // x -> x^(p^frob)
  Permutation map(unsigned a, unsigned b, unsigned c, unsigned d, unsigned frob = 0) const {
    const FieldTable& f = f_;
    Images img(size());
    for (std::size_t pt = 0; pt < size(); ++pt) {
      std::optional<unsigned> x;
      if (pt != 0) x = elem_[pt];
      if (x)
        for (unsigned i = 0; i < frob; ++i) x = f.frobenius(*x);
      std::optional<unsigned> y;
      if (!x) {
        if (c != 0) y = f.mul(a, f.inv(c));
      } else {
        unsigned num = f.add(f.mul(a, *x), b);
        unsigned den = f.add(f.mul(c, *x), d);
        if (den != 0) y = f.mul(num, f.inv(den));
      }
      img[pt] = y ? pos_[*y] : 0;
    }
    return Permutation(std::move(img));
  }

 private:
  FieldTable f_;
  std::vector<unsigned> pos_;   // field element -> point
  std::vector<unsigned> elem_;  // point -> field element (unused for infinity)
};

void check_projective_q(unsigned q, std::string_view name) {
  if (q != 4 && q != 5 && q != 7 && q != 8 && q != 9)
    unknown(name, "unsupported q = " + std::to_string(q) + " (supported: 4, 5, 7, 8, 9)");
}

std::vector<Permutation> psl2_generators(const ProjectiveLine& line) {
  const FieldTable& f = line.field();
  const unsigned z = f.primitive();
  return {line.map(1, 1, 0, 1), line.map(f.mul(z, z), 0, 0, 1),
          line.map(0, f.neg(1), 1, 0)};
}

GroupDescriptor projective_line_group(const std::string& family, unsigned q) {
  ProjectiveLine line(q);
  const FieldTable& f = line.field();
  const unsigned z = f.primitive();
  GroupDescriptor d{family + "(" + std::to_string(q) + ")", line.size(), 0,
                    psl2_generators(line), "action on the projective line over GF(q)"};
  if (family == "PGL2" || family == "PGammaL2") d.generators.push_back(line.map(z, 0, 0, 1));
  if (family == "PSigmaL2" || family == "PGammaL2") d.generators.push_back(line.map(1, 0, 0, 1, 1));
  return d;
}

GroupDescriptor psl3_4() {
  FieldTable f(4);
  // normalised nonzero vectors of GF(4)^3, first nonzero coordinate 1
  std::vector<unsigned> points;
  std::map<unsigned, unsigned> index;
  auto code = [](unsigned a, unsigned b, unsigned c) { return a * 16 + b * 4 + c; };
  for (unsigned v = 1; v < 64; ++v) {
    unsigned a = v / 16, b = v / 4 % 4, c = v % 4;
    unsigned lead = a ? a : (b ? b : c);
    if (lead == 1) {
      index[v] = static_cast<unsigned>(points.size());
      points.push_back(v);
    }
  }
  auto normalise = [&](unsigned a, unsigned b, unsigned c) {
    unsigned lead = a ? a : (b ? b : c);
    unsigned s = f.inv(lead);
    return code(f.mul(a, s), f.mul(b, s), f.mul(c, s));
  };
  GroupDescriptor d{"PSL3(4)", points.size(), 0, {},
                    "elementary transvections I + t E_ij, t in {1, zeta}, on the 21 points "
                    "of the projective plane over GF(4)"};
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (unsigned t : {1u, f.primitive()}) {
        Images img(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) {
          unsigned v[3] = {points[k] / 16, points[k] / 4 % 4, points[k] % 4};
          v[i] = f.add(v[i], f.mul(t, v[j]));
          img[k] = index.at(normalise(v[0], v[1], v[2]));
        }
        d.generators.push_back(Permutation(std::move(img)));
      }
    }
  return d;
}

GroupDescriptor asl24a() {
  FieldTable f(4);
  const unsigned z = f.primitive();
  auto pt = [](unsigned a, unsigned b) { return static_cast<Point>(a * 4 + b); };
  auto affine = [&](auto fn) {
    Images img(16);
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b) {
        auto [x, y] = fn(a, b);
        img[pt(a, b)] = pt(x, y);
      }
    return Permutation(std::move(img));
  };
  GroupDescriptor d{"ASL24A", 16, 0, {},
                    "GF(4)^2 translations extended by SL(2,4) acting naturally"};
  for (unsigned t : {1u, z}) {
    d.generators.push_back(affine([&](unsigned a, unsigned b) {
      return std::pair{f.add(a, t), b};
    }));
    d.generators.push_back(affine([&](unsigned a, unsigned b) {
      return std::pair{a, f.add(b, t)};
    }));
  }
  for (unsigned t : {1u, z}) {
    d.generators.push_back(affine([&](unsigned a, unsigned b) {
      return std::pair{f.add(a, f.mul(t, b)), b};
    }));
    d.generators.push_back(affine([&](unsigned a, unsigned b) {
      return std::pair{a, f.add(b, f.mul(t, a))};
    }));
  }
  return d;
}

GroupDescriptor asl24b() {
  std::vector<unsigned> vecs;
  for (unsigned v = 0; v < 32; ++v)
    if (__builtin_popcount(v) % 2 == 0) vecs.push_back(v);
  std::map<unsigned, Point> index;
  for (std::size_t i = 0; i < vecs.size(); ++i) index[vecs[i]] = static_cast<Point>(i);
  GroupDescriptor d{"ASL24B", 16, 0, {},
                    "even-weight vectors of GF(2)^5 with translations and A5 permuting "
                    "coordinates"};
  for (unsigned i = 0; i < 4; ++i) {
    unsigned w = (1u << i) | (1u << (i + 1));
    Images img(16);
    for (std::size_t k = 0; k < vecs.size(); ++k) img[k] = index.at(vecs[k] ^ w);
    d.generators.push_back(Permutation(std::move(img)));
  }
  const std::vector<std::vector<unsigned>> coord_perms = {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}};
  for (const auto& sigma : coord_perms) {
    Images img(16);
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      unsigned out = 0;
      for (unsigned bit = 0; bit < 5; ++bit)
        if (vecs[k] >> bit & 1u) out |= 1u << sigma[bit];
      img[k] = index.at(out);
    }
    d.generators.push_back(Permutation(std::move(img)));
  }
  return d;
}

GroupDescriptor m10() {
  ProjectiveLine line(9);
  const unsigned z = line.field().primitive();
  GroupDescriptor d{"M10", line.size(), 0, psl2_generators(line),
                    "PSL2(9) extended by x -> zeta * x^3 inside PGammaL2(9)"};
  d.generators.push_back(line.map(z, 0, 0, 1, 1));
  return d;
}

// splits "a,b" at the top-level comma
std::pair<std::string, std::string> split_args(std::string_view inner, std::string_view whole) {
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0)
      return {std::string(inner.substr(0, i)), std::string(inner.substr(i + 1))};
  }
  unknown(whole, "expected two comma-separated arguments");
}

std::optional<unsigned> paren_arg(std::string_view s, std::string_view prefix) {
  if (s.size() <= prefix.size() + 1 || s.substr(0, prefix.size()) != prefix ||
      s[prefix.size()] != '(' || s.back() != ')')
    return std::nullopt;
  auto v = parse_uint(s.substr(prefix.size() + 1, s.size() - prefix.size() - 2));
  if (!v) return std::nullopt;
  return static_cast<unsigned>(*v);
}

bool wrapped(std::string_view s, std::string_view prefix) {
  return s.size() > prefix.size() + 1 && s.substr(0, prefix.size()) == prefix &&
         s[prefix.size()] == '(' && s.back() == ')';
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r = checked_mul(r, b);
  return r;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

unsigned field_degree(unsigned q) { return q == 4 ? 2 : q == 8 ? 3 : q == 9 ? 2 : 1; }

GroupDescriptor describe_unchecked(const std::string& s);

GroupDescriptor combine_product(const GroupDescriptor& a, const GroupDescriptor& b,
                                const std::string& name) {
  PermGroup g = direct_product(a.group(), b.group());
  return {name, g.degree(), 0, g.generators(), "direct product on disjoint point sets"};
}

GroupDescriptor describe_unchecked(const std::string& s) {
  if (wrapped(s, "DP")) {
    auto [l, r] = split_args(std::string_view(s).substr(3, s.size() - 4), s);
    GroupDescriptor a = describe(l), b = describe(r);
    return combine_product(a, b, "DP(" + a.name + "," + b.name + ")");
  }
  if (wrapped(s, "POW")) {
    auto [l, r] = split_args(std::string_view(s).substr(4, s.size() - 5), s);
    auto k = parse_uint(r);
    if (!k || *k == 0) unknown(s, "POW needs a positive integer exponent");
    GroupDescriptor h = describe(l);
    PermGroup g = direct_power(h.group(), *k);
    return {"POW(" + h.name + "," + std::to_string(*k) + ")", g.degree(), 0, g.generators(),
            "direct power on disjoint point sets"};
  }
  for (const char* fam : {"PSL2", "PGL2", "PSigmaL2", "PGammaL2"}) {
    if (auto q = paren_arg(s, fam)) {
      check_projective_q(*q, s);
      return projective_line_group(fam, *q);
    }
  }
  if (s == "PSL3(4)") return psl3_4();
  if (s == "M10") return m10();
  if (s == "ASL24A") return asl24a();
  if (s == "ASL24B") return asl24b();
  if (s.size() >= 4 && s[0] == 'E') {
    auto caret = s.find('^');
    if (caret != std::string::npos) {
      auto p = parse_uint(std::string_view(s).substr(1, caret - 1));
      auto k = parse_uint(std::string_view(s).substr(caret + 1));
      if (!p || !k || *k == 0 || !is_prime(*p)) unknown(s, "E<p>^<k> needs prime p and k >= 1");
      return elementary_abelian(static_cast<unsigned>(*p), static_cast<unsigned>(*k));
    }
  }
  if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'S' || s[0] == 'C')) {
    auto n = parse_uint(std::string_view(s).substr(1));
    if (n && *n >= 1 && *n <= 64) {
      unsigned m = static_cast<unsigned>(*n);
      if (s[0] == 'A') return alternating(m);
      if (s[0] == 'S') return symmetric(m);
      return cyclic(m);
    }
    if (n) unknown(s, "n must lie in 1..64");
  }
  unknown(s);
}

}  // namespace

std::uint64_t expected_order(std::string_view name) {
  const std::string s = normalize(name);
  if (wrapped(s, "DP")) {
    auto [l, r] = split_args(std::string_view(s).substr(3, s.size() - 4), s);
    return checked_mul(expected_order(l), expected_order(r));
  }
  if (wrapped(s, "POW")) {
    auto [l, r] = split_args(std::string_view(s).substr(4, s.size() - 5), s);
    auto k = parse_uint(r);
    if (!k || *k == 0) unknown(s);
    return ipow(expected_order(l), static_cast<unsigned>(*k));
  }
  if (auto q = paren_arg(s, "PSL2")) return std::uint64_t{*q} * (*q * *q - 1) / std::gcd(2u, *q - 1);
  if (auto q = paren_arg(s, "PGL2")) return std::uint64_t{*q} * (*q * *q - 1);
  if (auto q = paren_arg(s, "PSigmaL2"))
    return std::uint64_t{*q} * (*q * *q - 1) / std::gcd(2u, *q - 1) * field_degree(*q);
  if (auto q = paren_arg(s, "PGammaL2")) return std::uint64_t{*q} * (*q * *q - 1) * field_degree(*q);
  if (s == "PSL3(4)") return 64ull * 63 * 15 / 3;  // q^3 (q^3-1)(q^2-1) / gcd(3, q-1)
  if (s == "M10") return 720;
  if (s == "ASL24A" || s == "ASL24B") return 16 * 60;
  if (s.size() >= 4 && s[0] == 'E' && s.find('^') != std::string::npos) {
    auto caret = s.find('^');
    auto p = parse_uint(std::string_view(s).substr(1, caret - 1));
    auto k = parse_uint(std::string_view(s).substr(caret + 1));
    if (!p || !k) unknown(s);
    return ipow(*p, static_cast<unsigned>(*k));
  }
  if (s.size() >= 2) {
    auto n = parse_uint(std::string_view(s).substr(1));
    if (n) {
      unsigned m = static_cast<unsigned>(*n);
      if (s[0] == 'S') return factorial(m);
      if (s[0] == 'A') return m < 2 ? 1 : factorial(m) / 2;
      if (s[0] == 'C') return m;
    }
  }
  unknown(s);
}

GroupDescriptor describe(std::string_view name) {
  const std::string s = normalize(name);
  GroupDescriptor d = describe_unchecked(s);
  d.order = PermGroup(d.degree, d.generators).order();
  const std::uint64_t want = expected_order(s);
  if (d.order != want)
    throw Error("internal: construction of " + d.name + " has order " + std::to_string(d.order) +
                ", expected " + std::to_string(want));
  return d;
}

PermGroup build(std::string_view name) { return describe(name).group(); }

std::vector<PermGroup> psl2_9_index_two_overgroups() {
  return {build("PGL2(9)"), build("PSigmaL2(9)"), build("M10")};
}

std::vector<FamilyMember> extension_family(std::string_view n_name) {
  const std::string n = describe(n_name).name;
  std::vector<std::pair<std::uint64_t, std::string>> members;
  if (n == "A5") {
    members = {{2, "S5"}, {2, "DP(A5,C2)"}, {3, "DP(A5,C3)"}, {5, "DP(A5,C5)"}};
  } else if (n == "A6") {
    members = {{2, "PSigmaL2(9)"}, {2, "PGL2(9)"}, {2, "M10"}, {2, "DP(A6,C2)"},
               {3, "DP(A6,C3)"}, {5, "DP(A6,C5)"}};
  } else if (n == "PSL2(7)") {
    members = {{2, "PGL2(7)"}, {2, "DP(PSL2(7),C2)"}, {3, "DP(PSL2(7),C3)"},
               {7, "DP(PSL2(7),C7)"}};
  } else if (n == "PSL2(8)") {
    members = {{2, "DP(PSL2(8),C2)"}, {3, "PGammaL2(8)"}, {3, "DP(PSL2(8),C3)"},
               {7, "DP(PSL2(8),C7)"}};
  } else {
    throw UnknownGroupError("no extension family for '" + n +
                            "' (supported: A5, A6, PSL2(7), PSL2(8))");
  }
  std::vector<FamilyMember> out;
  for (auto& [p, name] : members) out.push_back({name, p, build(name)});
  return out;
}

}  // namespace autorbit::catalog
