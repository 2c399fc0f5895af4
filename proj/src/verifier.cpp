#include "autorbit/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "autorbit/catalog.hpp"
#include "autorbit/error.hpp"
#include "autorbit/group_file.hpp"

namespace autorbit::verify {

namespace {

const std::vector<std::string> kSmallOmegaNames = {"A5", "A6", "PSL2(7)", "PSL2(8)"};
const std::vector<std::string> kAtNames = {"A5", "A6", "PSL2(7)", "PSL2(8)", "PSL3(4)"};

// Direct squares up to this order get an exact orbit count; above it the
// certified bound omega >= |spec| is used.
constexpr std::uint64_t kExactSquareLimit = 50000;

std::string join(const std::set<std::uint64_t>& s, const char* sep = " ") {
  std::string out;
  for (auto v : s) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

Verdict pass(std::string check, std::string subject, std::string reason) {
  return {std::move(check), std::move(subject), Status::Pass, std::move(reason)};
}
Verdict fail(std::string check, std::string subject, std::string reason) {
  return {std::move(check), std::move(subject), Status::Fail, std::move(reason)};
}
Verdict skip(std::string check, std::string subject, std::string reason) {
  return {std::move(check), std::move(subject), Status::Skip, std::move(reason)};
}

// Runs a check, turning capacity and timeout problems into SKIP verdicts.
Verdict guarded(const std::string& check, const std::string& subject,
                const std::function<Verdict()>& body) {
  try {
    return body();
  } catch (const CapacityError& e) {
    return skip(check, subject, e.what());
  } catch (const TimeoutError& e) {
    return skip(check, subject, std::string("timeout: ") + e.what());
  }
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  a %= m;
  std::uint64_t x = a, k = 1;
  while (x != 1 % m) {
    x = x * a % m;
    ++k;
    if (k > m) return 0;
  }
  return k;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

std::uint64_t Options::effective_max_order() const {
  return max_order ? std::min(max_order, element_cap()) : element_cap();
}

SearchOptions Options::search_options() const {
  SearchOptions o;
  if (timeout_secs)
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*timeout_secs));
  return o;
}

std::size_t Outcome::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [&](const Verdict& v) { return v.status == s; }));
}

int Outcome::exit_code() const {
  if (count(Status::Fail)) return 1;
  if (count(Status::Skip) || !diagnostics.empty()) return 2;
  return 0;
}

const std::vector<std::string>& targets() {
  static const std::vector<std::string> t = {"theorem-a", "theorem-b", "stroppel-ineq",
                                             "lemma-2-3", "lemma-2-4", "prop-2-7",
                                             "lm-three",  "at-consistency"};
  return t;
}

const std::vector<std::string>& default_corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = {
        "C1", "C2", "C3", "C4", "C6", "E2^2", "E2^3", "E2^4", "E3^2", "E5^1",
        "S3", "A4", "S4", "DP(C2,C4)", "A5", "S5", "A6", "S6",
        "PSL2(4)", "PSL2(5)", "PSL2(7)", "PSL2(8)", "PSL2(9)",
        "PGL2(5)", "PGL2(7)", "PGL2(9)", "PSigmaL2(9)", "M10", "PGammaL2(8)",
        "PSL3(4)", "ASL24A", "ASL24B",
        // extension families not already listed
        "DP(A5,C2)", "DP(A5,C3)", "DP(A5,C5)", "DP(A6,C2)", "DP(A6,C3)", "DP(A6,C5)",
        "DP(PSL2(7),C2)", "DP(PSL2(7),C3)", "DP(PSL2(7),C7)",
        "DP(PSL2(8),C2)", "DP(PSL2(8),C3)", "DP(PSL2(8),C7)",
        // coprime products and a direct square
        "DP(A5,C7)", "DP(A6,C7)", "DP(PSL2(7),C11)", "DP(PSL2(8),C11)", "POW(A5,2)"};
    return n;
  }();
  return names;
}

Corpus default_corpus() {
  Corpus c;
  for (const auto& name : default_corpus_names()) {
    auto d = catalog::describe(name);
    c.entries.push_back({d.name, "catalog", d.group(), std::nullopt});
  }
  return c;
}

Corpus load_directory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".group") files.push_back(e.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  Corpus c;
  for (const auto& f : files) {
    try {
      GroupFile g = load_group_file(f);
      c.entries.push_back({g.name, f.string(), g.group(), g.omega_claim});
    } catch (const Error& e) {
      c.diagnostics.push_back(f.string() + ": " + e.what());
    }
  }
  return c;
}

std::optional<std::string> identify(GroupAnalysis& a, const std::vector<std::string>& names) {
  for (const auto& name : names) {
    if (catalog::expected_order(name) != a.order()) continue;
    if (isomorphic(a.table(), ElementTable(catalog::build(name)))) return name;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> elementary_abelian_prime(const ElementTable& t,
                                                      const SubgroupRecord& s) {
  if (s.elements.size() < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (Index x : s.elements) {
    if (x == t.identity()) continue;
    std::uint64_t o = t.element_order(x);
    if (p == 0) p = o;
    if (o != p) return std::nullopt;
  }
  if (!is_prime(p)) return std::nullopt;
  for (Index x : s.elements)
    for (Index y : s.elements)
      if (t.multiply(x, y) != t.multiply(y, x)) return std::nullopt;
  return p;
}

std::set<std::uint64_t> square_spectrum(const std::set<std::uint64_t>& spec) {
  std::set<std::uint64_t> out;
  for (auto a : spec)
    for (auto b : spec) out.insert(std::lcm(a, b));
  return out;
}

Verdict check_omega_claim(const CorpusEntry& e, GroupAnalysis& a) {
  const std::string check = "omega-claim";
  return guarded(check, e.name, [&] {
    if (!e.omega_claim) return pass(check, e.name, "no claim");
    const std::size_t w = a.omega();
    if (w != *e.omega_claim)
      return fail(check, e.name,
                  "claimed omega = " + std::to_string(*e.omega_claim) + " but computed " +
                      std::to_string(w));
    return pass(check, e.name, "claimed omega = " + std::to_string(w) + " confirmed");
  });
}

Verdict check_small_classification(const std::string& subject, GroupAnalysis& a) {
  const std::string check = "theorem-a";
  return guarded(check, subject, [&] {
    if (a.solvable()) return pass(check, subject, "solvable, hypothesis not met");
    const auto& spec = a.spectrum();
    if (spec.size() > 5)
      return pass(check, subject,
                  "omega >= |spec| = " + std::to_string(spec.size()) + " > 5");
    const std::size_t w = a.omega();
    if (w > 5) return pass(check, subject, "omega = " + std::to_string(w) + " > 5");
    if (auto name = identify(a, kSmallOmegaNames))
      return pass(check, subject, "omega = " + std::to_string(w) + ", isomorphic to " + *name);
    return fail(check, subject,
                "nonsolvable with omega = " + std::to_string(w) +
                    " but not isomorphic to A5, A6, PSL2(7) or PSL2(8)");
  });
}

Verdict check_six_orbits(const std::string& subject, GroupAnalysis& a) {
  const std::string check = "theorem-b";
  return guarded(check, subject, [&] {
    if (a.solvable()) return pass(check, subject, "solvable, hypothesis not met");
    const auto& spec = a.spectrum();
    if (spec.size() > 6)
      return pass(check, subject, "omega >= |spec| = " + std::to_string(spec.size()) + " > 6");
    const std::size_t w = a.omega();
    if (w != 6) return pass(check, subject, "omega = " + std::to_string(w) + " != 6");
    if (identify(a, {"PSL3(4)"})) return pass(check, subject, "omega = 6, isomorphic to PSL3(4)");
    if (a.primes().size() > 3)
      return fail(check, subject, "omega = 6 with more than three primes but not PSL3(4)");
    const ElementTable& t = a.table();
    for (const auto& k : a.characteristic_subgroups()) {
      if (k.order() * 60 != a.order()) continue;
      if (elementary_abelian_prime(t, k) != std::optional<std::uint64_t>{2}) continue;
      PermGroup q = quotient(t, k);
      if (isomorphic(q, catalog::build("A5")))
        return pass(check, subject,
                    "omega = 6, characteristic elementary abelian N of order " +
                        std::to_string(k.order()) + " with G/N isomorphic to A5");
    }
    return fail(check, subject,
                "omega = 6 but neither PSL3(4) nor an extension of a characteristic "
                "elementary abelian 2-group by A5");
  });
}

Verdict check_at_list(const std::string& subject, GroupAnalysis& a) {
  const std::string check = "at-consistency";
  return guarded(check, subject, [&] {
    if (a.solvable()) return pass(check, subject, "solvable, hypothesis not met");
    const auto& spec = a.spectrum();
    if (spec.size() > 6)
      return pass(check, subject, "omega >= |spec| = " + std::to_string(spec.size()) + " > 6");
    const std::size_t w = a.omega();
    if (w > 6) return pass(check, subject, "omega = " + std::to_string(w) + " > 6");
    if (!a.is_at()) return pass(check, subject, "omega = " + std::to_string(w) + ", not AT");
    if (auto name = identify(a, kAtNames))
      return pass(check, subject, "AT with omega = " + std::to_string(w) + ", isomorphic to " + *name);
    return fail(check, subject,
                "nonsolvable AT group with omega = " + std::to_string(w) +
                    " outside A5, A6, PSL2(7), PSL2(8), PSL3(4)");
  });
}

Verdict check_three_orbits(const std::string& subject, GroupAnalysis& a) {
  const std::string check = "lm-three";
  return guarded(check, subject, [&] {
    const auto& spec = a.spectrum();
    if (spec.size() > 3)
      return pass(check, subject, "omega >= |spec| = " + std::to_string(spec.size()) + " > 3");
    const std::size_t w = a.omega();
    if (w != 3) return pass(check, subject, "omega = " + std::to_string(w) + " != 3");
    const auto f = factorize(a.order());
    if (f.size() <= 1) return pass(check, subject, "omega = 3, prime-power order");
    if (f.size() != 2)
      return fail(check, subject, "omega = 3 but |G| has " + std::to_string(f.size()) + " prime factors");
    for (int swap = 0; swap < 2; ++swap) {
      auto [p, n] = f[swap];
      auto [q, m] = f[1 - swap];
      if (m != 1) continue;
      SubgroupRecord sylow = sylow_subgroup(a.table(), p);
      if (!is_normal(a.table(), sylow.elements)) continue;
      if (elementary_abelian_prime(a.table(), sylow) != std::optional<std::uint64_t>{p}) continue;
      if (multiplicative_order(p, q) != q - 1) continue;
      return pass(check, subject,
                  "omega = 3, |G| = " + std::to_string(p) + "^" + std::to_string(n) + " * " +
                      std::to_string(q) + ", normal elementary abelian Sylow " +
                      std::to_string(p) + "-subgroup, " + std::to_string(p) +
                      " is a primitive root mod " + std::to_string(q));
    }
    return fail(check, subject, "omega = 3 but no prime pair p^n q with the required structure");
  });
}

Verdict check_orbit_inequality(const std::string& subject, GroupAnalysis& a) {
  const std::string check = "stroppel-ineq";
  return guarded(check, subject, [&] {
    const std::size_t w = a.omega();
    const ElementTable& t = a.table();
    std::ostringstream detail;
    std::size_t checked = 0;
    for (const auto& k : a.characteristic_subgroups()) {
      std::size_t wk, wq;
      if (k.order() == 1) {
        wk = 1;
        wq = w;
      } else if (k.order() == a.order()) {
        wk = w;
        wq = 1;
      } else {
        wk = omega(k.subgroup);
        wq = omega(quotient(t, k));
      }
      ++checked;
      if (w + 1 < wk + wq)
        return fail(check, subject,
                    "|K| = " + std::to_string(k.order()) + ": omega(G) = " + std::to_string(w) +
                        " < " + std::to_string(wk) + " + " + std::to_string(wq) + " - 1");
      if (k.order() != 1 && k.order() != a.order())
        detail << " |K|=" << k.order() << ':' << w << ">=" << wk << '+' << wq << "-1";
    }
    return pass(check, subject,
                std::to_string(checked) + " characteristic subgroups" +
                    (detail.str().empty() ? std::string() : ";" + detail.str()));
  });
}

namespace {

using EntryCheck = Verdict (*)(const std::string&, GroupAnalysis&);

void per_entry(const Corpus& corpus, const Options& opts, const std::string& check,
               EntryCheck fn, Outcome& out) {
  for (const auto& e : corpus.entries) {
    if (e.group.order() > opts.effective_max_order()) {
      out.verdicts.push_back(skip(check, e.name,
                                  "order " + std::to_string(e.group.order()) +
                                      " exceeds max order " +
                                      std::to_string(opts.effective_max_order())));
      continue;
    }
    GroupAnalysis a(e.group, opts.search_options(), opts.effective_max_order());
    if (e.omega_claim) out.verdicts.push_back(check_omega_claim(e, a));
    out.verdicts.push_back(fn(e.name, a));
  }
}

void claims_only(const Corpus& corpus, const Options& opts, Outcome& out) {
  for (const auto& e : corpus.entries) {
    if (!e.omega_claim) continue;
    GroupAnalysis a(e.group, opts.search_options(), opts.effective_max_order());
    out.verdicts.push_back(check_omega_claim(e, a));
  }
}

void verify_squares(const Corpus& corpus, const Options& opts, Outcome& out) {
  const std::string check = "lemma-2-3";
  for (const auto& e : corpus.entries) {
    const std::string subject = "POW(" + e.name + ",2)";
    if (e.group.order() > opts.effective_max_order()) continue;
    Verdict v = guarded(check, subject, [&]() -> Verdict {
      GroupAnalysis h(e.group, opts.search_options(), opts.effective_max_order());
      if (h.order() == 1 || h.is_abelian() || !h.is_simple())
        return pass(check, subject, "");  // filtered out below
      PermGroup g = direct_power(e.group, 2);
      const std::size_t primes = prime_set(g).size();
      if (primes < 3)
        return fail(check, subject, "only " + std::to_string(primes) + " primes divide the order");
      if (g.order() <= std::min(kExactSquareLimit, opts.effective_max_order())) {
        GroupAnalysis sq(g, opts.search_options(), opts.effective_max_order());
        const std::size_t w = sq.omega();
        const bool char_simple = sq.characteristic_subgroups().size() == 2;
        if (!char_simple) return fail(check, subject, "not characteristically simple");
        if (sq.is_simple()) return fail(check, subject, "unexpectedly simple");
        if (w < 7) return fail(check, subject, "omega = " + std::to_string(w) + " < 7");
        return pass(check, subject,
                    "characteristically simple, not simple, omega = " + std::to_string(w) +
                        " >= 7, |pi| = " + std::to_string(primes));
      }
      const auto spec = square_spectrum(h.spectrum());
      if (spec.size() < 7)
        return skip(check, subject,
                    "spectrum bound " + std::to_string(spec.size()) +
                        " is below 7 and the square exceeds the exact limit");
      return pass(check, subject,
                  "omega >= |spec| = " + std::to_string(spec.size()) + " >= 7 (order " +
                      std::to_string(g.order()) + " uses the spectrum bound), |pi| = " +
                      std::to_string(primes));
    });
    if (v.status == Status::Pass && v.reason.empty()) continue;
    out.verdicts.push_back(std::move(v));
  }
}

struct CoprimeCase {
  std::string n;
  std::uint64_t p;
};

const std::vector<CoprimeCase> kCoprimeCases = {
    {"A5", 7}, {"A6", 7}, {"PSL2(7)", 11}, {"PSL2(8)", 11}};

void verify_coprime_products(const Options& opts, Outcome& out) {
  const std::string check = "lemma-2-4";
  for (const auto& c : kCoprimeCases) {
    const std::string subject = "DP(" + c.n + ",C" + std::to_string(c.p) + ")";
    out.verdicts.push_back(guarded(check, subject, [&] {
      GroupAnalysis n(catalog::build(c.n), opts.search_options(), opts.effective_max_order());
      if (n.order() % c.p == 0) return fail(check, subject, "p divides |N|");
      const std::uint64_t aut = n.automorphism_group_order();
      if (aut % c.p == 0) return fail(check, subject, "p divides |Aut(N)|");
      GroupAnalysis m(catalog::build(subject), opts.search_options(), opts.effective_max_order());
      const std::size_t w = m.omega();
      const std::string facts = "omega = " + std::to_string(w) + " (omega(N) = " +
                                std::to_string(n.omega()) + "), |Aut(N)| = " +
                                std::to_string(aut) + " coprime to " + std::to_string(c.p);
      if (w < 8) return fail(check, subject, facts + ", below 8");
      return pass(check, subject, facts);
    }));
  }
}

void verify_extension_families(const Options& opts, Outcome& out) {
  const std::string check = "prop-2-7";
  for (const std::string n_name : {"A5", "A6", "PSL2(7)", "PSL2(8)"}) {
    GroupAnalysis n(catalog::build(n_name), opts.search_options(), opts.effective_max_order());
    for (auto& m : catalog::extension_family(n_name)) {
      out.verdicts.push_back(guarded(check, m.name, [&] {
        if (m.group.order() != m.prime * n.order())
          return fail(check, m.name, "order is not p|N|");
        PermGroup derived = derived_subgroup(m.group);
        if (derived.order() != n.order() || !isomorphic(derived, n.group()))
          return fail(check, m.name, "derived subgroup is not isomorphic to " + n_name);
        GroupAnalysis a(m.group, opts.search_options(), opts.effective_max_order());
        const auto& spec = a.spectrum();
        const std::string s = "|spec| = " + std::to_string(spec.size()) + " {" + join(spec, ",") + "}";
        if (n_name == "PSL2(8)" && m.prime == 7) {
          const std::uint64_t aut = n.automorphism_group_order();
          if (aut % (7 * n.order()) == 0)
            return fail(check, m.name, "Aut(N) admits an index-7 overgroup");
          const std::size_t w = a.omega();
          if (w < 7)
            return fail(check, m.name, s + ", omega = " + std::to_string(w) + " < 7");
          return pass(check, m.name,
                      s + "; direct-product branch: 7|N| does not divide |Aut(N)| = " +
                          std::to_string(aut) + ", omega = " + std::to_string(w) + " >= 7");
        }
        if (spec.size() < 6) return fail(check, m.name, s + " < 6");
        return pass(check, m.name, s + " >= 6");
      }));
    }
  }
}

}  // namespace

Outcome run(std::string_view target, const Corpus& corpus, const Options& opts) {
  Outcome out;
  out.diagnostics = corpus.diagnostics;
  if (target == "theorem-a") {
    per_entry(corpus, opts, "theorem-a", check_small_classification, out);
  } else if (target == "theorem-b") {
    per_entry(corpus, opts, "theorem-b", check_six_orbits, out);
  } else if (target == "stroppel-ineq") {
    per_entry(corpus, opts, "stroppel-ineq", check_orbit_inequality, out);
  } else if (target == "lm-three") {
    per_entry(corpus, opts, "lm-three", check_three_orbits, out);
  } else if (target == "at-consistency") {
    per_entry(corpus, opts, "at-consistency", check_at_list, out);
  } else if (target == "lemma-2-3") {
    claims_only(corpus, opts, out);
    verify_squares(corpus, opts, out);
  } else if (target == "lemma-2-4") {
    claims_only(corpus, opts, out);
    verify_coprime_products(opts, out);
  } else if (target == "prop-2-7") {
    claims_only(corpus, opts, out);
    verify_extension_families(opts, out);
  } else {
    std::string list;
    for (const auto& t : targets()) list += (list.empty() ? "" : ", ") + t;
    throw Error("unknown verify target '" + std::string(target) + "' (expected one of " + list + ")");
  }
  return out;
}

Outcome run(std::string_view target, const Options& opts) {
  if (std::find(targets().begin(), targets().end(), target) == targets().end())
    return run(target, Corpus{}, opts);  // throws
  Corpus corpus;
  if (opts.include_defaults) corpus = default_corpus();
  if (opts.corpus_dir) {
    Corpus extra = load_directory(*opts.corpus_dir);
    for (auto& e : extra.entries) corpus.entries.push_back(std::move(e));
    for (auto& d : extra.diagnostics) corpus.diagnostics.push_back(std::move(d));
  }
  return run(target, corpus, opts);
}

}  // namespace autorbit::verify
