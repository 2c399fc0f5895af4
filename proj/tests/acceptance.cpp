// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "autorbit/catalog.hpp"
#include "autorbit/error.hpp"
#include "autorbit/verifier.hpp"
#include "oracles.hpp"
#include "small_groups.hpp"

using namespace autorbit;

namespace {

struct Criterion {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

verify::Corpus full_corpus() {
  verify::Corpus c = verify::default_corpus();
  verify::Corpus extra = verify::load_directory(AUTORBIT_CORPUS_DIR);
  for (auto& e : extra.entries) c.entries.push_back(std::move(e));
  for (auto& d : extra.diagnostics) c.diagnostics.push_back(std::move(d));
  return c;
}

void spectra(Criterion& c) {
  const std::vector<std::pair<const char*, std::set<std::uint64_t>>> expect = {
      {"A5", {1, 2, 3, 5}},
      {"A6", {1, 2, 3, 4, 5}},
      {"PSL2(7)", {1, 2, 3, 4, 7}},
      {"PSL2(8)", {1, 2, 3, 7, 9}},
      {"PSL3(4)", {1, 2, 3, 4, 5, 7}}};
  for (const auto& [name, spec] : expect) {
    auto t0 = std::chrono::steady_clock::now();
    auto got = spectrum(ElementTable(catalog::build(name)));
    double s = seconds_since(t0);
    c.require(got == spec, std::string("spectrum of ") + name);
    c.require(s < 1.0, std::string(name) + " took " + fmt(s));
    c.notes << ' ' << name << '=' << fmt(s);
  }
}

void landmarks(Criterion& c) {
  const std::vector<std::pair<const char*, std::size_t>> expect = {
      {"C1", 1},      {"E2^1", 2},    {"E2^4", 2},    {"E3^2", 2},      {"E5^1", 2},
      {"A5", 4},      {"A6", 5},      {"PSL2(7)", 5}, {"PSL2(8)", 5},   {"PSL3(4)", 6}};
  for (const auto& [name, w] : expect) {
    auto t0 = std::chrono::steady_clock::now();
    auto g = catalog::build(name);
    std::size_t got = omega(g);
    double s = seconds_since(t0);
    c.require(got == w, std::string(name) + " omega " + std::to_string(got));
    const double budget = g.order() <= 504 ? 60.0 : 600.0;
    c.require(s <= budget, std::string(name) + " took " + fmt(s));
    if (g.order() >= 360) c.notes << ' ' << name << '=' << got << '/' << fmt(s);
  }
}

void order_960(Criterion& c) {
  bool any = false;
  for (const char* name : {"ASL24A", "ASL24B"}) {
    GroupAnalysis a(catalog::build(name));
    const std::size_t w = a.omega();
    bool has = false;
    for (const auto& k : a.characteristic_subgroups()) {
      if (k.order() != 16) continue;
      if (!verify::elementary_abelian_prime(a.table(), k)) continue;
      if (isomorphic(quotient(a.table(), k), catalog::build("A5"))) has = true;
    }
    c.notes << ' ' << name << ": omega=" << w << (has ? " char 2^4 with quotient A5" : "");
    if (w == 6 && has) any = true;
  }
  c.require(any, "no order-960 group with omega 6 and a characteristic 2^4");
}

void oracle_equivalence(Criterion& c, const verify::Corpus& corpus) {
  std::vector<PermGroup> groups;
  for (const auto& e : corpus.entries)
    if (e.group.order() <= 60) groups.push_back(e.group);
  for (const auto& g : test_groups::small_named()) groups.push_back(g.group);
  std::size_t tiny = 0;
  for (const auto& g : groups) {
    ElementTable t(g);
    oracle::Table ot(g.generators(), g.degree());
    auto auts = oracle::automorphisms_by_tuples(ot);
    auto part = orbit_partition(t, automorphism_generators(t).all());
    c.require(automorphism_group_order(t) == auts.size(), "|Aut| of " + g.name());
    std::set<std::set<oracle::Images>> mine;
    for (const auto& cell : part.cells) {
      std::set<oracle::Images> s;
      for (Index x : cell) {
        auto e = t.element(x);
        s.insert(oracle::Images(e.begin(), e.end()));
      }
      mine.insert(s);
    }
    c.require(mine == oracle::orbits(ot, auts), "orbits of " + g.name());
    if (g.order() <= 8) {
      ++tiny;
      c.require(oracle::automorphisms_by_bijections(ot) == auts, "bijections for " + g.name());
    }
  }
  c.notes << ' ' << groups.size() << " groups, " << tiny << " checked against all bijections";
}

void orbit_inequality(Criterion& c, const verify::Corpus& corpus) {
  std::size_t groups = 0;
  for (const auto& e : corpus.entries) {
    if (e.group.order() > 5000) continue;
    GroupAnalysis a(e.group);
    auto v = verify::check_orbit_inequality(e.name, a);
    c.require(v.status == verify::Status::Pass, e.name + ": " + v.reason);
    ++groups;
  }
  c.notes << ' ' << groups << " groups, 0 violations";
}

void lemma_suite(Criterion& c) {
  const std::size_t sq = omega(catalog::build("POW(A5,2)"));
  c.require(sq >= 7, "omega(A5 x A5) = " + std::to_string(sq));
  const std::size_t dp = omega(catalog::build("DP(A5,C7)"));
  c.require(dp == 8, "omega(A5 x C7) = " + std::to_string(dp));
  c.notes << " omega(A5xA5)=" << sq << " omega(A5xC7)=" << dp;
  verify::Options opts;
  for (const char* t : {"prop-2-7", "at-consistency", "lemma-2-3", "lemma-2-4"}) {
    auto out = verify::run(t, opts);
    c.require(out.exit_code() == 0, std::string(t) + " exit " + std::to_string(out.exit_code()));
    c.notes << ' ' << t << '=' << out.count(verify::Status::Pass) << "/" << out.verdicts.size();
  }
}

void theorem_commands(Criterion& c) {
  verify::Options opts;
  for (const char* t : {"theorem-a", "theorem-b"}) {
    auto out = verify::run(t, opts);
    c.require(out.exit_code() == 0, std::string(t) + " exit " + std::to_string(out.exit_code()));
  }
  verify::Corpus falsified = verify::default_corpus();
  auto a5 = catalog::describe("A5");
  falsified.entries.push_back({"A5-falsified", "fixture", a5.group(), 3});
  for (const char* t : {"theorem-a", "theorem-b"}) {
    auto out = verify::run(t, falsified, opts);
    c.require(out.exit_code() == 1, std::string(t) + " with falsified entry exit " +
                                        std::to_string(out.exit_code()));
  }
  c.notes << " default corpus exits 0; falsified claim exits 1";
}

void engine_properties(Criterion& c, const verify::Corpus& corpus) {
  std::mt19937 rng(20240601);
  std::size_t random_checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<Permutation> gens;
    const unsigned k = 1 + rng() % 3;
    for (unsigned i = 0; i < k; ++i) {
      std::vector<Point> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<Point>(j);
      std::shuffle(v.begin(), v.end(), rng);
      gens.push_back(Permutation(v));
    }
    PermGroup g(n, gens);
    c.require(g.order() <= 10000, "random group too large");
    c.require(g.order() == oracle::closure(gens, n).size(), "BSGS order of random group");
    ++random_checked;
  }

  std::size_t class_groups = 0, aut_groups = 0, maps = 0;
  for (const auto& e : corpus.entries) {
    ElementTable t(e.group);
    std::uint64_t total = 0;
    bool divides = true;
    for (const auto& cls : conjugacy_classes(t)) {
      total += cls.size;
      divides &= t.size() % cls.size == 0;
    }
    c.require(total == t.size() && divides, "class equation for " + e.name);
    ++class_groups;
    if (t.size() > 5000) continue;
    ++aut_groups;
    for (const auto& a : automorphism_generators(t).all()) {
      ++maps;
      bool ok = true;
      for (Index x = 0; x < t.size() && ok; ++x)
        for (Index y = 0; y < t.size(); ++y)
          if (a(t.multiply(x, y)) != t.multiply(a(x), a(y))) {
            ok = false;
            break;
          }
      c.require(ok, "automorphism of " + e.name + " breaks a product");
    }
  }
  c.notes << ' ' << random_checked << " random groups, class equation on " << class_groups
          << " groups, " << maps << " maps checked exhaustively on " << aut_groups << " groups";
}

}  // namespace

int main() {
  const verify::Corpus corpus = full_corpus();
  if (!corpus.diagnostics.empty()) {
    for (const auto& d : corpus.diagnostics) std::cerr << d << '\n';
    return 1;
  }

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"spectra of the five simple groups", spectra},
      {"orbit-count landmarks", landmarks},
      {"order 960 extension of 2^4 by A5 with six orbits", order_960},
      {"oracle equivalence", [&](Criterion& c) { oracle_equivalence(c, corpus); }},
      {"orbit-count inequality over characteristic subgroups",
       [&](Criterion& c) { orbit_inequality(c, corpus); }},
      {"lemma suite", lemma_suite},
      {"theorem commands", theorem_commands},
      {"engine properties", [&](Criterion& c) { engine_properties(c, corpus); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    all &= c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << fmt(seconds_since(t0)) << ")" << c.notes.str() << std::endl;
  }
  return all ? 0 : 1;
}
