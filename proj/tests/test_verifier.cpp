#include <filesystem>
#include <fstream>

#include "autorbit/catalog.hpp"
#include "autorbit/error.hpp"
#include "autorbit/report.hpp"
#include "autorbit/verifier.hpp"
#include "doctest.h"

using namespace autorbit;
namespace fs = std::filesystem;

namespace {

verify::CorpusEntry entry(const char* name) {
  auto d = catalog::describe(name);
  return {d.name, "catalog", d.group(), std::nullopt};
}

verify::Corpus corpus_of(std::initializer_list<const char*> names) {
  verify::Corpus c;
  for (auto n : names) c.entries.push_back(entry(n));
  return c;
}

fs::path temp_dir(const std::string& tag) {
  auto dir = fs::temp_directory_path() / ("autorbit_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("per-group checks") {
  verify::Options opts;
  {
    GroupAnalysis a(catalog::build("A6"));
    auto v = verify::check_small_classification("A6", a);
    CHECK(v.status == verify::Status::Pass);
    CHECK(v.reason == "omega = 5, isomorphic to A6");
  }
  {
    GroupAnalysis a(catalog::build("ASL24A"));
    auto v = verify::check_six_orbits("ASL24A", a);
    CHECK(v.status == verify::Status::Pass);
    CHECK(v.reason.find("order 16") != std::string::npos);
    auto s = verify::check_orbit_inequality("ASL24A", a);
    CHECK(s.status == verify::Status::Pass);
    CHECK(s.reason.find("|K|=16:6>=2+4-1") != std::string::npos);
  }
  {
    GroupAnalysis a(catalog::build("A4"));
    auto v = verify::check_three_orbits("A4", a);
    CHECK(v.status == verify::Status::Pass);
    CHECK(v.reason.find("2 is a primitive root mod 3") != std::string::npos);
  }
  {
    GroupAnalysis a(catalog::build("PSL3(4)"));
    CHECK(verify::check_at_list("PSL3(4)", a).reason == "AT with omega = 6, isomorphic to PSL3(4)");
  }
}

TEST_CASE("square spectra") {
  CHECK(verify::square_spectrum({1, 2, 3, 5}) == std::set<std::uint64_t>{1, 2, 3, 5, 6, 10, 15});
}

TEST_CASE("targets on small corpora") {
  verify::Options opts;
  auto c = corpus_of({"S3", "A4", "A5", "PSL2(7)", "DP(C2,C4)"});
  for (const auto& t : verify::targets()) {
    if (t == "lemma-2-4" || t == "prop-2-7") continue;  // fixed instance lists, run below
    CAPTURE(t);
    auto out = verify::run(t, c, opts);
    CHECK(out.exit_code() == 0);
  }
  CHECK(verify::run("lemma-2-4", verify::Corpus{}, opts).exit_code() == 0);
  CHECK(verify::run("prop-2-7", verify::Corpus{}, opts).exit_code() == 0);
  CHECK_THROWS_AS(verify::run("theorem-c", c, opts), Error);
}

TEST_CASE("false claims fail and capacity limits skip") {
  verify::Options opts;
  auto c = corpus_of({"A5"});
  c.entries[0].omega_claim = 3;
  auto out = verify::run("theorem-a", c, opts);
  CHECK(out.exit_code() == 1);
  c.entries[0].omega_claim = 4;
  CHECK(verify::run("theorem-a", c, opts).exit_code() == 0);

  opts.max_order = 100;
  auto big = corpus_of({"A6"});
  CHECK(verify::run("theorem-a", big, opts).exit_code() == 2);
}

TEST_CASE("directory loading") {
  auto dir = temp_dir("load");
  std::ofstream(dir / "b.group") << "name: A5\ndegree: 5\ngens: (1 2 3 4 5), (3 4 5)\n";
  std::ofstream(dir / "a.group") << "degree: 3\ngens: (1 2 3)\n";
  std::ofstream(dir / "c.group") << "degree: 3\ngens: (1 2 2)\n";
  std::ofstream(dir / "notes.txt") << "ignored\n";
  auto c = verify::load_directory(dir);
  REQUIRE(c.entries.size() == 2);
  CHECK(c.entries[0].name == "a");
  CHECK(c.entries[1].name == "A5");
  CHECK(c.diagnostics.size() == 1);
  CHECK_THROWS_AS(verify::load_directory(dir / "missing"), Error);
  fs::remove_all(dir);
}

TEST_CASE("reports are deterministic") {
  verify::Options opts;
  auto e = entry("S4");
  auto r1 = report::build(e, opts), r2 = report::build(e, opts);
  CHECK(report::to_text(r1) == report::to_text(r2));
  CHECK(report::to_json(r1) == report::to_json(r2));
  const std::string text = report::to_text(r1);
  CHECK(text.find("omega: 5\n") != std::string::npos);
  CHECK(text.find("characteristic: 1 4(E2) 12 24\n") != std::string::npos);
  CHECK(text.find("seconds") == std::string::npos);
  CHECK(report::to_text(r1, true).find("seconds: ") != std::string::npos);
}

TEST_CASE("oversized groups are reported as skipped") {
  verify::Options opts;
  opts.max_order = 50;
  auto r = report::build(entry("A5"), opts);
  REQUIRE(r.skipped.has_value());
  CHECK(r.skipped->find("60") != std::string::npos);
  CHECK(report::to_text(r).find("skipped: ") != std::string::npos);
}

TEST_CASE("resolve names and files") {
  CHECK(report::resolve("PSL2(7)").group.order() == 168);
  auto dir = temp_dir("resolve");
  std::ofstream(dir / "s3.group") << "name: S3\ndegree: 3\ngens: (1 2), (1 2 3)\n";
  auto e = report::resolve((dir / "s3.group").string());
  CHECK(e.name == "S3");
  CHECK(e.group.order() == 6);
  CHECK_THROWS_AS(report::resolve("nonsense"), UnknownGroupError);
  fs::remove_all(dir);
}

}  // TEST_SUITE
