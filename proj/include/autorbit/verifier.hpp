#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autorbit/analysis.hpp"

namespace autorbit::verify {

enum class Status { Pass, Fail, Skip };
std::string_view to_string(Status s);

struct Verdict {
  std::string check;
  std::string subject;
  Status status = Status::Pass;
  std::string reason;
};

struct CorpusEntry {
  std::string name;
  std::string source;  // "catalog" or the file path
  PermGroup group;
  std::optional<std::size_t> omega_claim;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> diagnostics;  // unreadable or malformed files
};

/// Catalog groups, extension families and the direct products and powers
/// used by the structural checks, in a fixed order.
const std::vector<std::string>& default_corpus_names();
Corpus default_corpus();
/// Every `*.group` file in `dir`, by filename. Parse failures become
/// diagnostics; a missing directory throws Error.
Corpus load_directory(const std::filesystem::path& dir);

struct Options {
  std::optional<std::filesystem::path> corpus_dir;
  bool include_defaults = true;
  std::uint64_t max_order = 0;  // 0 means the element cap
  std::optional<double> timeout_secs;

  std::uint64_t effective_max_order() const;
  SearchOptions search_options() const;
};

struct Outcome {
  std::vector<Verdict> verdicts;
  std::vector<std::string> diagnostics;

  std::size_t count(Status s) const;
  /// 0 when everything passed, 1 on any failure, 2 on skips or diagnostics.
  int exit_code() const;
};

/// theorem-a, theorem-b, stroppel-ineq, lemma-2-3, lemma-2-4, prop-2-7,
/// lm-three, at-consistency
const std::vector<std::string>& targets();
/// Throws Error for an unknown target.
Outcome run(std::string_view target, const Options& options);
Outcome run(std::string_view target, const Corpus& corpus, const Options& options);

// Per-group checks, shared with the report builder.
Verdict check_omega_claim(const CorpusEntry& e, GroupAnalysis& a);
Verdict check_small_classification(const std::string& subject, GroupAnalysis& a);
Verdict check_six_orbits(const std::string& subject, GroupAnalysis& a);
Verdict check_at_list(const std::string& subject, GroupAnalysis& a);
Verdict check_three_orbits(const std::string& subject, GroupAnalysis& a);
Verdict check_orbit_inequality(const std::string& subject, GroupAnalysis& a);

/// Name of the group among `names` (catalog grammar) isomorphic to a's group.
std::optional<std::string> identify(GroupAnalysis& a, const std::vector<std::string>& names);
/// Prime p when the subgroup is elementary abelian of exponent p.
std::optional<std::uint64_t> elementary_abelian_prime(const ElementTable& t,
                                                      const SubgroupRecord& s);
/// Element orders of H x H: all lcm(a, b) for a, b in spec(H).
std::set<std::uint64_t> square_spectrum(const std::set<std::uint64_t>& spec);

}  // namespace autorbit::verify
