#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "autorbit/verifier.hpp"

namespace autorbit::report {

struct CharacteristicSummary {
  std::uint64_t order = 1;
  std::optional<std::uint64_t> elementary_abelian_prime;
};

struct OrbitCell {
  std::uint64_t element_order = 1;
  std::size_t size = 0;
};

struct VerdictReport {
  std::string name;
  std::string source;
  std::size_t degree = 0;
  std::uint64_t order = 1;
  std::set<std::uint64_t> primes;
  bool solvable = true;
  std::optional<bool> simple;
  std::set<std::uint64_t> spectrum;
  std::optional<std::size_t> classes;
  std::optional<std::size_t> omega;
  std::optional<bool> at;
  std::optional<std::uint64_t> aut_order;
  std::vector<OrbitCell> cells;
  std::vector<CharacteristicSummary> characteristic;
  std::vector<verify::Verdict> verdicts;
  std::optional<std::string> skipped;  // why table-based fields are missing
  double seconds = 0;
};

/// A catalog name or the path of a group file.
verify::CorpusEntry resolve(std::string_view spec);

/// `full` adds the characteristic subgroups and the per-group verdicts.
VerdictReport build(const verify::CorpusEntry& entry, const verify::Options& options,
                    bool full = true);

/// key: value lines; timing is only printed on request so that output is
/// reproducible byte for byte.
std::string to_text(const VerdictReport& r, bool timing = false);
std::string to_omega_text(const VerdictReport& r, bool timing = false);
/// One JSON document; indent < 0 gives a single line.
std::string to_json(const VerdictReport& r, bool timing = false, int indent = 2);

}  // namespace autorbit::report
