#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autorbit/catalog.hpp"

namespace autorbit {

/// Plain-text group description:
///
///   # comment
///   name: A5
///   degree: 5
///   gens:
///   (1 2 3 4 5)
///   [1,2,4,5,3]
///   omega: 4
///
/// Generators may also follow `gens:` on the same line, separated by commas
/// between cycle strings or image lists. `omega:` is an optional claim that
/// verification cross-checks.
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<std::size_t> omega_claim;

  catalog::GroupDescriptor descriptor() const;
  PermGroup group() const;
};

/// Throws ParseError (with the offending line) or DegreeMismatch.
GroupFile parse_group_file(std::string_view text);
/// Canonical text: generators in cycle notation, one per line.
std::string serialize(const GroupFile& file);
/// Reads and parses a file. A missing name defaults to the file stem.
GroupFile load_group_file(const std::filesystem::path& path);

}  // namespace autorbit
