#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "autorbit/perm_group.hpp"

namespace autorbit::catalog {

struct GroupDescriptor {
  std::string name;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::vector<Permutation> generators;
  std::string provenance;

  PermGroup group() const { return PermGroup(degree, generators, name); }
};

/// Grammar:
///   A<n> S<n> C<n> E<p>^<k>
///   PSL2(q) PGL2(q) PSigmaL2(q) PGammaL2(q)   q in {4,5,7,8,9}
///   PSL3(4) M10 ASL24A ASL24B
///   DP(<name>,<name>) POW(<name>,<k>)
/// Whitespace is ignored. Throws UnknownGroupError.
GroupDescriptor describe(std::string_view name);
PermGroup build(std::string_view name);

/// Every construction is checked against its closed-form order.
std::uint64_t expected_order(std::string_view name);

struct FamilyMember {
  std::string name;
  std::uint64_t prime = 0;
  PermGroup group;
};

/// All groups M with |M| = p|N|, p in pi(N), containing N as a normal
/// subgroup: N x C_p and the overgroups of N inside Aut(N) of index p.
/// N is one of A5, A6, PSL2(7), PSL2(8).
std::vector<FamilyMember> extension_family(std::string_view n_name);

/// The three index-2 overgroups of PSL2(9) inside PGammaL2(9), in the order
/// PGL2(9), PSigmaL2(9) (isomorphic to S6), M10.
std::vector<PermGroup> psl2_9_index_two_overgroups();

}  // namespace autorbit::catalog
