#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "autorbit/automorphisms.hpp"
#include "autorbit/element_table.hpp"

namespace autorbit::detail {

/// Right Cayley graph of a source group for a fixed generating sequence,
/// with one breadth-first traversal per generator prefix.
class CayleyFrame {
 public:
  CayleyFrame(const ElementTable& src, std::vector<Index> gens);

  const ElementTable& source() const { return *src_; }
  const std::vector<Index>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  Index next(Index x, std::size_t i) const { return next_[static_cast<std::size_t>(x) * rank() + i]; }
  /// Elements of <g_0..g_{j-1}> in breadth-first discovery order.
  const std::vector<Index>& traversal(std::size_t j) const { return traversal_[j]; }

 private:
  const ElementTable* src_;
  std::vector<Index> gens_;
  std::vector<Index> next_;
  std::vector<std::vector<Index>> traversal_;  // index 0 unused
};

/// Extends a generator-image assignment along the Cayley graph and rejects
/// it at the first inconsistency or collision.
class ExtensionChecker {
 public:
  ExtensionChecker(const CayleyFrame& frame, const ElementTable& dst);

  /// True iff g_i -> images[i] (i < j) extends to an injective homomorphism
  /// on <g_0..g_{j-1}>.
  bool extend(std::size_t j, std::span<const Index> images);
  /// Valid after a successful extend(rank()).
  std::vector<Index> map() const;

 private:
  const CayleyFrame* frame_;
  const ElementTable* dst_;
  std::vector<Index> phi_;
  std::vector<std::uint32_t> assigned_;
  std::vector<std::uint32_t> used_;
  std::uint32_t epoch_ = 0;
};

/// Backtracking over generator images. Candidates for the first generator
/// are class representatives of the target (inner-twist reduction), later
/// generators range over whole fingerprint buckets. `on_found` receives the
/// full element map and images; returning false stops the search.
struct HomSearch {
  const ElementTable& src;
  const ClassData& src_classes;
  const ElementTable& dst;
  const ClassData& dst_classes;
  std::vector<Index> base;
  const SearchOptions& options;

  using Callback = std::function<bool(const std::vector<Index>& map,
                                      const std::vector<Index>& images)>;
  /// Returns the representatives tried for the first generator.
  std::vector<Index> run(const Callback& on_found) const;
};

}  // namespace autorbit::detail
