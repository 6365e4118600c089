#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdouble/group.hpp"

namespace qdouble {

struct CatalogExpectations {
  std::size_t order = 1;
  std::optional<std::size_t> class_count;
  std::optional<std::size_t> double_rank;
  std::optional<std::vector<std::size_t>> block_sizes;
  /// Index of the natural two-dimensional irrep in the identity block, where one is documented.
  std::optional<std::size_t> fundamental_irrep;

  std::uint64_t global_dimension() const { return static_cast<std::uint64_t>(order) * order; }
};

struct CatalogEntry {
  std::string name;
  std::string parameter;  // e.g. "n in 1..64"; empty when the entry takes none
  std::int64_t min_param = 0;
  std::int64_t max_param = 0;
  std::string construction;
};

/// Every entry in display order.
const std::vector<CatalogEntry>& catalog();

/// Throws UnknownEntry for an unknown name and ParameterOutOfRange for a
/// missing, superfluous or out-of-range parameter.
FiniteGroup build(const std::string& name, std::optional<std::int64_t> param = std::nullopt,
                  std::size_t max_order = kDefaultMaxOrder);
CatalogExpectations expectations(const std::string& name, std::optional<std::int64_t> param = std::nullopt);

/// A group specification: a catalog name with optional ":param"
/// ("binary_tetrahedral", "cyclic:6"), a permutation list
/// "perm:(0,1,2)(0,1)" in which every parenthesized cycle is one generator and
/// "[(0,1)(2,3)]" bundles several cycles into one generator, or a matrix list
/// "mat:p=3:[[1,1],[0,1]];[[0,1],[2,0]]". Throws ParseError on bad syntax.
FiniteGroup parse_group_spec(const std::string& spec, std::size_t max_order = kDefaultMaxOrder);

/// Catalog expectations for a spec naming a catalog entry, nullopt for literals.
std::optional<CatalogExpectations> spec_expectations(const std::string& spec);

/// Text listing of entries, parameters, orders and double ranks where known.
std::string list_groups_text();

}  // namespace qdouble
