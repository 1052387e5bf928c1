#ifndef GUARD_GILT_SEARCH_H
#define GUARD_GILT_SEARCH_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.h"
#include "config.h"
#include "io.h"
#include "lattice.h"
#include "perm_group.h"

namespace gilt
{

/// L ~ [H, G], with iso.mapping[i] the element of L matched to element i of
/// interval_lattice(group, subgroup).
struct Witness
{
  std::string name;
  PermGroup group;
  PermGroup subgroup;
  LatticeIso iso;
  bool core_free = false;
  bool hereditary_core_free = false;
};

struct SearchOptions
{
  bool core_free_only = false;
  // Requires every H <= Y < G to be core-free.
  bool hereditary = false;
  std::uint64_t max_group_order = 2000;
  // 0 means no limit.
  std::size_t limit = 10;
  // One subgroup per conjugacy class. Off only for testing the pruning.
  bool prune_conjugates = true;
};

struct SearchResult
{
  std::vector<Witness> witnesses;
  // More witnesses existed than the limit allowed.
  bool truncated = false;
};

// Sorted by (|G|, |H|), then catalog order, then subgroup order. Throws
// EmptyCatalog, BoundExceeded.
SearchResult find_representations(FiniteLattice const &target,
                                  Catalog const &catalog,
                                  SearchOptions const &opts = {},
                                  Config const &config = {});

// Recomputes the interval, iso and flags from scratch. Never throws.
bool certify(Witness const &w, FiniteLattice const &target,
             Config const &config = {});

Json witness_to_json(Witness const &w);
// Throws ParseError.
Witness witness_from_json(Json const &j);

Json search_result_to_json(SearchResult const &r);

} // namespace gilt

#endif // GUARD_GILT_SEARCH_H
