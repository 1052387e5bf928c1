#ifndef GUARD_GILT_SWEEPS_H
#define GUARD_GILT_SWEEPS_H

#include <string>
#include <utility>
#include <vector>

#include "config.h"
#include "io.h"
#include "perm_group.h"

namespace gilt
{

using NamedGroups = std::vector<std::pair<std::string, PermGroup>>;

struct SweepResult
{
  std::size_t groups = 0;
  std::size_t cases = 0;
  // Antichain sweep: cases with at least two permuting complements.
  std::size_t nontrivial = 0;
  // "name/..." labels of failing cases, in group order.
  std::vector<std::string> failures;

  bool ok() const
  { return failures.empty(); }
};

// Every triple (A <= B, C) of Sub(G): A(C n B) = AC n B and (C n B)A = CA n B
// as element sets. Throws BoundExceeded.
SweepResult dedekind_sweep(NamedGroups const &groups, Config const &config = {});

// Every (H, A) with H <= A: the complements of A in [H, G] that permute with A
// form an antichain. Subsets of an antichain are antichains, so this covers
// every permuting subset. Throws BoundExceeded.
SweepResult antichain_sweep(NamedGroups const &groups, Config const &config = {});

Json sweep_to_json(SweepResult const &r);

} // namespace gilt

#endif // GUARD_GILT_SWEEPS_H
