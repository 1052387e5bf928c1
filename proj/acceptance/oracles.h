#ifndef GUARD_GILT_ORACLES_H
#define GUARD_GILT_ORACLES_H

// Slow, independent recomputations used to cross-check the library. Nothing
// here touches stabilizer chains, coset tables or congruence lattices.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "gilt/bitset.h"
#include "gilt/lattice.h"
#include "gilt/perm.h"
#include "gilt/subgroup_table.h"

namespace gilt::oracle
{

// All products of generators, by breadth-first search from the identity.
std::set<Permutation> naive_closure(std::size_t degree,
                                    std::vector<Permutation> const &gens);

// Intersection of all conjugates of h by elements of g.
std::set<Permutation> core_by_conjugates(std::set<Permutation> const &g,
                                         std::set<Permutation> const &h);

// Number of set partitions of an n-set, enumerated recursively as lists of
// blocks.
std::uint64_t bell_by_enumeration(unsigned n);

// Tries every bijection; only for small lattices.
bool isomorphic_by_bijections(FiniteLattice const &a, FiniteLattice const &b);

/// Normal structure of a small group read off its element table.
struct NormalStructure
{
  // Nontrivial normal subgroups, from the full subgroup list.
  std::vector<Bitset> normal;
  // Inclusion-minimal members of `normal`.
  std::vector<Bitset> minimal;
};

NormalStructure normal_structure(SubgroupLattice const &sub);

// Elements commuting with every element of s.
Bitset centralizer(ElementTable const &t, Bitset const &s);

// Derived series by closing all commutators at each step.
bool solvable(ElementTable const &t);

// Some bijection to the element table of S_n or A_n preserving products.
// Exhaustive over images of two generators.
bool alt_or_sym(ElementTable const &t);

} // namespace gilt::oracle

#endif // GUARD_GILT_ORACLES_H
