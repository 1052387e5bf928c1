#ifndef GUARD_GILT_SUBGROUP_TABLE_H
#define GUARD_GILT_SUBGROUP_TABLE_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "bitset.h"
#include "config.h"
#include "lattice.h"
#include "perm_group.h"

namespace gilt
{

/// All elements of a small group with a full multiplication table. Subsets of
/// the group are Bitsets over element indices; index 0 is the identity.
class ElementTable
{
public:
  // Throws BoundExceeded above config.brute_force_order_bound.
  explicit ElementTable(PermGroup const &g, Config const &config = {});

  PermGroup const &group() const
  { return _group; }

  std::size_t order() const
  { return _elements.size(); }

  Permutation const &element(std::uint32_t i) const
  { return _elements[i]; }

  // Throws NotMembers.
  std::uint32_t index_of(Permutation const &p) const;

  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const
  { return _mul[static_cast<std::size_t>(i) * _elements.size() + j]; }

  std::uint32_t inverse(std::uint32_t i) const
  { return _inv[i]; }

  Bitset empty_set() const
  { return Bitset(_elements.size()); }

  // Subgroup generated by the given element indices.
  Bitset closure(std::vector<std::uint32_t> const &gens) const;

  // Throws NotASubgroup unless h <= group().
  Bitset elements_of(PermGroup const &h) const;

  // Generators picked greedily in element order.
  PermGroup group_of(Bitset const &s) const;

  // {ab : a in A, b in B}
  Bitset product(Bitset const &a, Bitset const &b) const;

  // s is closed under conjugation by the generators of group().
  bool is_normal(Bitset const &s) const;

private:
  PermGroup _group;
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, std::uint32_t> _index;
  std::vector<std::uint32_t> _mul;
  std::vector<std::uint32_t> _inv;
};

/// Sub(G) by exhaustive enumeration.
struct SubgroupLattice
{
  std::shared_ptr<ElementTable const> table;
  // Sorted by (order, element set); 0 is trivial, the last one is G.
  std::vector<Bitset> subgroups;
  FiniteLattice lattice;
  std::unordered_map<Bitset, Element> index;

  PermGroup group(std::size_t i) const
  { return table->group_of(subgroups[i]); }

  // Lattice element of a subgroup of G. Throws NotASubgroup.
  Element find(PermGroup const &h) const;
  Element find(Bitset const &s) const;
};

// Join-closure of the cyclic subgroups. Throws BoundExceeded.
SubgroupLattice subgroup_lattice_bruteforce(PermGroup const &g,
                                            Config const &config = {});

// {K : H <= K <= G} as a sublattice, elements in increasing subgroup order.
// Throws BoundExceeded, NotASubgroup.
FiniteLattice interval_bruteforce(PermGroup const &g, PermGroup const &h,
                                  Config const &config = {});

// Same, reusing an enumerated Sub(G); second component lists the subgroup
// indices of the interval elements.
std::pair<FiniteLattice, std::vector<Element>>
interval_bruteforce(SubgroupLattice const &sub, Element h);

// B in [H, G] with A n B = H and <A, B> = G. Throws BoundExceeded,
// NotInInterval.
std::vector<PermGroup> complements_in_interval(PermGroup const &g,
                                               PermGroup const &h,
                                               PermGroup const &a,
                                               Config const &config = {});

// Subgroup indices, for callers that already hold Sub(G).
std::vector<Element> complements_in_interval(SubgroupLattice const &sub,
                                             Element h, Element a);

} // namespace gilt

#endif // GUARD_GILT_SUBGROUP_TABLE_H
