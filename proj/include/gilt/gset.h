#ifndef GUARD_GILT_GSET_H
#define GUARD_GILT_GSET_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bitset.h"
#include "config.h"
#include "lattice.h"
#include "perm_group.h"

namespace gilt
{

/// A partition of the points of a G-set. Block ids are normalized so that
/// blocks are numbered in order of their smallest point, which makes equal
/// partitions compare equal.
struct BlockSystem
{
  std::vector<std::uint32_t> class_of;
  std::size_t block_count = 0;

  static BlockSystem discrete(std::size_t n);
  static BlockSystem full(std::size_t n);

  // Relabels arbitrary class ids into normal form.
  static BlockSystem from_labels(std::vector<std::uint32_t> const &labels);

  std::size_t degree() const
  { return class_of.size(); }

  Bitset block_of(Point p) const;

  // Every block of *this is contained in a block of other.
  bool refines(BlockSystem const &other) const;

  friend bool operator==(BlockSystem const &, BlockSystem const &) = default;
  friend bool operator<(BlockSystem const &lhs, BlockSystem const &rhs)
  { return lhs.class_of < rhs.class_of; }
};

BlockSystem join_partitions(BlockSystem const &p, BlockSystem const &q);
BlockSystem meet_partitions(BlockSystem const &p, BlockSystem const &q);

// Each generator maps blocks onto blocks.
bool is_invariant(TransitiveGSet const &a, BlockSystem const &b);

// Finest invariant partition with a and b in one block. Throws InvalidPoint
// for a == b or points out of range.
BlockSystem principal_congruence(TransitiveGSet const &a, Point x, Point y);

struct CongruenceLattice
{
  FiniteLattice lattice;
  // blocks[i] is lattice element i, sorted by size of the block of point 0,
  // then by class labels. Element 0 is the discrete partition.
  std::vector<BlockSystem> blocks;
};

// Throws IntransitiveAction.
CongruenceLattice congruence_lattice(TransitiveGSet const &a,
                                     Config const &config = {});

// Congruence lattice of the coset action of G on H's right cosets.
FiniteLattice interval_lattice(PermGroup const &g, PermGroup const &h,
                               Config const &config = {});

struct IntervalSubgroups
{
  FiniteLattice lattice;
  // subgroups[i] is the intermediate subgroup for lattice element i: H
  // extended by the cosets in the block of the trivial coset.
  std::vector<PermGroup> subgroups;
};

IntervalSubgroups interval_subgroups(PermGroup const &g, PermGroup const &h,
                                     Config const &config = {});

} // namespace gilt

#endif // GUARD_GILT_GSET_H
