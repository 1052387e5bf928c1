#ifndef GUARD_GILT_LATTICE_H
#define GUARD_GILT_LATTICE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bitset.h"
#include "config.h"

namespace gilt
{

using Element = std::uint32_t;
using Cover = std::pair<Element, Element>;

/// A finite lattice on opaque element indices 0..size-1.
///
/// Construction validates the lattice axioms exhaustively: the order must be
/// a partial order and every pair must have a unique meet and join. The
/// stored cover list is the transitive reduction of the order, sorted.
class FiniteLattice
{
public:
  // Each (a, b) says a is below b. Redundant comparabilities are allowed and
  // dropped from the cover list. Throws InvalidPoint, NotAPartialOrder,
  // NotALattice, NoBoundedTop.
  static FiniteLattice from_covers(std::size_t size,
                                   std::vector<Cover> const &covers);

  // down[y] = {x : x <= y}. Same errors as from_covers.
  static FiniteLattice from_down_sets(std::vector<Bitset> down);

  std::size_t size() const
  { return _size; }

  bool leq(Element a, Element b) const
  { return _down[b].test(a); }

  Element bottom() const
  { return _bottom; }

  Element top() const
  { return _top; }

  Element meet(Element a, Element b) const
  { return _meet[a * _size + b]; }

  Element join(Element a, Element b) const
  { return _join[a * _size + b]; }

  std::vector<Cover> const &covers() const
  { return _covers; }

  std::vector<Element> const &upper_covers(Element a) const
  { return _upper[a]; }

  std::vector<Element> const &lower_covers(Element a) const
  { return _lower[a]; }

  Bitset const &down_set(Element a) const
  { return _down[a]; }

  Bitset const &up_set(Element a) const
  { return _up[a]; }

  // Length of the longest chain from the bottom to a.
  std::size_t rank(Element a) const
  { return _rank[a]; }

  std::size_t height() const
  { return _rank[_top]; }

  std::vector<Element> atoms() const
  { return _upper[_bottom]; }

  friend bool operator==(FiniteLattice const &lhs, FiniteLattice const &rhs)
  { return lhs._size == rhs._size && lhs._covers == rhs._covers; }

private:
  FiniteLattice() = default;

  static FiniteLattice build(std::vector<Bitset> down);

  std::size_t _size = 0;
  std::vector<Bitset> _down, _up;
  std::vector<Cover> _covers;
  std::vector<std::vector<Element>> _upper, _lower;
  std::vector<Element> _meet, _join;
  std::vector<std::size_t> _rank;
  Element _bottom = 0, _top = 0;
};

/// Order isomorphism: mapping[x] is the image of element x.
struct LatticeIso
{
  std::vector<Element> mapping;
};

FiniteLattice dual(FiniteLattice const &l);

// Set partitions of {0..n-1} as restricted growth strings, in the order used
// for the elements of partition_lattice(n).
std::vector<std::vector<std::uint32_t>> set_partitions(unsigned n);

// Eq(n) ordered by refinement (finer below). Throws DegenerateInput for n == 0
// and BoundExceeded above config.partition_n_cap.
FiniteLattice partition_lattice(unsigned n, Config const &config = {});

// 0 < 1 < ... < k-1
FiniteLattice chain(std::size_t k);

// Bottom 0, atoms 1..k, top k+1.
FiniteLattice mlattice(std::size_t k);

/// Panels glued at a common top above a new bottom. Element 0 is the new
/// bottom, then the non-top elements of each panel in panel order, each
/// panel's bottom first (so atom i sits at 1 + sum of |L_j| - 1 for j < i),
/// then the top.
/// Throws TooFewPanels, PanelTooSmall.
FiniteLattice parachute(std::vector<FiniteLattice> const &panels);

struct ParachuteShape
{
  bool is_parachute = false;
  std::vector<Element> atoms;
  std::vector<std::size_t> panel_sizes;

  // At least two panels, at least two of them with more than two elements.
  bool meets_hypothesis() const;
};

// Recognizes a parachute: at least two atoms and every element strictly
// between bottom and top lies above exactly one atom.
ParachuteShape parachute_shape(FiniteLattice const &l);

// [a, b] as a lattice; elements listed in increasing index order.
std::pair<FiniteLattice, std::vector<Element>>
interval_sublattice(FiniteLattice const &l, Element a, Element b);

std::optional<LatticeIso> is_isomorphic(FiniteLattice const &a,
                                        FiniteLattice const &b);

// True iff mapping is a bijection that preserves and reflects the order.
bool is_isomorphism(FiniteLattice const &a, FiniteLattice const &b,
                    std::vector<Element> const &mapping);

// Throws InvalidPoint for out-of-range elements.
bool is_antichain(FiniteLattice const &l, std::vector<Element> const &subset);

} // namespace gilt

#endif // GUARD_GILT_LATTICE_H
