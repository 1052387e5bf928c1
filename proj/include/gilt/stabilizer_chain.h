#ifndef GUARD_GILT_STABILIZER_CHAIN_H
#define GUARD_GILT_STABILIZER_CHAIN_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bigint.h"
#include "perm.h"

namespace gilt
{

/// Base and strong generating set computed by deterministic Schreier-Sims.
///
/// Base points are drawn only from `base_domain` (all points by default, in
/// ascending order). Elements that fix every domain point cannot be sifted
/// any further; they are collected in a residual subgroup that has its own
/// ordinary chain. With the default domain the residual is trivial. With a
/// domain that is a G-invariant subset on which G acts via some quotient, the
/// residual is exactly the kernel of that action, which is how coset-action
/// kernels are computed.
///
/// If `known_order` is supplied the construction stops as soon as the chain
/// accounts for that many elements; the order must then be exact.
class StabilizerChain
{
public:
  struct Options
  {
    std::vector<Point> base_domain;
    std::optional<BigInt> known_order;
  };

  struct Level
  {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_index;
    std::vector<Permutation> transversal;

    bool in_orbit(Point x) const
    { return orbit_index[x] >= 0; }

    // u with base^u == x
    Permutation const &transversal_element(Point x) const
    { return transversal[static_cast<std::size_t>(orbit_index[x])]; }
  };

  StabilizerChain(std::size_t degree, std::vector<Permutation> const &generators)
  : StabilizerChain(degree, generators, Options{})
  {}

  StabilizerChain(std::size_t degree,
                  std::vector<Permutation> const &generators,
                  Options options);

  std::size_t degree() const
  { return _degree; }

  std::size_t depth() const
  { return _levels.size(); }

  Level const &level(std::size_t i) const
  { return _levels[i]; }

  std::vector<Point> base() const;

  BigInt order() const;

  bool contains(Permutation const &g) const;

  // Strips g through levels [from, depth); returns the residue and the level
  // at which stripping stopped (depth() if it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from = 0u) const;

  // Generators of the pointwise stabilizer of the base domain.
  std::vector<Permutation> const &residual_generators() const
  { return _residual_generators; }

  BigInt residual_order() const;

  // All elements, in a fixed order determined by the chain.
  std::vector<Permutation> elements() const;

private:
  bool fixes_domain(Permutation const &g) const;
  bool in_residual(Permutation const &g) const;
  std::optional<Point> first_moved_domain_point(Permutation const &g) const;
  void add_generator(std::size_t level, Permutation const &g);
  void add_residual(Permutation const &g);
  bool reached_known_order() const;
  void schreier_sims(std::vector<Permutation> const &generators);

  std::size_t _degree;
  std::vector<Point> _domain;
  std::vector<bool> _in_domain;
  std::optional<BigInt> _known_order;
  std::vector<Level> _levels;
  std::vector<Permutation> _residual_generators;
  std::unique_ptr<StabilizerChain> _residual;
};

// g * u^-1 without materializing the inverse permutation.
Permutation multiply_by_inverse(Permutation const &g, Permutation const &u);

} // namespace gilt

#endif // GUARD_GILT_STABILIZER_CHAIN_H
