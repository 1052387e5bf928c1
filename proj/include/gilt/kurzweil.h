#ifndef GUARD_GILT_KURZWEIL_H
#define GUARD_GILT_KURZWEIL_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bigint.h"
#include "config.h"
#include "lattice.h"
#include "perm_group.h"

namespace gilt
{

/// (s_1, ..., s_n; x) with s_i in S and x a permutation of the n blocks.
struct WreathElement
{
  std::vector<Permutation> coords;
  Permutation top;

  friend bool operator==(WreathElement const &, WreathElement const &) = default;
};

WreathElement wreath_identity(std::size_t n, std::size_t k);

// (s, x)(t, y) = (s_1 t_{x(1)}, ..., s_n t_{x(n)}, xy), products applied
// left to right. Throws ShapeMismatch.
WreathElement wreath_multiply(WreathElement const &u, WreathElement const &v);

// Acts on n*k points: point i*k + p goes to x(i)*k + s_i(p).
Permutation wreath_embed(WreathElement const &u);

// Inverse of wreath_embed for permutations preserving the n blocks of size k.
// Throws ShapeMismatch.
WreathElement wreath_decode(Permutation const &p, std::size_t n, std::size_t k);

/// U = S^n x| Gbar acting imprimitively on n blocks of size k = deg(S).
struct WreathGroup
{
  PermGroup s;
  PermGroup base_group;
  PermGroup base_subgroup;
  std::size_t n = 0;
  std::size_t k = 0;

  PermGroup u;
  PermGroup base;     // S^n
  PermGroup d;        // diagonal copy of S
  PermGroup gbar;     // top group on n*k points
  PermGroup dgbar;    // <D, Gbar>
  PermGroup gbar_action; // the coset action image on n points

  // Hypothesis violations that were tolerated.
  std::vector<std::string> warnings;
};

struct KurzweilOptions
{
  // Otherwise a non-simple or abelian S throws NotSimple.
  bool allow_non_simple = false;
};

// Throws NotASubgroup, IndexTooSmall (|G:H| < 3), NotSimple.
WreathGroup build_kurzweil(PermGroup const &s, PermGroup const &g,
                           PermGroup const &h, KurzweilOptions options = {},
                           Config const &config = {});

// core_U(DGbar) is trivial. Throws BoundExceeded above the coset cap.
bool verify_corefree_lift(WreathGroup const &w, Config const &config = {});

struct IntervalCheck
{
  bool holds = false;
  FiniteLattice computed;
  FiniteLattice expected;
};

// [DGbar, U] against dual([H, G]).
IntervalCheck dual_interval_check(WreathGroup const &w, Config const &config = {});

// [D, S^n] against dual(Eq(n)).
IntervalCheck diagonal_interval_check(WreathGroup const &w,
                                      Config const &config = {});

/// Sizes for applying the construction again with S2 over (U, DGbar).
struct IterateSize
{
  BigInt m;                    // |U : DGbar|
  std::optional<BigInt> order; // |S2|^m |U|, when m is within the cap
  BigInt degree;               // m * deg(S2)
  std::uint64_t order_digits = 0;
};

// The exact order is expanded only for m <= config.coset_index_cap; the
// digit count is always reported.
IterateSize kurzweil_iterate_size(WreathGroup const &w, PermGroup const &s2,
                                  Config const &config = {});

} // namespace gilt

#endif // GUARD_GILT_KURZWEIL_H
