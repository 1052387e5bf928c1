#ifndef GUARD_GILT_PERM_GROUP_H
#define GUARD_GILT_PERM_GROUP_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigint.h"
#include "config.h"
#include "perm.h"
#include "stabilizer_chain.h"

namespace gilt
{

/// A permutation group given by generators, with a stabilizer chain that is
/// built on first use. Copies share the chain; construction of the chain is
/// compute-once and safe to trigger from several threads.
class PermGroup
{
public:
  PermGroup()
  : PermGroup(0u, {})
  {}

  // Identity generators are dropped.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree)
  { return PermGroup(degree, {}); }

  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup cyclic(std::size_t n);
  // Dihedral group of order 2n acting on n points (n >= 3).
  static PermGroup dihedral(std::size_t n);

  std::size_t degree() const
  { return _degree; }

  std::vector<Permutation> const &generators() const
  { return _generators; }

  StabilizerChain const &chain() const;

  BigInt order() const
  { return chain().order(); }

  // Throws BoundExceeded above 2^64.
  std::uint64_t order_u64() const
  { return to_u64(order()); }

  bool contains(Permutation const &p) const
  { return chain().contains(p); }

  bool is_trivial() const
  { return _generators.empty(); }

  // Throws BoundExceeded if the group has more than `bound` elements.
  std::vector<Permutation> elements(std::uint64_t bound) const;

  // Groups are equal as sets (same degree, mutual containment of generators).
  bool same_group(PermGroup const &other) const;

  // Generators, 1-based cycle notation, comma separated.
  std::string to_string() const;

private:
  struct LazyChain
  {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::shared_ptr<LazyChain> _lazy;
};

/// (G, H) with every generator of H a member of G.
struct SubgroupPair
{
  PermGroup parent;
  PermGroup sub;

  // Throws NotASubgroup.
  SubgroupPair(PermGroup parent, PermGroup sub);
};

/// Transitive permutation action: one image permutation per generator of
/// the acting group, in generator order.
struct TransitiveGSet
{
  std::size_t degree = 0;
  std::vector<Permutation> gen_images;

  // Throws IntransitiveAction / DegreeMismatch.
  void validate() const;
};

/// Right cosets of H in G with the right-multiplication action.
struct CosetTable
{
  TransitiveGSet action;
  // representatives[i] is a canonical element of the i-th coset; coset 0 is H.
  std::vector<Permutation> representatives;
  std::unordered_map<Permutation, std::uint32_t> index;

  // Index of the coset H x.
  std::uint32_t coset_of(PermGroup const &h, Permutation const &x) const;

  // Permutation of the cosets induced by right multiplication with x.
  Permutation image_of(PermGroup const &h, Permutation const &x) const;
};

struct CosetAction
{
  TransitiveGSet action;
  PermGroup image;
  PermGroup kernel;
  std::vector<Permutation> representatives;
};

struct SolvabilityReport
{
  bool solvable;
  // Derived series G = G0 > G1 > ... down to the first repeated term.
  std::vector<PermGroup> series;
};

// ---- element arithmetic -------------------------------------------------

BigInt group_order(PermGroup const &g);

// Throws DegreeMismatch.
bool contains(PermGroup const &g, Permutation const &p);

// ---- subgroup structure -------------------------------------------------

bool is_subgroup(PermGroup const &g, PermGroup const &h);

// Throws NotASubgroup unless h <= g.
void require_subgroup(PermGroup const &g, PermGroup const &h,
                      std::string const &what = "subgroup");

// <A, B>
PermGroup join(PermGroup const &a, PermGroup const &b);

// Element scan over the smaller group; bounded by config.element_scan_bound.
PermGroup intersection(PermGroup const &a, PermGroup const &b,
                       Config const &config = {});

bool is_normal(PermGroup const &g, PermGroup const &n);

bool is_abelian(PermGroup const &g);

// Canonical representative of the right coset H x: the element of Hx whose
// images of H's base points are lexicographically least.
Permutation canonical_coset_representative(PermGroup const &h,
                                           Permutation const &x);

// Throws NotASubgroup, BoundExceeded (index above config.coset_index_cap).
CosetTable coset_table(PermGroup const &g, PermGroup const &h,
                       Config const &config = {});

// Coset table plus image and kernel of the action.
CosetAction coset_action(PermGroup const &g, PermGroup const &h,
                         Config const &config = {});

// Kernel of the action of g given by images (one per generator of g).
PermGroup action_kernel(PermGroup const &g, TransitiveGSet const &action);

PermGroup core(PermGroup const &g, PermGroup const &h,
               Config const &config = {});

bool is_core_free(PermGroup const &g, PermGroup const &h,
                  Config const &config = {});

// Throws NotMembers if some element of s is outside g.
PermGroup normal_closure(PermGroup const &g,
                         std::vector<Permutation> const &s);

// Throws NotASubgroup, BoundExceeded.
PermGroup centralizer(PermGroup const &g, PermGroup const &n,
                      Config const &config = {});

PermGroup derived_subgroup(PermGroup const &g);

SolvabilityReport solvability(PermGroup const &g);

bool is_solvable(PermGroup const &g);

// One element per conjugacy class, each the least in its class. Throws
// BoundExceeded for groups larger than bound.
std::vector<Permutation> class_representatives(PermGroup const &g,
                                               std::uint64_t bound);

// Inclusion-minimal normal closures of single non-identity elements, sorted
// by (order, generators). Throws BoundExceeded.
std::vector<PermGroup> minimal_normal_subgroups(PermGroup const &g,
                                                Config const &config = {});

// Throws DegenerateInput for the trivial group.
bool is_subdirectly_irreducible(PermGroup const &g, Config const &config = {});

// Nonabelian and no proper nontrivial normal subgroup. Throws BoundExceeded.
bool is_nonabelian_simple(PermGroup const &g, Config const &config = {});

// Acts on the disjoint union of the point sets, g1 on the first block.
PermGroup direct_product(PermGroup const &g1, PermGroup const &g2);

// (G/core, H/core) realised as the coset-action images.
std::pair<PermGroup, PermGroup> quotient_by_core(PermGroup const &g,
                                                 PermGroup const &h,
                                                 Config const &config = {});

// AB == BA, decided by |<A,B>| == |A||B|/|A n B|.
bool permutes(PermGroup const &g, PermGroup const &a, PermGroup const &b,
              Config const &config = {});

} // namespace gilt

#endif // GUARD_GILT_PERM_GROUP_H
