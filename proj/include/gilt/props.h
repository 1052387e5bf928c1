#ifndef GUARD_GILT_PROPS_H
#define GUARD_GILT_PROPS_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "config.h"
#include "io.h"
#include "perm_group.h"

namespace gilt
{

// Throws BoundExceeded.
bool has_no_abelian_normal(PermGroup const &g, Config const &config = {});

// C_G(M) = 1 for every minimal normal M. Throws BoundExceeded.
bool trivial_centralizers(PermGroup const &g, Config const &config = {});

/// An explicit isomorphism onto S_n or A_n: the images in G of the standard
/// generators of the natural permutation group.
struct AltSymWitness
{
  std::size_t n = 0;
  bool symmetric = true;
  std::vector<Permutation> standard_generators;
  std::vector<Permutation> images;
};

// Order filter, then a search for images of the standard generators. Throws
// BoundExceeded above config.alt_sym_order_bound.
std::optional<AltSymWitness> alt_or_sym_witness(PermGroup const &g,
                                                Config const &config = {});

bool is_alt_or_sym(PermGroup const &g, Config const &config = {});

// H is core-free in G.
bool core_free_bottom(PermGroup const &g, PermGroup const &h,
                      Config const &config = {});

// Every Y with H <= Y < G is core-free in G.
bool core_free_hereditary(PermGroup const &g, PermGroup const &h,
                          Config const &config = {});

// NH = G for every minimal normal N.
bool nh_equals_g_all_minimal(PermGroup const &g, PermGroup const &h,
                             Config const &config = {});

/// Named flags, each unknown, true or false, plus evidence keyed by flag.
struct WitnessReport
{
  std::map<std::string, std::optional<bool>> flags;
  Json evidence = Json::object();
  // Set when some flag of the merged reports disagreed.
  std::vector<std::string> conflicts;

  std::optional<bool> flag(std::string const &name) const;
};

namespace flag
{
inline constexpr char const *parachute_hypothesis = "parachute_hypothesis";
inline constexpr char const *core_free_all_Y = "core_free_all_Y";
inline constexpr char const *core_free_bottom = "core_free_bottom";
inline constexpr char const *core_free_hereditary = "core_free_hereditary";
inline constexpr char const *NH_equals_G_all_minimal = "NH_equals_G_all_minimal";
inline constexpr char const *trivial_centralizers = "trivial_centralizers";
inline constexpr char const *no_abelian_normal = "no_abelian_normal";
inline constexpr char const *subdirectly_irreducible = "subdirectly_irreducible";
inline constexpr char const *solvable = "solvable";
inline constexpr char const *alt_or_sym = "alt_or_sym";
inline constexpr char const *conclusions_asserted = "conclusions_asserted";
} // namespace flag

// Every sub-check is reported; `conclusions_asserted` is true only when the
// interval is a parachute meeting the hypothesis and all of its consequences
// were confirmed. Throws NotCoreFree, BoundExceeded.
WitnessReport verify_parachute_consequences(PermGroup const &g,
                                            PermGroup const &h,
                                            Config const &config = {});

// Flag-wise conjunction over the known values. A single report comes back
// unchanged; otherwise evidence[flag]["r<i>"] keeps each input's evidence.
// Throws EmptyInput.
WitnessReport check_conjunction(std::vector<WitnessReport> const &reports);

Json report_to_json(WitnessReport const &r);

} // namespace gilt

#endif // GUARD_GILT_PROPS_H
