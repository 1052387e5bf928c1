#include <algorithm>
#include <filesystem>

#include "gilt/catalog.h"
#include "gilt/io.h"
#include "gilt/subgroup_table.h"

namespace gilt
{

namespace
{

std::pair<std::size_t, std::vector<Permutation>> literal_key(PermGroup const &g)
{
  std::vector<Permutation> gens;
  for (auto const &x : g.generators())
    if (!x.is_identity())
      gens.push_back(x);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return {g.degree(), std::move(gens)};
}

} // anonymous namespace

bool Catalog::add(CatalogEntry entry)
{
  if (entry.candidate_subgroups)
    for (auto const &h : *entry.candidate_subgroups)
      require_subgroup(entry.group, h);

  auto key = literal_key(entry.group);
  if (std::find(_keys.begin(), _keys.end(), key) != _keys.end())
    return false;
  _keys.push_back(std::move(key));
  _entries.push_back(std::move(entry));
  return true;
}

bool Catalog::add(std::string name, PermGroup group)
{ return add(CatalogEntry{std::move(name), std::move(group), std::nullopt}); }

bool Catalog::add_file(std::string const &path)
{
  return add(std::filesystem::path(path).stem().string(), read_group_file(path));
}

PermGroup quaternion8()
{
  // Left regular representation: i = (1 2 3 4)(5 6 7 8), j = (1 5 3 7)(2 8 4 6).
  return PermGroup(8, {Permutation::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                       Permutation::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
}

Catalog Catalog::builtin(Config const &config)
{
  Catalog c;
  for (std::size_t k = 1; k <= 12; ++k)
    c.add("C" + std::to_string(k), PermGroup::cyclic(k));
  for (std::size_t k = 3; k <= 8; ++k)
    c.add("D" + std::to_string(k), PermGroup::dihedral(k));
  c.add("V4", PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                            Permutation::from_cycles(4, {{0, 2}, {1, 3}})}));
  c.add("Q8", quaternion8());
  for (std::size_t n = 2; n <= 6; ++n)
    c.add("S" + std::to_string(n), PermGroup::symmetric(n));
  for (std::size_t n = 3; n <= 6; ++n)
    c.add("A" + std::to_string(n), PermGroup::alternating(n));

  auto c2 = PermGroup::cyclic(2);
  auto s3 = PermGroup::symmetric(3);
  c.add("C2xC2xC2", direct_product(direct_product(c2, c2), c2));
  c.add("S3xS3", direct_product(s3, s3));
  c.add("C3xS3", direct_product(PermGroup::cyclic(3), s3));
  c.add("A4xC2", direct_product(PermGroup::alternating(4), c2));
  c.add("S4xC2", direct_product(PermGroup::symmetric(4), c2));
  c.add("A5xC2", direct_product(PermGroup::alternating(5), c2));

  auto sub = subgroup_lattice_bruteforce(PermGroup::symmetric(5), config);
  for (std::size_t i = 0; i < sub.subgroups.size(); ++i)
    c.add("S5.sub" + std::to_string(i), sub.group(i));
  return c;
}

} // namespace gilt
