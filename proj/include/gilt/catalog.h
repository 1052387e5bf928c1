#ifndef GUARD_GILT_CATALOG_H
#define GUARD_GILT_CATALOG_H

#include <optional>
#include <string>
#include <vector>

#include "config.h"
#include "perm_group.h"

namespace gilt
{

struct CatalogEntry
{
  std::string name;
  PermGroup group;
  // When present, the search tries exactly these subgroups instead of
  // enumerating Sub(G). Lets groups far beyond the brute-force bound take part.
  std::optional<std::vector<PermGroup>> candidate_subgroups;
};

/// Named groups to scan, deduplicated by degree and literal generator set.
class Catalog
{
public:
  // Returns false if an entry with the same generators is already present.
  // Throws NotASubgroup for a candidate outside the group.
  bool add(CatalogEntry entry);
  bool add(std::string name, PermGroup group);

  // Group file, named after the file stem.
  bool add_file(std::string const &path);

  std::vector<CatalogEntry> const &entries() const
  { return _entries; }

  std::size_t size() const
  { return _entries.size(); }

  bool empty() const
  { return _entries.empty(); }

  // Cyclic C1..C12, dihedral D3..D8 (by polygon), V4, Q8, S_n and A_n for
  // n <= 6, a few direct products, then every subgroup of S5.
  static Catalog builtin(Config const &config = {});

private:
  std::vector<CatalogEntry> _entries;
  std::vector<std::pair<std::size_t, std::vector<Permutation>>> _keys;
};

PermGroup quaternion8();

} // namespace gilt

#endif // GUARD_GILT_CATALOG_H
