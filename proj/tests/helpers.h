#ifndef GUARD_GILT_TEST_HELPERS_H
#define GUARD_GILT_TEST_HELPERS_H

#include <initializer_list>
#include <vector>

#include "gilt/perm.h"
#include "gilt/perm_group.h"

namespace gilt::test
{

using Cycles = std::vector<std::vector<Point>>;

// 0-based cycles.
inline Permutation cyc(std::size_t degree, Cycles const &cycles)
{ return Permutation::from_cycles(degree, cycles); }

inline PermGroup grp(std::size_t degree, std::initializer_list<Cycles> gens)
{
  std::vector<Permutation> perms;
  for (auto const &c : gens)
    perms.push_back(cyc(degree, c));
  return PermGroup(degree, std::move(perms));
}

inline PermGroup klein4()
{ return grp(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}); }

} // namespace gilt::test

#endif // GUARD_GILT_TEST_HELPERS_H
