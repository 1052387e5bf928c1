#include <algorithm>

#include "gilt/errors.h"
#include "gilt/subgroup_table.h"

namespace gilt
{

ElementTable::ElementTable(PermGroup const &g, Config const &config)
: _group(g)
{
  if (g.order() > config.brute_force_order_bound)
    throw Error(ErrorKind::BoundExceeded,
                "group of order " + g.order().str() +
                " exceeds brute-force bound " +
                std::to_string(config.brute_force_order_bound));

  _elements = g.elements(config.brute_force_order_bound);
  std::sort(_elements.begin(), _elements.end());

  std::size_t const n = _elements.size();
  _index.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i)
    _index.emplace(_elements[i], i);

  _mul.resize(n * n);
  _inv.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t k = _index.at(_elements[i] * _elements[j]);
      _mul[static_cast<std::size_t>(i) * n + j] = k;
      if (k == 0u)
        _inv[i] = j;
    }
  }
}

std::uint32_t ElementTable::index_of(Permutation const &p) const
{
  auto it = _index.find(p);
  if (it == _index.end())
    throw Error(ErrorKind::NotMembers, p.to_string() + " is not in the group");
  return it->second;
}

Bitset ElementTable::closure(std::vector<std::uint32_t> const &gens) const
{
  Bitset res(order());
  res.set(0u);
  std::vector<std::uint32_t> queue{0u};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::uint32_t g : gens) {
      std::uint32_t y = mul(queue[i], g);
      if (!res.test(y)) {
        res.set(y);
        queue.push_back(y);
      }
    }
  }
  return res;
}

Bitset ElementTable::elements_of(PermGroup const &h) const
{
  require_subgroup(_group, h);

  std::vector<std::uint32_t> gens;
  for (auto const &x : h.generators())
    gens.push_back(index_of(x));
  return closure(gens);
}

PermGroup ElementTable::group_of(Bitset const &s) const
{
  std::vector<std::uint32_t> gens;
  Bitset current = closure(gens);
  s.for_each([&](std::size_t i) {
    if (current.test(i))
      return;
    gens.push_back(static_cast<std::uint32_t>(i));
    current = closure(gens);
  });

  std::vector<Permutation> perms;
  for (std::uint32_t i : gens)
    perms.push_back(_elements[i]);
  return PermGroup(_group.degree(), std::move(perms));
}

Bitset ElementTable::product(Bitset const &a, Bitset const &b) const
{
  Bitset res(order());
  a.for_each([&](std::size_t i) {
    b.for_each([&](std::size_t j) {
      res.set(mul(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)));
    });
  });
  return res;
}

bool ElementTable::is_normal(Bitset const &s) const
{
  for (auto const &g : _group.generators()) {
    std::uint32_t gi = index_of(g);
    std::uint32_t ginv = inverse(gi);
    bool ok = true;
    s.for_each([&](std::size_t x) {
      if (!s.test(mul(mul(ginv, static_cast<std::uint32_t>(x)), gi)))
        ok = false;
    });
    if (!ok)
      return false;
  }
  return true;
}

Element SubgroupLattice::find(Bitset const &s) const
{
  auto it = index.find(s);
  if (it == index.end())
    throw Error(ErrorKind::NotASubgroup, "element set is not a subgroup");
  return it->second;
}

Element SubgroupLattice::find(PermGroup const &h) const
{ return find(table->elements_of(h)); }

SubgroupLattice subgroup_lattice_bruteforce(PermGroup const &g,
                                            Config const &config)
{
  auto table = std::make_shared<ElementTable const>(g, config);
  std::size_t const n = table->order();

  std::vector<Bitset> subs;
  std::vector<std::vector<std::uint32_t>> gens;
  std::unordered_map<Bitset, std::size_t> seen;

  auto add = [&](Bitset s, std::vector<std::uint32_t> s_gens) {
    if (seen.emplace(s, subs.size()).second) {
      subs.push_back(std::move(s));
      gens.push_back(std::move(s_gens));
    }
  };

  add(table->closure({}), {});

  std::vector<std::uint32_t> cyclic_gens;
  std::vector<Bitset> cyclic;
  for (std::uint32_t x = 1; x < n; ++x) {
    Bitset c = table->closure({x});
    if (seen.count(c))
      continue;
    cyclic_gens.push_back(x);
    cyclic.push_back(c);
    add(std::move(c), {x});
  }

  // Every subgroup is the join of its cyclic subgroups, so joining each
  // subgroup found with each cyclic one reaches all of them.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      if (cyclic[c].is_subset_of(subs[i]))
        continue;
      auto next_gens = gens[i];
      next_gens.push_back(cyclic_gens[c]);
      Bitset j = table->closure(next_gens);
      if (!seen.count(j))
        add(std::move(j), std::move(next_gens));
    }
  }

  std::sort(subs.begin(), subs.end(), [](Bitset const &a, Bitset const &b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb)
      return ca < cb;
    return a < b;
  });

  std::size_t const m = subs.size();
  std::vector<Bitset> down(m, Bitset(m));
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x <= y; ++x)
      if (subs[x].is_subset_of(subs[y]))
        down[y].set(x);

  SubgroupLattice res{table, std::move(subs),
                      FiniteLattice::from_down_sets(std::move(down)), {}};
  for (Element i = 0; i < m; ++i)
    res.index.emplace(res.subgroups[i], i);
  return res;
}

std::pair<FiniteLattice, std::vector<Element>>
interval_bruteforce(SubgroupLattice const &sub, Element h)
{ return interval_sublattice(sub.lattice, h, sub.lattice.top()); }

FiniteLattice interval_bruteforce(PermGroup const &g, PermGroup const &h,
                                  Config const &config)
{
  require_subgroup(g, h);
  auto sub = subgroup_lattice_bruteforce(g, config);
  return interval_bruteforce(sub, sub.find(h)).first;
}

std::vector<Element> complements_in_interval(SubgroupLattice const &sub,
                                             Element h, Element a)
{
  auto const &l = sub.lattice;
  if (!l.leq(h, a))
    throw Error(ErrorKind::NotInInterval, "A does not contain H");

  std::vector<Element> res;
  l.up_set(h).for_each([&](std::size_t b) {
    auto bb = static_cast<Element>(b);
    if (l.meet(a, bb) == h && l.join(a, bb) == l.top())
      res.push_back(bb);
  });
  return res;
}

std::vector<PermGroup> complements_in_interval(PermGroup const &g,
                                               PermGroup const &h,
                                               PermGroup const &a,
                                               Config const &config)
{
  require_subgroup(g, h, "H");
  require_subgroup(g, a, "A");
  if (!is_subgroup(a, h))
    throw Error(ErrorKind::NotInInterval, "A does not contain H");

  auto sub = subgroup_lattice_bruteforce(g, config);
  std::vector<PermGroup> res;
  for (Element b : complements_in_interval(sub, sub.find(h), sub.find(a)))
    res.push_back(sub.group(b));
  return res;
}

} // namespace gilt
