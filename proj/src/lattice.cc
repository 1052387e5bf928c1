#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "gilt/errors.h"
#include "gilt/lattice.h"

namespace gilt
{

FiniteLattice FiniteLattice::from_covers(std::size_t size,
                                         std::vector<Cover> const &covers)
{
  std::vector<std::vector<Element>> lower(size);
  std::vector<std::size_t> indegree(size, 0u);

  for (auto [a, b] : covers) {
    if (a >= size || b >= size)
      throw Error(ErrorKind::InvalidPoint,
                  "cover (" + std::to_string(a) + ", " + std::to_string(b) +
                  ") out of range for size " + std::to_string(size));
    if (a == b)
      throw Error(ErrorKind::NotAPartialOrder,
                  "element " + std::to_string(a) + " covers itself");
    lower[b].push_back(a);
  }

  std::vector<std::vector<Element>> upper(size);
  for (Element b = 0; b < size; ++b)
    for (Element a : lower[b]) {
      upper[a].push_back(b);
      ++indegree[b];
    }

  // Kahn's algorithm doubles as the cycle check.
  std::vector<Element> order;
  std::vector<Element> ready;
  for (Element x = 0; x < size; ++x)
    if (indegree[x] == 0u)
      ready.push_back(x);
  while (!ready.empty()) {
    Element x = ready.back();
    ready.pop_back();
    order.push_back(x);
    for (Element y : upper[x])
      if (--indegree[y] == 0u)
        ready.push_back(y);
  }
  if (order.size() != size)
    throw Error(ErrorKind::NotAPartialOrder, "cover relation has a cycle");

  std::vector<Bitset> down(size, Bitset(size));
  for (Element y : order) {
    down[y].set(y);
    for (Element x : lower[y])
      down[y] |= down[x];
  }

  return build(std::move(down));
}

FiniteLattice FiniteLattice::from_down_sets(std::vector<Bitset> down)
{
  std::size_t const m = down.size();

  for (Element y = 0; y < m; ++y) {
    if (down[y].size() != m)
      throw Error(ErrorKind::InvalidPoint, "down-set of wrong size");
    if (!down[y].test(y))
      throw Error(ErrorKind::NotAPartialOrder, "order is not reflexive");
  }

  for (Element y = 0; y < m; ++y) {
    bool ok = true;
    down[y].for_each([&](std::size_t x) {
      if (x != y && down[x].test(y))
        ok = false;
      if (!down[x].is_subset_of(down[y]))
        ok = false;
    });
    if (!ok)
      throw Error(ErrorKind::NotAPartialOrder,
                  "order is not antisymmetric or not transitive at element " +
                  std::to_string(y));
  }

  return build(std::move(down));
}

FiniteLattice FiniteLattice::build(std::vector<Bitset> down)
{
  std::size_t const m = down.size();
  if (m == 0u)
    throw Error(ErrorKind::NoBoundedTop, "empty lattice has no top or bottom");

  FiniteLattice l;
  l._size = m;
  l._down = std::move(down);
  l._up.assign(m, Bitset(m));
  for (Element y = 0; y < m; ++y)
    l._down[y].for_each([&](std::size_t x) { l._up[x].set(y); });

  // Linear extension: smaller down-sets first.
  std::vector<Element> by_pos(m);
  std::iota(by_pos.begin(), by_pos.end(), Element{0});
  std::stable_sort(by_pos.begin(), by_pos.end(), [&](Element a, Element b) {
    return l._down[a].count() < l._down[b].count();
  });
  std::vector<Element> pos(m);
  for (Element i = 0; i < m; ++i)
    pos[by_pos[i]] = i;

  std::vector<Bitset> up_pos(m, Bitset(m)), down_pos(m, Bitset(m));
  for (Element x = 0; x < m; ++x) {
    l._up[x].for_each([&](std::size_t y) { up_pos[x].set(pos[y]); });
    l._down[x].for_each([&](std::size_t y) { down_pos[x].set(pos[y]); });
  }

  l._meet.assign(m * m, 0u);
  l._join.assign(m * m, 0u);

  for (Element a = 0; a < m; ++a) {
    for (Element b = a; b < m; ++b) {
      Bitset common_up = up_pos[a] & up_pos[b];
      std::size_t j = common_up.first();
      if (j == m || up_pos[by_pos[j]] != common_up)
        throw Error(ErrorKind::NotALattice,
                    "elements " + std::to_string(a) + " and " +
                    std::to_string(b) + " have no join");

      Bitset common_down = down_pos[a] & down_pos[b];
      std::size_t k = common_down.last();
      if (k == m || down_pos[by_pos[k]] != common_down)
        throw Error(ErrorKind::NotALattice,
                    "elements " + std::to_string(a) + " and " +
                    std::to_string(b) + " have no meet");

      l._join[a * m + b] = l._join[b * m + a] = by_pos[j];
      l._meet[a * m + b] = l._meet[b * m + a] = by_pos[k];
    }
  }

  l._bottom = by_pos.front();
  l._top = by_pos.back();
  if (l._up[l._bottom].count() != m || l._down[l._top].count() != m)
    throw Error(ErrorKind::NoBoundedTop, "lattice has no bottom or top");

  l._upper.assign(m, {});
  l._lower.assign(m, {});
  for (Element y = 0; y < m; ++y) {
    Bitset below = l._down[y];
    below.reset(y);
    Bitset reduced = below;
    below.for_each([&](std::size_t x) {
      Bitset strictly = l._down[x];
      strictly.reset(x);
      strictly.for_each([&](std::size_t z) { reduced.reset(z); });
    });
    reduced.for_each([&](std::size_t x) {
      l._covers.emplace_back(static_cast<Element>(x), y);
      l._lower[y].push_back(static_cast<Element>(x));
      l._upper[x].push_back(y);
    });
  }
  std::sort(l._covers.begin(), l._covers.end());
  for (auto &v : l._upper)
    std::sort(v.begin(), v.end());

  l._rank.assign(m, 0u);
  for (Element y : by_pos)
    for (Element x : l._lower[y])
      l._rank[y] = std::max(l._rank[y], l._rank[x] + 1u);

  return l;
}

FiniteLattice dual(FiniteLattice const &l)
{
  std::vector<Cover> covers;
  for (auto [a, b] : l.covers())
    covers.emplace_back(b, a);
  return FiniteLattice::from_covers(l.size(), covers);
}

std::vector<std::vector<std::uint32_t>> set_partitions(unsigned n)
{
  std::vector<std::vector<std::uint32_t>> res;
  if (n == 0u)
    return res;

  // Restricted growth strings a with a[0] = 0 and a[i] <= 1 + max(a[0..i)),
  // stepped in lexicographic order.
  std::vector<std::uint32_t> rgs(n, 0u), prefix_max(n, 0u);
  for (;;) {
    res.push_back(rgs);

    std::size_t i = n;
    while (i-- > 1u) {
      if (rgs[i] <= prefix_max[i - 1u])
        break;
    }
    if (i == 0u)
      break;

    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1u], rgs[i]);
    for (std::size_t j = i + 1u; j < n; ++j) {
      rgs[j] = 0u;
      prefix_max[j] = prefix_max[i];
    }
  }

  return res;
}

FiniteLattice partition_lattice(unsigned n, Config const &config)
{
  if (n == 0u)
    throw Error(ErrorKind::DegenerateInput, "Eq(n) needs n >= 1");
  if (n > config.partition_n_cap)
    throw Error(ErrorKind::BoundExceeded,
                "Eq(" + std::to_string(n) + ") exceeds cap " +
                std::to_string(config.partition_n_cap));

  auto parts = set_partitions(n);
  std::size_t const m = parts.size();

  auto refines = [&](std::vector<std::uint32_t> const &p,
                     std::vector<std::uint32_t> const &q) {
    std::vector<std::int64_t> image(n, -1);
    for (unsigned i = 0; i < n; ++i) {
      auto &slot = image[p[i]];
      if (slot < 0)
        slot = q[i];
      else if (slot != q[i])
        return false;
    }
    return true;
  };

  std::vector<Bitset> down(m, Bitset(m));
  for (Element y = 0; y < m; ++y)
    for (Element x = 0; x < m; ++x)
      if (refines(parts[x], parts[y]))
        down[y].set(x);

  return FiniteLattice::from_down_sets(std::move(down));
}

FiniteLattice chain(std::size_t k)
{
  if (k == 0u)
    throw Error(ErrorKind::DegenerateInput, "chain needs k >= 1");

  std::vector<Cover> covers;
  for (Element i = 0; i + 1u < k; ++i)
    covers.emplace_back(i, i + 1u);
  return FiniteLattice::from_covers(k, covers);
}

FiniteLattice mlattice(std::size_t k)
{
  if (k == 0u)
    throw Error(ErrorKind::DegenerateInput, "M_k needs k >= 1");

  auto const top = static_cast<Element>(k + 1u);
  std::vector<Cover> covers;
  for (Element i = 1; i <= k; ++i) {
    covers.emplace_back(0u, i);
    covers.emplace_back(i, top);
  }
  return FiniteLattice::from_covers(k + 2u, covers);
}

FiniteLattice parachute(std::vector<FiniteLattice> const &panels)
{
  if (panels.size() < 2u)
    throw Error(ErrorKind::TooFewPanels,
                "parachute needs at least two panels, got " +
                std::to_string(panels.size()));

  std::size_t size = 2u;
  for (auto const &p : panels) {
    if (p.size() < 2u)
      throw Error(ErrorKind::PanelTooSmall, "parachute panels need >= 2 elements");
    size += p.size() - 1u;
  }

  auto const top = static_cast<Element>(size - 1u);
  std::vector<Cover> covers;
  Element next = 1;

  for (auto const &p : panels) {
    // Panel bottom first, so the atoms are 1, 1 + (|L_1| - 1), ...
    std::vector<Element> index(p.size());
    index[p.bottom()] = next++;
    for (Element x = 0; x < p.size(); ++x)
      if (x != p.top() && x != p.bottom())
        index[x] = next++;
    index[p.top()] = top;

    covers.emplace_back(0u, index[p.bottom()]);
    for (auto [a, b] : p.covers())
      covers.emplace_back(index[a], index[b]);
  }

  return FiniteLattice::from_covers(size, covers);
}

bool ParachuteShape::meets_hypothesis() const
{
  if (!is_parachute || panel_sizes.size() < 2u)
    return false;
  return std::count_if(panel_sizes.begin(), panel_sizes.end(),
                       [](std::size_t s) { return s > 2u; }) >= 2;
}

ParachuteShape parachute_shape(FiniteLattice const &l)
{
  ParachuteShape shape;
  auto atoms = l.atoms();
  if (atoms.size() < 2u || l.size() < 4u)
    return shape;

  for (Element x = 0; x < l.size(); ++x) {
    if (x == l.bottom() || x == l.top())
      continue;
    auto above = std::count_if(atoms.begin(), atoms.end(),
                               [&](Element a) { return l.leq(a, x); });
    if (above != 1)
      return shape;
  }

  shape.is_parachute = true;
  shape.atoms = atoms;
  for (Element a : atoms)
    shape.panel_sizes.push_back(l.up_set(a).count());
  return shape;
}

std::pair<FiniteLattice, std::vector<Element>>
interval_sublattice(FiniteLattice const &l, Element a, Element b)
{
  if (a >= l.size() || b >= l.size())
    throw Error(ErrorKind::InvalidPoint, "interval endpoint out of range");
  if (!l.leq(a, b))
    throw Error(ErrorKind::NotInInterval, "interval endpoints are not ordered");

  Bitset members = l.up_set(a) & l.down_set(b);
  std::vector<Element> elems;
  members.for_each([&](std::size_t x) { elems.push_back(static_cast<Element>(x)); });

  std::vector<Element> local(l.size(), 0u);
  for (Element i = 0; i < elems.size(); ++i)
    local[elems[i]] = i;

  std::vector<Cover> covers;
  for (auto [x, y] : l.covers())
    if (members.test(x) && members.test(y))
      covers.emplace_back(local[x], local[y]);

  return {FiniteLattice::from_covers(elems.size(), covers), std::move(elems)};
}

bool is_antichain(FiniteLattice const &l, std::vector<Element> const &subset)
{
  for (Element x : subset)
    if (x >= l.size())
      throw Error(ErrorKind::InvalidPoint, "element out of range");

  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      if (subset[i] != subset[j] && l.leq(subset[i], subset[j]))
        return false;
  return true;
}

bool is_isomorphism(FiniteLattice const &a, FiniteLattice const &b,
                    std::vector<Element> const &mapping)
{
  if (a.size() != b.size() || mapping.size() != a.size() ||
      a.covers().size() != b.covers().size())
    return false;

  std::vector<bool> hit(b.size(), false);
  for (Element y : mapping) {
    if (y >= b.size() || hit[y])
      return false;
    hit[y] = true;
  }

  // A bijection mapping covers onto covers is an order isomorphism.
  std::set<Cover> b_covers(b.covers().begin(), b.covers().end());
  for (auto [x, y] : a.covers())
    if (!b_covers.count({mapping[x], mapping[y]}))
      return false;
  return true;
}

namespace
{

// Colour refinement on the disjoint union of two Hasse diagrams, followed by
// individualisation when refinement stalls.
class IsoSearch
{
public:
  IsoSearch(FiniteLattice const &a, FiniteLattice const &b)
  : _a(a), _b(b), _m(a.size())
  {}

  std::optional<LatticeIso> run()
  {
    std::vector<std::uint32_t> colors(2u * _m);
    std::map<std::vector<std::size_t>, std::uint32_t> ids;
    std::vector<std::vector<std::size_t>> keys(2u * _m);

    for (std::size_t v = 0; v < 2u * _m; ++v) {
      auto const &l = lattice(v);
      Element x = local(v);
      keys[v] = {l.down_set(x).count(), l.up_set(x).count(),
                 l.lower_covers(x).size(), l.upper_covers(x).size(),
                 l.rank(x), l.height() - l.rank(x)};
      ids.emplace(keys[v], 0u);
    }
    std::uint32_t next = 0;
    for (auto &[key, id] : ids)
      id = next++;
    for (std::size_t v = 0; v < 2u * _m; ++v)
      colors[v] = ids[keys[v]];

    return search(std::move(colors));
  }

private:
  FiniteLattice const &lattice(std::size_t v) const
  { return v < _m ? _a : _b; }

  Element local(std::size_t v) const
  { return static_cast<Element>(v < _m ? v : v - _m); }

  std::size_t global(std::size_t v, Element x) const
  { return v < _m ? x : x + _m; }

  // Refines to a stable colouring; false if the two halves disagree.
  bool refine(std::vector<std::uint32_t> &colors) const
  {
    std::size_t const n = 2u * _m;
    std::size_t classes = count_classes(colors);

    for (;;) {
      std::vector<std::vector<std::uint32_t>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        auto const &l = lattice(v);
        Element x = local(v);
        auto &s = sig[v];
        s.push_back(colors[v]);
        std::size_t mark = s.size();
        for (Element y : l.lower_covers(x))
          s.push_back(colors[global(v, y)]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
        s.push_back(~std::uint32_t{0});
        mark = s.size();
        for (Element y : l.upper_covers(x))
          s.push_back(colors[global(v, y)]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
      }

      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return sig[x] < sig[y];
      });

      std::uint32_t next = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0u && sig[order[i]] != sig[order[i - 1u]])
          ++next;
        colors[order[i]] = next;
      }

      if (!balanced(colors))
        return false;

      std::size_t now = static_cast<std::size_t>(next) + 1u;
      if (now == classes)
        return true;
      classes = now;
    }
  }

  std::size_t count_classes(std::vector<std::uint32_t> const &colors) const
  {
    std::unordered_set<std::uint32_t> seen(colors.begin(), colors.end());
    return seen.size();
  }

  bool balanced(std::vector<std::uint32_t> const &colors) const
  {
    std::map<std::uint32_t, std::int64_t> count;
    for (std::size_t v = 0; v < 2u * _m; ++v)
      count[colors[v]] += v < _m ? 1 : -1;
    return std::all_of(count.begin(), count.end(),
                       [](auto const &kv) { return kv.second == 0; });
  }

  std::optional<LatticeIso> search(std::vector<std::uint32_t> colors) const
  {
    if (!refine(colors))
      return std::nullopt;

    std::map<std::uint32_t, std::vector<std::size_t>> members;
    for (std::size_t v = 0; v < 2u * _m; ++v)
      members[colors[v]].push_back(v);

    std::uint32_t pick = 0;
    std::size_t pick_size = 0;
    for (auto const &[c, vs] : members) {
      if (vs.size() > 2u && (pick_size == 0u || vs.size() < pick_size)) {
        pick = c;
        pick_size = vs.size();
      }
    }

    if (pick_size == 0u) {
      LatticeIso iso;
      iso.mapping.resize(_m);
      for (auto const &[c, vs] : members)
        iso.mapping[vs[0]] = static_cast<Element>(vs[1] - _m);
      if (is_isomorphism(_a, _b, iso.mapping))
        return iso;
      return std::nullopt;
    }

    auto const &vs = members[pick];
    std::size_t x = vs.front();
    std::uint32_t fresh = static_cast<std::uint32_t>(members.size());

    for (std::size_t v : vs) {
      if (v < _m)
        continue;
      auto next = colors;
      next[x] = fresh;
      next[v] = fresh;
      if (auto res = search(std::move(next)))
        return res;
    }
    return std::nullopt;
  }

  FiniteLattice const &_a;
  FiniteLattice const &_b;
  std::size_t _m;
};

} // anonymous namespace

std::optional<LatticeIso> is_isomorphic(FiniteLattice const &a,
                                        FiniteLattice const &b)
{
  if (a.size() != b.size() || a.covers().size() != b.covers().size() ||
      a.height() != b.height())
    return std::nullopt;

  return IsoSearch(a, b).run();
}

} // namespace gilt
