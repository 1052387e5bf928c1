#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "gilt/errors.h"
#include "gilt/gset.h"
#include "gilt/parallel.h"

namespace gilt
{

namespace
{

class UnionFind
{
public:
  explicit UnionFind(std::size_t n)
  : _parent(n)
  { std::iota(_parent.begin(), _parent.end(), std::uint32_t{0}); }

  std::uint32_t find(std::uint32_t x)
  {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  bool unite(std::uint32_t x, std::uint32_t y)
  {
    x = find(x);
    y = find(y);
    if (x == y)
      return false;
    if (y < x)
      std::swap(x, y);
    _parent[y] = x;
    return true;
  }

  std::vector<std::uint32_t> labels()
  {
    std::vector<std::uint32_t> res(_parent.size());
    for (std::uint32_t x = 0; x < res.size(); ++x)
      res[x] = find(x);
    return res;
  }

private:
  std::vector<std::uint32_t> _parent;
};

} // anonymous namespace

BlockSystem BlockSystem::discrete(std::size_t n)
{
  BlockSystem b;
  b.class_of.resize(n);
  std::iota(b.class_of.begin(), b.class_of.end(), std::uint32_t{0});
  b.block_count = n;
  return b;
}

BlockSystem BlockSystem::full(std::size_t n)
{
  BlockSystem b;
  b.class_of.assign(n, 0u);
  b.block_count = n == 0u ? 0u : 1u;
  return b;
}

BlockSystem BlockSystem::from_labels(std::vector<std::uint32_t> const &labels)
{
  BlockSystem b;
  std::uint32_t max_label = 0;
  for (auto x : labels)
    max_label = std::max(max_label, x);

  if (max_label < labels.size()) {
    std::vector<std::uint32_t> relabel(labels.size(), ~std::uint32_t{0});
    b.class_of.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto &r = relabel[labels[i]];
      if (r == ~std::uint32_t{0})
        r = static_cast<std::uint32_t>(b.block_count++);
      b.class_of[i] = r;
    }
    return b;
  }

  std::unordered_map<std::uint32_t, std::uint32_t> relabel;
  b.class_of.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, _] = relabel.emplace(labels[i], static_cast<std::uint32_t>(relabel.size()));
    b.class_of[i] = it->second;
  }
  b.block_count = relabel.size();
  return b;
}

Bitset BlockSystem::block_of(Point p) const
{
  Bitset res(class_of.size());
  for (std::size_t i = 0; i < class_of.size(); ++i)
    if (class_of[i] == class_of[p])
      res.set(i);
  return res;
}

bool BlockSystem::refines(BlockSystem const &other) const
{
  std::vector<std::int64_t> image(block_count, -1);
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    auto &slot = image[class_of[i]];
    if (slot < 0)
      slot = other.class_of[i];
    else if (slot != other.class_of[i])
      return false;
  }
  return true;
}

BlockSystem join_partitions(BlockSystem const &p, BlockSystem const &q)
{
  if (p.degree() != q.degree())
    throw Error(ErrorKind::DegreeMismatch, "partitions of different sets");

  std::size_t const n = p.degree();
  UnionFind uf(n);
  std::vector<std::int64_t> first_p(p.block_count, -1), first_q(q.block_count, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto &fp = first_p[p.class_of[i]];
    if (fp < 0)
      fp = i;
    else
      uf.unite(static_cast<std::uint32_t>(fp), i);

    auto &fq = first_q[q.class_of[i]];
    if (fq < 0)
      fq = i;
    else
      uf.unite(static_cast<std::uint32_t>(fq), i);
  }
  return BlockSystem::from_labels(uf.labels());
}

BlockSystem meet_partitions(BlockSystem const &p, BlockSystem const &q)
{
  if (p.degree() != q.degree())
    throw Error(ErrorKind::DegreeMismatch, "partitions of different sets");

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> labels(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) {
    auto [it, _] = ids.emplace(std::make_pair(p.class_of[i], q.class_of[i]),
                               static_cast<std::uint32_t>(ids.size()));
    labels[i] = it->second;
  }
  return BlockSystem::from_labels(labels);
}

bool is_invariant(TransitiveGSet const &a, BlockSystem const &b)
{
  for (auto const &g : a.gen_images) {
    std::vector<std::int64_t> image(b.block_count, -1);
    for (Point x = 0; x < a.degree; ++x) {
      auto &slot = image[b.class_of[x]];
      if (slot < 0)
        slot = b.class_of[g[x]];
      else if (slot != b.class_of[g[x]])
        return false;
    }
  }
  return true;
}

BlockSystem principal_congruence(TransitiveGSet const &a, Point x, Point y)
{
  if (x >= a.degree || y >= a.degree)
    throw Error(ErrorKind::InvalidPoint, "point out of range");
  if (x == y)
    throw Error(ErrorKind::InvalidPoint, "principal congruence needs two distinct points");

  UnionFind uf(a.degree);
  std::vector<std::pair<Point, Point>> queue{{x, y}};
  uf.unite(x, y);

  // Every merged pair is pushed once; closing the queue under the generators
  // makes the partition invariant.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [u, v] = queue[i];
    for (auto const &g : a.gen_images) {
      Point gu = uf.find(g[u]);
      Point gv = uf.find(g[v]);
      if (uf.unite(gu, gv))
        queue.emplace_back(gu, gv);
    }
  }

  return BlockSystem::from_labels(uf.labels());
}

CongruenceLattice congruence_lattice(TransitiveGSet const &a,
                                     Config const &config)
{
  a.validate();
  std::size_t const n = a.degree;

  std::vector<BlockSystem> principal(n == 0u ? 0u : n - 1u);
  parallel_for(principal.size(), config.thread_count, [&](std::size_t i) {
    principal[i] = principal_congruence(a, 0u, static_cast<Point>(i + 1u));
  });

  std::set<BlockSystem> distinct(principal.begin(), principal.end());
  std::vector<BlockSystem> generators(distinct.begin(), distinct.end());

  std::set<BlockSystem> all(distinct);
  all.insert(BlockSystem::discrete(n));

  std::vector<BlockSystem> work(generators);
  while (!work.empty()) {
    BlockSystem c = std::move(work.back());
    work.pop_back();
    for (auto const &p : generators) {
      if (p.refines(c))
        continue;
      auto j = join_partitions(c, p);
      if (all.insert(j).second)
        work.push_back(std::move(j));
    }
  }

  std::vector<std::pair<Bitset, BlockSystem>> keyed;
  for (auto const &b : all)
    keyed.emplace_back(b.block_of(0u), b);
  std::sort(keyed.begin(), keyed.end(), [](auto const &x, auto const &y) {
    auto cx = x.first.count(), cy = y.first.count();
    if (cx != cy)
      return cx < cy;
    return x.second < y.second;
  });

  std::size_t const m = keyed.size();
  std::vector<Bitset> down(m, Bitset(m));
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x < m; ++x)
      if (keyed[x].first.is_subset_of(keyed[y].first))
        down[y].set(x);

  CongruenceLattice res{FiniteLattice::from_down_sets(std::move(down)), {}};
  for (auto &kb : keyed)
    res.blocks.push_back(std::move(kb.second));
  return res;
}

FiniteLattice interval_lattice(PermGroup const &g, PermGroup const &h,
                               Config const &config)
{
  auto table = coset_table(g, h, config);
  return congruence_lattice(table.action, config).lattice;
}

IntervalSubgroups interval_subgroups(PermGroup const &g, PermGroup const &h,
                                     Config const &config)
{
  auto table = coset_table(g, h, config);
  auto congruences = congruence_lattice(table.action, config);

  IntervalSubgroups res{congruences.lattice, {}};
  for (auto const &b : congruences.blocks) {
    PermGroup y = h;
    b.block_of(0u).for_each([&](std::size_t p) {
      auto const &rep = table.representatives[p];
      if (y.contains(rep))
        return;
      auto gens = y.generators();
      gens.push_back(rep);
      y = PermGroup(g.degree(), std::move(gens));
    });
    res.subgroups.push_back(std::move(y));
  }
  return res;
}

} // namespace gilt
