#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "oracles.h"

namespace gilt::oracle
{

std::set<Permutation> naive_closure(std::size_t degree,
                                    std::vector<Permutation> const &gens)
{
  std::set<Permutation> res{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &g : gens) {
      auto y = queue[i] * g;
      if (res.insert(y).second)
        queue.push_back(y);
    }
  }
  return res;
}

std::set<Permutation> core_by_conjugates(std::set<Permutation> const &g,
                                         std::set<Permutation> const &h)
{
  std::set<Permutation> res = h;
  for (auto const &x : g) {
    std::set<Permutation> conj;
    for (auto const &y : h)
      conj.insert(x.inverse() * y * x);
    std::set<Permutation> both;
    std::set_intersection(res.begin(), res.end(), conj.begin(), conj.end(),
                          std::inserter(both, both.end()));
    res = std::move(both);
  }
  return res;
}

namespace
{

void enumerate_partitions(unsigned next, unsigned n,
                          std::vector<std::vector<unsigned>> &blocks,
                          std::uint64_t &count)
{
  if (next == n) {
    ++count;
    return;
  }
  for (auto &b : blocks) {
    b.push_back(next);
    enumerate_partitions(next + 1u, n, blocks, count);
    b.pop_back();
  }
  blocks.push_back({next});
  enumerate_partitions(next + 1u, n, blocks, count);
  blocks.pop_back();
}

} // anonymous namespace

std::uint64_t bell_by_enumeration(unsigned n)
{
  std::uint64_t count = 0;
  std::vector<std::vector<unsigned>> blocks;
  enumerate_partitions(0u, n, blocks, count);
  return count;
}

bool isomorphic_by_bijections(FiniteLattice const &a, FiniteLattice const &b)
{
  if (a.size() != b.size())
    return false;

  std::size_t const m = a.size();
  std::vector<Element> f(m);
  std::iota(f.begin(), f.end(), Element{0});
  do {
    bool ok = true;
    for (Element x = 0; x < m && ok; ++x)
      for (Element y = 0; y < m && ok; ++y)
        ok = a.leq(x, y) == b.leq(f[x], f[y]);
    if (ok)
      return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

NormalStructure normal_structure(SubgroupLattice const &sub)
{
  NormalStructure res;
  for (auto const &s : sub.subgroups)
    if (s.count() > 1u && sub.table->is_normal(s))
      res.normal.push_back(s);

  for (auto const &n : res.normal) {
    bool minimal = std::none_of(res.normal.begin(), res.normal.end(),
                                [&](Bitset const &m) {
      return m != n && m.is_subset_of(n);
    });
    if (minimal)
      res.minimal.push_back(n);
  }
  return res;
}

Bitset centralizer(ElementTable const &t, Bitset const &s)
{
  Bitset res = t.empty_set();
  for (std::uint32_t x = 0; x < t.order(); ++x) {
    bool commutes = true;
    s.for_each([&](std::size_t y) {
      auto yy = static_cast<std::uint32_t>(y);
      if (t.mul(x, yy) != t.mul(yy, x))
        commutes = false;
    });
    if (commutes)
      res.set(x);
  }
  return res;
}

bool solvable(ElementTable const &t)
{
  std::vector<std::uint32_t> current(t.order());
  std::iota(current.begin(), current.end(), std::uint32_t{0});

  for (;;) {
    std::vector<std::uint32_t> commutators;
    for (auto x : current)
      for (auto y : current)
        commutators.push_back(
          t.mul(t.mul(t.inverse(x), t.inverse(y)), t.mul(x, y)));

    auto next = t.closure(commutators).indices();
    if (next.size() == current.size())
      return current.size() == 1u;
    current.assign(next.begin(), next.end());
  }
}

namespace
{

std::uint64_t factorial(unsigned n)
{ return n <= 1u ? 1u : n * factorial(n - 1u); }

// Candidate S_n / A_n of the given order with a small generating list.
std::vector<std::pair<std::size_t, std::vector<Permutation>>>
candidates(std::uint64_t order)
{
  std::vector<std::pair<std::size_t, std::vector<Permutation>>> res;
  for (unsigned n = 1; factorial(n) / 2u <= order; ++n) {
    std::vector<Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Point{0});

    if (factorial(n) == order) {
      std::vector<Permutation> gens;
      if (n >= 2u)
        gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
      if (n >= 3u)
        gens.push_back(Permutation::from_cycles(n, {cycle}));
      res.emplace_back(n, gens);
    }

    if (n >= 3u && factorial(n) / 2u == order) {
      std::vector<Permutation> gens;
      for (Point k = 2; k < n; ++k)
        gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
      res.emplace_back(n, gens);
    }
  }
  return res;
}

bool extends_to_isomorphism(ElementTable const &t,
                            std::vector<Permutation> const &elements,
                            std::map<Permutation, std::size_t> const &index,
                            std::vector<Permutation> const &gens,
                            std::vector<std::uint32_t> const &images)
{
  std::vector<std::int64_t> phi(elements.size(), -1);
  std::vector<std::size_t> queue{index.at(Permutation(elements[0].degree()))};
  phi[queue[0]] = 0;

  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::size_t x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t y = index.at(elements[x] * gens[k]);
      auto img = t.mul(static_cast<std::uint32_t>(phi[x]), images[k]);
      if (phi[y] < 0) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return false;
      }
    }
  }

  std::set<std::int64_t> distinct(phi.begin(), phi.end());
  return queue.size() == elements.size() && distinct.size() == elements.size();
}

} // anonymous namespace

bool alt_or_sym(ElementTable const &t)
{
  std::uint64_t const order = t.order();

  for (auto const &[n, gens] : candidates(order)) {
    auto closure = naive_closure(n, gens);
    if (closure.size() != order)
      continue;

    std::vector<Permutation> elements(closure.begin(), closure.end());
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
      index.emplace(elements[i], i);

    // Odometer over all tuples of images for the generators.
    std::vector<std::uint32_t> images(gens.size(), 0u);
    for (;;) {
      if (extends_to_isomorphism(t, elements, index, gens, images))
        return true;

      std::size_t k = 0;
      while (k < images.size() && ++images[k] == order)
        images[k++] = 0u;
      if (k == images.size())
        break;
    }
  }
  return false;
}

} // namespace gilt::oracle
