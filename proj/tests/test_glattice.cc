#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "gilt/errors.h"
#include "gilt/io.h"
#include "gilt/lattice.h"
#include "gilt/subgroup_table.h"
#include "helpers.h"
#include "oracles.h"

using namespace gilt;
using namespace gilt::test;

namespace
{

FiniteLattice relabel(FiniteLattice const &l, std::vector<Element> const &f)
{
  std::vector<Cover> covers;
  for (auto [a, b] : l.covers())
    covers.emplace_back(f[a], f[b]);
  return FiniteLattice::from_covers(l.size(), covers);
}

FiniteLattice shuffled(FiniteLattice const &l, std::mt19937 &rng)
{
  std::vector<Element> f(l.size());
  std::iota(f.begin(), f.end(), Element{0});
  std::shuffle(f.begin(), f.end(), rng);
  return relabel(l, f);
}

// Product order on chain(a) x chain(b).
FiniteLattice grid(std::size_t a, std::size_t b)
{
  std::vector<Cover> covers;
  for (Element i = 0; i < a; ++i)
    for (Element j = 0; j < b; ++j) {
      if (i + 1u < a)
        covers.emplace_back(i * b + j, (i + 1u) * b + j);
      if (j + 1u < b)
        covers.emplace_back(i * b + j, i * b + j + 1u);
    }
  return FiniteLattice::from_covers(a * b, covers);
}

FiniteLattice pentagon()
{ return FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

std::vector<FiniteLattice> small_lattices()
{
  std::vector<FiniteLattice> res;
  for (std::size_t k = 1; k <= 8; ++k)
    res.push_back(chain(k));
  for (std::size_t k = 1; k <= 6; ++k)
    res.push_back(mlattice(k));
  res.push_back(pentagon());
  res.push_back(grid(2, 2));
  res.push_back(grid(2, 3));
  res.push_back(grid(2, 4));
  res.push_back(partition_lattice(3));
  res.push_back(parachute({chain(3), chain(2)}));
  res.push_back(parachute({chain(3), chain(3)}));
  res.push_back(parachute({chain(4), chain(2)}));
  res.push_back(parachute({chain(3), chain(2), chain(2)}));
  res.push_back(parachute({mlattice(3), chain(2)}));
  res.push_back(parachute({pentagon(), chain(2)}));
  res.push_back(subgroup_lattice_bruteforce(PermGroup::symmetric(3)).lattice);
  res.push_back(subgroup_lattice_bruteforce(PermGroup::cyclic(8)).lattice);
  res.push_back(subgroup_lattice_bruteforce(PermGroup::cyclic(12)).lattice);
  res.push_back(dual(pentagon()));
  res.push_back(dual(parachute({chain(3), chain(2)})));
  return res;
}

} // anonymous namespace

TEST_CASE("lattice_from_covers")
{
  auto c2 = FiniteLattice::from_covers(2, {{0, 1}});
  CHECK(c2.size() == 2u);
  CHECK(c2.bottom() == 0u);
  CHECK(c2.top() == 1u);

  auto diamond = FiniteLattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(diamond.join(1, 2) == 3u);
  CHECK(diamond.meet(1, 2) == 0u);
  CHECK(diamond.atoms() == std::vector<Element>{1, 2});

  // 2 and 3 have no common upper bound.
  try {
    FiniteLattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}});
    FAIL("expected NotALattice");
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
  }
}

TEST_CASE("lattice validation errors")
{
  auto kind_of = [](auto &&f) {
    try {
      f();
    } catch (Error const &e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };

  CHECK(kind_of([] { FiniteLattice::from_covers(0, {}); }) == ErrorKind::NoBoundedTop);
  CHECK(kind_of([] { FiniteLattice::from_covers(2, {{0, 1}, {1, 0}}); }) ==
        ErrorKind::NotAPartialOrder);
  CHECK(kind_of([] { FiniteLattice::from_covers(2, {{0, 0}}); }) ==
        ErrorKind::NotAPartialOrder);
  CHECK(kind_of([] { FiniteLattice::from_covers(2, {{0, 5}}); }) == ErrorKind::InvalidPoint);
  CHECK(kind_of([] { FiniteLattice::from_covers(2, {}); }) == ErrorKind::NotALattice);

  // Two maximal elements above a common bottom.
  CHECK(kind_of([] { FiniteLattice::from_covers(3, {{0, 1}, {0, 2}}); }) ==
        ErrorKind::NotALattice);

  // Bowtie: 0,1 < 2,3 < 4 with an extra bottom; 0 and 1 have two minimal
  // upper bounds.
  CHECK(kind_of([] {
    FiniteLattice::from_covers(
      6, {{5, 0}, {5, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  }) == ErrorKind::NotALattice);
}

TEST_CASE("redundant comparabilities are reduced to covers")
{
  auto l = FiniteLattice::from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(l.covers() == std::vector<Cover>{{0, 1}, {1, 2}});
  CHECK(l == chain(3));
}

TEST_CASE("meet and join are greatest lower and least upper bounds")
{
  for (auto const &l : small_lattices()) {
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) {
        Element j = l.join(a, b), m = l.meet(a, b);
        CHECK(l.leq(a, j));
        CHECK(l.leq(b, j));
        CHECK(l.leq(m, a));
        CHECK(l.leq(m, b));
        for (Element c = 0; c < l.size(); ++c) {
          if (l.leq(a, c) && l.leq(b, c))
            CHECK(l.leq(j, c));
          if (l.leq(c, a) && l.leq(c, b))
            CHECK(l.leq(c, m));
        }
      }
    }
  }
}

TEST_CASE("dual")
{
  CHECK(is_isomorphic(dual(chain(2)), chain(2)));

  for (auto const &l : small_lattices()) {
    auto dd = dual(dual(l));
    CHECK(dd == l);
    auto iso = is_isomorphic(l, dd);
    REQUIRE(iso);
    std::vector<Element> id(l.size());
    std::iota(id.begin(), id.end(), Element{0});
    CHECK(iso->mapping == id);

    auto d = dual(l);
    for (Element a = 0; a < l.size(); ++a)
      for (Element b = 0; b < l.size(); ++b)
        CHECK(d.leq(a, b) == l.leq(b, a));
  }

  auto eq3 = partition_lattice(3);
  CHECK(is_isomorphic(dual(eq3), eq3));
  CHECK(oracle::isomorphic_by_bijections(dual(eq3), eq3));
}

TEST_CASE("partition lattices")
{
  CHECK(partition_lattice(1).size() == 1u);
  CHECK(partition_lattice(3).size() == 5u);
  CHECK(partition_lattice(4).size() == 15u);

  for (unsigned n = 1; n <= 7; ++n)
    CHECK(partition_lattice(n).size() == oracle::bell_by_enumeration(n));

  CHECK(is_isomorphic(partition_lattice(3), mlattice(3)));
  CHECK(partition_lattice(4).height() == 3u);
  CHECK(partition_lattice(4).atoms().size() == 6u);

  CHECK_THROWS_AS(partition_lattice(8), Error);
  CHECK_THROWS_AS(partition_lattice(0), Error);
  Config roomy;
  roomy.partition_n_cap = 8;
  CHECK(partition_lattice(8, roomy).size() == 4140u);
}

TEST_CASE("set partitions are restricted growth strings")
{
  auto parts = set_partitions(3);
  REQUIRE(parts.size() == 5u);
  CHECK(parts.front() == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(parts.back() == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(std::is_sorted(parts.begin(), parts.end()));
}

TEST_CASE("parachute")
{
  auto d = parachute({chain(2), chain(2)});
  CHECK(d.size() == 4u);
  CHECK(is_isomorphic(d, FiniteLattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));

  auto m3 = parachute({chain(2), chain(2), chain(2)});
  CHECK(is_isomorphic(m3, mlattice(3)));
  CHECK(parachute({mlattice(3), chain(2)}).size() == 7u);

  CHECK_THROWS_AS(parachute({chain(2)}), Error);
  CHECK_THROWS_AS(parachute({chain(2), chain(1)}), Error);

  // Atoms are the panel bottoms, numbered in panel order.
  auto p = parachute({chain(3), mlattice(2)});
  CHECK(p.bottom() == 0u);
  CHECK(p.top() == p.size() - 1u);
  CHECK(p.atoms() == std::vector<Element>{1, 3});
}

TEST_CASE("parachute panels are upper intervals")
{
  std::vector<FiniteLattice> pool{chain(2), chain(3), mlattice(3), pentagon(),
                                  grid(2, 3)};
  for (auto const &a : pool) {
    for (auto const &b : pool) {
      std::vector<FiniteLattice> panels{a, b};
      auto p = parachute(panels);
      CHECK(p.size() == a.size() + b.size());
      auto atoms = p.atoms();
      REQUIRE(atoms.size() == 2u);
      for (std::size_t i = 0; i < 2u; ++i)
        CHECK(is_isomorphic(interval_sublattice(p, atoms[i], p.top()).first,
                            panels[i]));
      CHECK(p.meet(atoms[0], atoms[1]) == p.bottom());
      CHECK(p.join(atoms[0], atoms[1]) == p.top());

      auto shape = parachute_shape(p);
      CHECK(shape.is_parachute);
      CHECK(shape.meets_hypothesis() == (a.size() > 2u && b.size() > 2u));
    }
  }

  CHECK_FALSE(parachute_shape(chain(3)).is_parachute);
  CHECK_FALSE(parachute_shape(grid(3, 3)).is_parachute);
  CHECK(parachute_shape(mlattice(4)).is_parachute);
  CHECK_FALSE(parachute_shape(mlattice(4)).meets_hypothesis());
}

TEST_CASE("is_isomorphic")
{
  auto l = partition_lattice(4);
  auto self = is_isomorphic(l, l);
  REQUIRE(self);
  for (Element x = 0; x < l.size(); ++x)
    CHECK(self->mapping[x] == x);

  CHECK_FALSE(is_isomorphic(chain(2), mlattice(2)));
  CHECK(is_isomorphic(partition_lattice(3), parachute({chain(2), chain(2), chain(2)})));
  CHECK(oracle::isomorphic_by_bijections(partition_lattice(3),
                                         parachute({chain(2), chain(2), chain(2)})));
  CHECK(is_isomorphic(mlattice(2), parachute({chain(2), chain(2)})));

  auto sub_s3 = subgroup_lattice_bruteforce(PermGroup::symmetric(3)).lattice;
  CHECK(is_isomorphic(mlattice(4), sub_s3));
}

TEST_CASE("is_isomorphic agrees with the all-bijections search")
{
  auto pool = small_lattices();
  std::mt19937 rng(3);
  std::size_t n = pool.size();
  for (std::size_t i = 0; i < n; ++i)
    if (pool[i].size() <= 8u)
      pool.push_back(shuffled(pool[i], rng));

  for (auto const &a : pool) {
    for (auto const &b : pool) {
      if (a.size() != b.size() || a.size() > 8u)
        continue;
      auto fast = is_isomorphic(a, b);
      CHECK(fast.has_value() == oracle::isomorphic_by_bijections(a, b));
      CHECK(fast.has_value() == is_isomorphic(b, a).has_value());
      if (fast)
        CHECK(is_isomorphism(a, b, fast->mapping));
    }
  }
}

TEST_CASE("is_isomorphic finds relabelings of larger lattices")
{
  std::mt19937 rng(5);
  std::vector<FiniteLattice> pool{
    partition_lattice(5),
    subgroup_lattice_bruteforce(PermGroup::symmetric(4)).lattice,
    subgroup_lattice_bruteforce(PermGroup::alternating(5)).lattice,
    parachute({partition_lattice(3), partition_lattice(3), chain(4)}),
    grid(5, 6)};
  for (auto const &l : pool) {
    auto s = shuffled(l, rng);
    auto iso = is_isomorphic(l, s);
    REQUIRE(iso);
    CHECK(is_isomorphism(l, s, iso->mapping));
    CHECK(is_isomorphic(l, dual(l)).has_value() == is_isomorphic(s, dual(s)).has_value());
  }
  CHECK_FALSE(is_isomorphic(grid(5, 6), grid(3, 10)));
  CHECK_FALSE(is_isomorphic(pentagon(), mlattice(3)));
}

TEST_CASE("is_antichain")
{
  auto m3 = mlattice(3);
  CHECK(is_antichain(m3, m3.atoms()));
  CHECK_FALSE(is_antichain(m3, {m3.bottom(), m3.top()}));
  CHECK(is_antichain(m3, {2}));
  CHECK(is_antichain(m3, {}));
  CHECK_THROWS_AS(is_antichain(m3, {9}), Error);
}

TEST_CASE("lattice JSON round trip")
{
  for (auto const &l : small_lattices()) {
    auto j = lattice_to_json(l);
    CHECK(lattice_from_json(j) == l);
    CHECK(canonical_dump(lattice_to_json(lattice_from_json(j))) == canonical_dump(j));
  }
  CHECK(canonical_dump(lattice_to_json(chain(2))) ==
        "{\n  \"covers\": [\n    [\n      0,\n      1\n    ]\n  ],\n  \"size\": 2\n}\n");
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"size": -1, "covers": []})")), Error);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"covers": []})")), Error);
  CHECK(lattice_to_dot(chain(2)).find("0 -> 1") != std::string::npos);
}
