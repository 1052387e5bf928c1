#include <numeric>
#include <random>
#include <thread>
#include <set>

#include "doctest.h"

#include "gilt/errors.h"
#include "gilt/perm_group.h"
#include "gilt/subgroup_table.h"
#include "helpers.h"
#include "oracles.h"

using namespace gilt;
using namespace gilt::test;

namespace
{

std::set<Permutation> elements_of(PermGroup const &g)
{ return oracle::naive_closure(g.degree(), g.generators()); }

Permutation random_perm(std::size_t n, std::mt19937 &rng)
{
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

std::vector<PermGroup> small_groups()
{
  return {PermGroup::trivial(3),
          PermGroup::symmetric(3),
          PermGroup::alternating(4),
          PermGroup::symmetric(4),
          PermGroup::alternating(5),
          PermGroup::dihedral(6),
          PermGroup::cyclic(7),
          klein4(),
          grp(8, {{{0, 1, 3, 6}, {2, 5, 7, 4}}, {{0, 2, 3, 7}, {1, 4, 6, 5}}}),
          direct_product(PermGroup::symmetric(3), PermGroup::cyclic(2)),
          grp(7, {{{0, 1, 2, 3, 4, 5, 6}}, {{1, 2, 4}, {3, 6, 5}}})};
}

} // anonymous namespace

TEST_CASE("compose uses the right action")
{
  auto a = cyc(3, {{0, 1}});
  CHECK((a * a).is_identity());
  auto p = cyc(3, {{0, 1, 2}});
  CHECK(p * Permutation(3) == p);

  // p = (0 1 2), q = (0 1): 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1.
  CHECK(compose(p, a) == cyc(3, {{1, 2}}));
  CHECK_THROWS_AS(compose(p, Permutation(4)), Error);
}

TEST_CASE("group axioms hold for random permutations")
{
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto p = random_perm(6, rng), q = random_perm(6, rng), r = random_perm(6, rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * p.inverse()).is_identity());
    for (Point x = 0; x < 6; ++x)
      CHECK((p * q)[x] == q[p[x]]);
  }
}

TEST_CASE("cycle notation round trip")
{
  auto p = Permutation::parse(5, "(1 2 3)(4 5)");
  CHECK(p == cyc(5, {{0, 1, 2}, {3, 4}}));
  CHECK(p.to_string() == "(1 2 3)(4 5)");
  CHECK(Permutation(4).to_string() == "()");
  CHECK(Permutation::parse(4, "()").is_identity());
  CHECK_THROWS_AS(Permutation::parse(3, "(1 4)"), Error);
  CHECK_THROWS_AS(Permutation::parse(3, "(1 2"), Error);
  CHECK_THROWS_AS(Permutation::parse(3, "(1 2 1)"), Error);
}

TEST_CASE("group_order")
{
  CHECK(group_order(PermGroup::trivial(4)) == 1);
  CHECK(group_order(grp(3, {{{0, 1, 2}}, {{0, 1}}})) == 6);
  CHECK(group_order(grp(5, {{{0, 1, 2, 3, 4}}, {{0, 1, 2}}})) == 60);
}

TEST_CASE("group_order matches naive closure")
{
  for (auto const &g : small_groups())
    CHECK(g.order() == elements_of(g).size());

  CHECK(PermGroup::symmetric(6).order() == 720);
  CHECK(PermGroup::alternating(6).order() == 360);
  CHECK(PermGroup::symmetric(1).order() == 1);
  CHECK(PermGroup::alternating(2).order() == 1);
}

TEST_CASE("membership agrees with the element list")
{
  auto s3 = PermGroup::symmetric(3);
  auto a3 = grp(3, {{{0, 1, 2}}});
  CHECK(contains(s3, cyc(3, {{0, 1}})));
  CHECK_FALSE(contains(a3, cyc(3, {{0, 1}})));
  CHECK(contains(a3, Permutation(3)));
  CHECK_THROWS_AS(contains(a3, Permutation(4)), Error);

  auto a4 = PermGroup::alternating(4);
  auto elems = elements_of(a4);
  std::size_t count = 0;
  std::vector<Point> images{0, 1, 2, 3};
  do {
    Permutation p(images);
    bool in = contains(a4, p);
    CHECK(in == (elems.count(p) == 1u));
    count += in;
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(count == 12u);
}

TEST_CASE("coset_action")
{
  auto s3 = PermGroup::symmetric(3);
  auto c2 = grp(3, {{{0, 1}}});
  auto res = coset_action(s3, c2);
  CHECK(res.action.degree == 3u);
  CHECK(res.kernel.is_trivial());
  CHECK(res.image.order() == 6);

  auto whole = coset_action(s3, s3);
  CHECK(whole.action.degree == 1u);
  CHECK(whole.kernel.order() == 6);

  auto s4 = PermGroup::symmetric(4);
  auto a4 = PermGroup::alternating(4);
  auto sign = coset_action(s4, a4);
  CHECK(sign.action.degree == 2u);
  CHECK(sign.kernel.same_group(a4));

  CHECK_THROWS_AS(coset_action(a4, s4), Error);
}

TEST_CASE("core")
{
  auto s3 = PermGroup::symmetric(3);
  auto c2 = grp(3, {{{0, 1}}});
  auto a3 = grp(3, {{{0, 1, 2}}});
  CHECK(core(s3, c2).is_trivial());
  CHECK(core(s3, a3).same_group(a3));
  CHECK(core(s3, s3).same_group(s3));
  CHECK(is_core_free(s3, c2));
  CHECK_FALSE(is_core_free(s3, a3));
  CHECK(is_core_free(s3, PermGroup::trivial(3)));
}

TEST_CASE("core is the largest normal subgroup inside H")
{
  // Against the intersection of conjugates and against every normal
  // subgroup found by enumeration.
  for (auto const &g : small_groups()) {
    if (g.order() > 120)
      continue;
    auto sub = subgroup_lattice_bruteforce(g);
    auto normals = oracle::normal_structure(sub).normal;
    auto g_elems = elements_of(g);

    for (std::size_t i = 0; i < sub.subgroups.size(); ++i) {
      auto h = sub.group(i);
      auto c = core(g, h);
      CHECK(is_normal(g, c));
      CHECK(is_subgroup(h, c));
      CHECK(elements_of(c) == oracle::core_by_conjugates(g_elems, elements_of(h)));
      auto c_set = sub.table->elements_of(c);
      for (auto const &n : normals)
        if (n.is_subset_of(sub.subgroups[i]))
          CHECK(n.is_subset_of(c_set));

      CHECK(coset_action(g, h).kernel.same_group(c));
    }
  }
}

TEST_CASE("normal_closure")
{
  auto s3 = PermGroup::symmetric(3);
  CHECK(normal_closure(s3, {cyc(3, {{0, 1}})}).order() == 6);
  CHECK(normal_closure(s3, {cyc(3, {{0, 1, 2}})}).same_group(grp(3, {{{0, 1, 2}}})));
  CHECK(normal_closure(s3, {Permutation(3)}).is_trivial());
  CHECK_THROWS_AS(normal_closure(grp(3, {{{0, 1, 2}}}), {cyc(3, {{0, 1}})}), Error);
}

TEST_CASE("centralizer")
{
  auto s3 = PermGroup::symmetric(3);
  auto a3 = grp(3, {{{0, 1, 2}}});
  CHECK(centralizer(s3, a3).same_group(a3));
  CHECK(centralizer(s3, PermGroup::trivial(3)).same_group(s3));
  auto a4 = PermGroup::alternating(4);
  CHECK(centralizer(a4, klein4()).same_group(klein4()));

  Config tight;
  tight.element_scan_bound = 10;
  CHECK_THROWS_AS(centralizer(a4, klein4(), tight), Error);
}

TEST_CASE("solvability")
{
  auto s3 = solvability(PermGroup::symmetric(3));
  CHECK(s3.solvable);
  CHECK(s3.series.size() == 3u);
  CHECK_FALSE(is_solvable(PermGroup::alternating(5)));
  CHECK(is_solvable(PermGroup::trivial(2)));
  CHECK(is_solvable(PermGroup::symmetric(4)));
  CHECK_FALSE(is_solvable(PermGroup::symmetric(5)));
}

TEST_CASE("minimal normal subgroups")
{
  auto s3 = minimal_normal_subgroups(PermGroup::symmetric(3));
  REQUIRE(s3.size() == 1u);
  CHECK(s3[0].order() == 3);

  auto a4 = minimal_normal_subgroups(PermGroup::alternating(4));
  REQUIRE(a4.size() == 1u);
  CHECK(a4[0].same_group(klein4()));

  auto v4 = minimal_normal_subgroups(klein4());
  CHECK(v4.size() == 3u);
  for (auto const &n : v4)
    CHECK(n.order() == 2);

  CHECK(is_subdirectly_irreducible(PermGroup::alternating(4)));
  CHECK_FALSE(is_subdirectly_irreducible(klein4()));
  CHECK(is_subdirectly_irreducible(PermGroup::symmetric(3)));
  CHECK_THROWS_AS(is_subdirectly_irreducible(PermGroup::trivial(3)), Error);
}

TEST_CASE("minimal normal subgroups agree with enumeration")
{
  for (auto const &g : small_groups()) {
    if (g.is_trivial())
      continue;
    auto sub = subgroup_lattice_bruteforce(g);
    auto expected = oracle::normal_structure(sub).minimal;
    auto found = minimal_normal_subgroups(g);
    REQUIRE(found.size() == expected.size());
    std::set<Bitset> a(expected.begin(), expected.end()), b;
    for (auto const &n : found)
      b.insert(sub.table->elements_of(n));
    CHECK(a == b);
  }
}

TEST_CASE("direct_product")
{
  auto s3 = PermGroup::symmetric(3);
  CHECK(direct_product(s3, s3).order() == 36);
  CHECK(direct_product(PermGroup::trivial(2), s3).order() == 6);
  auto p = direct_product(s3, PermGroup::cyclic(2));
  CHECK(p.degree() == 5u);
  CHECK(elements_of(p).size() == 12u);
}

TEST_CASE("quotient_by_core")
{
  auto s3 = PermGroup::symmetric(3);
  auto a3 = grp(3, {{{0, 1, 2}}});
  auto [gbar, hbar] = quotient_by_core(s3, a3);
  CHECK(gbar.order() == 2);
  CHECK(hbar.is_trivial());

  auto c2 = grp(3, {{{0, 1}}});
  auto [g2, h2] = quotient_by_core(s3, c2);
  CHECK(g2.order() == 6);
  CHECK(h2.order() == 2);
  CHECK(is_core_free(g2, h2));

  auto s4 = PermGroup::symmetric(4);
  auto d8 = grp(4, {{{0, 1, 2, 3}}, {{0, 2}}});
  // D8 contains the normal Klein four-group of S4, so its core is V4.
  CHECK(core(s4, d8).same_group(klein4()));
  auto [g3, h3] = quotient_by_core(s4, d8);
  CHECK(g3.order() == 6);
  CHECK(h3.order() == 2);
  CHECK(is_core_free(g3, h3));
}

TEST_CASE("permutes")
{
  auto s3 = PermGroup::symmetric(3);
  auto a = grp(3, {{{0, 1}}});
  auto b = grp(3, {{{0, 2}}});
  auto a3 = grp(3, {{{0, 1, 2}}});
  CHECK(permutes(s3, a3, a));
  CHECK_FALSE(permutes(s3, a, b));
  CHECK(permutes(s3, a, a));
}

TEST_CASE("permutes agrees with literal set products")
{
  for (auto const &g : small_groups()) {
    if (g.order() > 120)
      continue;
    auto sub = subgroup_lattice_bruteforce(g);
    auto const &t = *sub.table;
    for (std::size_t i = 0; i < sub.subgroups.size(); ++i) {
      for (std::size_t j = i; j < sub.subgroups.size(); ++j) {
        auto const &a = sub.subgroups[i];
        auto const &b = sub.subgroups[j];
        bool literal = t.product(a, b) == t.product(b, a);
        CHECK(permutes(g, sub.group(i), sub.group(j)) == literal);
      }
    }
  }
}

TEST_CASE("lazy chain is shared and thread safe")
{
  auto g = PermGroup::symmetric(7);
  std::vector<std::thread> pool;
  std::vector<BigInt> orders(4);
  for (int i = 0; i < 4; ++i)
    pool.emplace_back([&, i] { orders[i] = g.order(); });
  for (auto &t : pool)
    t.join();
  for (auto const &o : orders)
    CHECK(o == 5040);
}

TEST_CASE("random groups: order, membership and kernels against naive closure")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 4u + static_cast<std::size_t>(trial % 4);
    PermGroup g(n, {random_perm(n, rng), random_perm(n, rng)});
    auto elems = elements_of(g);
    REQUIRE(g.order() == elems.size());
    if (elems.size() > 720u)
      continue;

    for (int probe = 0; probe < 20; ++probe) {
      auto p = random_perm(n, rng);
      CHECK(g.contains(p) == (elems.count(p) == 1u));
    }

    // H generated by one random element of G.
    auto it = elems.begin();
    std::advance(it, static_cast<long>(rng() % elems.size()));
    PermGroup h(n, {*it});
    auto c = core(g, h);
    CHECK(elements_of(c) == oracle::core_by_conjugates(elems, elements_of(h)));
  }
}
