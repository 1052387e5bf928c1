#include <algorithm>
#include <set>

#include "doctest.h"

#include "gilt/errors.h"
#include "gilt/gset.h"
#include "gilt/subgroup_table.h"
#include "helpers.h"
#include "oracles.h"

using namespace gilt;
using namespace gilt::test;

namespace
{

TransitiveGSet natural(PermGroup const &g)
{ return TransitiveGSet{g.degree(), g.generators()}; }

TransitiveGSet regular(PermGroup const &g)
{ return coset_table(g, PermGroup::trivial(g.degree())).action; }

std::vector<PermGroup> test_groups()
{
  return {PermGroup::symmetric(3),    PermGroup::cyclic(4),
          klein4(),                   PermGroup::alternating(4),
          PermGroup::symmetric(4),    PermGroup::dihedral(5),
          PermGroup::cyclic(12),      PermGroup::alternating(5),
          grp(8, {{{0, 1, 3, 6}, {2, 5, 7, 4}}, {{0, 2, 3, 7}, {1, 4, 6, 5}}}),
          direct_product(PermGroup::symmetric(3), PermGroup::cyclic(2))};
}

} // anonymous namespace

TEST_CASE("principal_congruence")
{
  auto c4 = regular(PermGroup::cyclic(4));
  // Regular C4: the coset of the generator's square pairs up with the identity.
  auto const &gen = c4.gen_images[0];
  Point square = gen[gen[0]];
  auto b = principal_congruence(c4, 0, square);
  CHECK(b.block_count == 2u);
  CHECK(b.class_of[0] == b.class_of[square]);
  CHECK(b.class_of[gen[0]] == b.class_of[gen[square]]);
  CHECK(b.class_of[0] != b.class_of[gen[0]]);

  auto literal = TransitiveGSet{4, {cyc(4, {{0, 1, 2, 3}})}};
  auto lb = principal_congruence(literal, 0, 2);
  CHECK(lb.class_of == std::vector<std::uint32_t>{0, 1, 0, 1});

  auto s4 = natural(PermGroup::symmetric(4));
  for (Point a = 0; a < 4; ++a)
    for (Point c = 0; c < 4; ++c)
      if (a != c)
        CHECK(principal_congruence(s4, a, c).block_count == 1u);

  CHECK_THROWS_AS(principal_congruence(s4, 1, 1), Error);
  CHECK_THROWS_AS(principal_congruence(s4, 1, 7), Error);
}

TEST_CASE("partition join and meet")
{
  auto p = BlockSystem::from_labels({0, 0, 1, 1, 2, 2});
  auto q = BlockSystem::from_labels({0, 1, 1, 2, 2, 3});
  CHECK(join_partitions(p, q).block_count == 1u);
  CHECK(meet_partitions(p, q) == BlockSystem::discrete(6));
  auto r = BlockSystem::from_labels({5, 5, 5, 5, 7, 7});
  CHECK(p.refines(r));
  CHECK_FALSE(r.refines(p));
  CHECK(join_partitions(p, r) == r);
  CHECK(meet_partitions(p, r) == p);
}

TEST_CASE("congruence_lattice examples")
{
  auto s4 = congruence_lattice(natural(PermGroup::symmetric(4)));
  CHECK(is_isomorphic(s4.lattice, chain(2)));

  auto c4 = congruence_lattice(regular(PermGroup::cyclic(4)));
  CHECK(is_isomorphic(c4.lattice, chain(3)));

  auto literal = congruence_lattice(TransitiveGSet{4, {cyc(4, {{0, 1, 2, 3}})}});
  REQUIRE(literal.blocks.size() == 3u);
  CHECK(literal.blocks[1].class_of == std::vector<std::uint32_t>{0, 1, 0, 1});

  auto v4 = congruence_lattice(regular(klein4()));
  CHECK(v4.lattice.size() == 5u);
  CHECK(is_isomorphic(v4.lattice, mlattice(3)));

  CHECK_THROWS_AS(congruence_lattice(TransitiveGSet{4, {cyc(4, {{0, 1}})}}), Error);
}

TEST_CASE("congruences are invariant, distinct and closed")
{
  for (auto const &g : test_groups()) {
    for (auto const &act : {natural(g), regular(g)}) {
      if (act.degree > 200u)
        continue;
      bool transitive = true;
      try {
        act.validate();
      } catch (Error const &) {
        transitive = false;
      }
      if (!transitive)
        continue;

      auto c = congruence_lattice(act);
      auto const &blocks = c.blocks;
      std::set<BlockSystem> distinct(blocks.begin(), blocks.end());
      CHECK(distinct.size() == blocks.size());
      CHECK(blocks.front() == BlockSystem::discrete(act.degree));
      CHECK(blocks.back() == BlockSystem::full(act.degree));

      for (std::size_t i = 0; i < blocks.size(); ++i) {
        CHECK(is_invariant(act, blocks[i]));
        for (std::size_t j = 0; j < blocks.size(); ++j) {
          CHECK(c.lattice.leq(static_cast<Element>(i), static_cast<Element>(j)) ==
                blocks[i].refines(blocks[j]));
          auto m = meet_partitions(blocks[i], blocks[j]);
          auto jn = join_partitions(blocks[i], blocks[j]);
          CHECK(distinct.count(m) == 1u);
          CHECK(distinct.count(jn) == 1u);
          CHECK(blocks[c.lattice.meet(i, j)] == m);
          CHECK(blocks[c.lattice.join(i, j)] == jn);
        }
      }

      CHECK(congruence_lattice(act).blocks == blocks);
    }
  }
}

TEST_CASE("regular congruences match subgroup counts")
{
  for (auto const &g : test_groups()) {
    if (g.order() > 60)
      continue;
    auto c = congruence_lattice(regular(g));
    auto sub = subgroup_lattice_bruteforce(g);
    CHECK(c.lattice.size() == sub.subgroups.size());
    CHECK(is_isomorphic(c.lattice, sub.lattice));
  }
}

TEST_CASE("interval_lattice examples")
{
  auto s3 = PermGroup::symmetric(3);
  CHECK(is_isomorphic(interval_lattice(s3, PermGroup::trivial(3)), mlattice(4)));
  auto s4 = PermGroup::symmetric(4);
  auto d8 = grp(4, {{{0, 1, 2, 3}}, {{0, 2}}});
  CHECK(is_isomorphic(interval_lattice(s4, d8), chain(2)));
  CHECK(interval_lattice(s4, s4).size() == 1u);
  CHECK_THROWS_AS(interval_lattice(d8, s4), Error);
}

TEST_CASE("interval_subgroups lists the intermediate subgroups")
{
  for (auto const &g : test_groups()) {
    auto sub = subgroup_lattice_bruteforce(g);
    for (std::size_t i = 0; i < sub.subgroups.size(); i += 3) {
      auto h = sub.group(i);
      auto res = interval_subgroups(g, h);
      auto [bf, members] = interval_bruteforce(sub, static_cast<Element>(i));
      REQUIRE(res.subgroups.size() == members.size());

      std::vector<Element> found;
      for (auto const &y : res.subgroups)
        found.push_back(sub.find(y));
      std::vector<Element> sorted = found;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == members);

      // The map congruence -> subgroup is an order isomorphism.
      for (Element a = 0; a < res.lattice.size(); ++a)
        for (Element b = 0; b < res.lattice.size(); ++b)
          CHECK(res.lattice.leq(a, b) == sub.lattice.leq(found[a], found[b]));
    }
  }
}

TEST_CASE("subgroup_lattice_bruteforce")
{
  CHECK(subgroup_lattice_bruteforce(PermGroup::symmetric(3)).subgroups.size() == 6u);
  auto c6 = subgroup_lattice_bruteforce(PermGroup::cyclic(6));
  CHECK(c6.subgroups.size() == 4u);
  CHECK(subgroup_lattice_bruteforce(PermGroup::trivial(2)).subgroups.size() == 1u);
  CHECK(subgroup_lattice_bruteforce(PermGroup::symmetric(4)).subgroups.size() == 30u);
  CHECK(subgroup_lattice_bruteforce(PermGroup::alternating(5)).subgroups.size() == 59u);
  CHECK(subgroup_lattice_bruteforce(PermGroup::symmetric(5)).subgroups.size() == 156u);

  Config tight;
  tight.brute_force_order_bound = 100;
  CHECK_THROWS_AS(subgroup_lattice_bruteforce(PermGroup::symmetric(5), tight), Error);
}

TEST_CASE("interval_bruteforce")
{
  auto s3 = PermGroup::symmetric(3);
  CHECK(is_isomorphic(interval_bruteforce(s3, grp(3, {{{0, 1, 2}}})), chain(2)));
  CHECK(is_isomorphic(interval_bruteforce(s3, grp(3, {{{0, 1}}})), chain(2)));
  CHECK(is_isomorphic(interval_bruteforce(PermGroup::alternating(4), klein4()), chain(2)));
  CHECK_THROWS_AS(interval_bruteforce(grp(3, {{{0, 1, 2}}}), s3), Error);
}

TEST_CASE("interval_lattice agrees with brute force on every subgroup")
{
  for (auto const &g : test_groups()) {
    auto sub = subgroup_lattice_bruteforce(g);
    for (Element i = 0; i < sub.subgroups.size(); ++i) {
      auto fast = interval_lattice(g, sub.group(i));
      auto slow = interval_bruteforce(sub, i).first;
      CHECK(is_isomorphic(fast, slow));
    }
  }
}

TEST_CASE("complements_in_interval")
{
  auto s3 = PermGroup::symmetric(3);
  auto one = PermGroup::trivial(3);
  auto a3 = grp(3, {{{0, 1, 2}}});

  auto top = complements_in_interval(s3, one, one);
  REQUIRE(top.size() == 1u);
  CHECK(top[0].same_group(s3));

  auto bottom = complements_in_interval(s3, one, s3);
  REQUIRE(bottom.size() == 1u);
  CHECK(bottom[0].is_trivial());

  auto c = complements_in_interval(s3, one, a3);
  CHECK(c.size() == 3u);
  for (auto const &b : c)
    CHECK(b.order() == 2);

  CHECK_THROWS_AS(complements_in_interval(s3, a3, grp(3, {{{0, 1}}})), Error);
}

TEST_CASE("Dedekind's rule and the antichain property on small groups")
{
  for (auto const &g : {PermGroup::symmetric(3), PermGroup::alternating(4), klein4()}) {
    auto sub = subgroup_lattice_bruteforce(g);
    auto const &t = *sub.table;
    auto const &s = sub.subgroups;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (!s[a].is_subset_of(s[b]))
          continue;
        for (std::size_t c = 0; c < s.size(); ++c) {
          CHECK(t.product(s[a], s[c] & s[b]) == (t.product(s[a], s[c]) & s[b]));
          CHECK(t.product(s[c] & s[b], s[a]) == (t.product(s[c], s[a]) & s[b]));
        }
      }

    for (Element h = 0; h < s.size(); ++h)
      for (Element a = 0; a < s.size(); ++a) {
        if (!sub.lattice.leq(h, a))
          continue;
        std::vector<Element> permuting;
        for (Element b : complements_in_interval(sub, h, a))
          if (t.product(s[a], s[b]) == t.product(s[b], s[a]))
            permuting.push_back(b);
        CHECK(is_antichain(sub.lattice, permuting));
      }
  }
}
