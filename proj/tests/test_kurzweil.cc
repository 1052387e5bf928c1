#include <random>

#include "doctest.h"

#include "gilt/errors.h"
#include "gilt/gset.h"
#include "gilt/kurzweil.h"
#include "helpers.h"

using namespace gilt;
using namespace gilt::test;

namespace
{

template<typename T>
T const &pick(std::vector<T> const &v, std::mt19937 &rng)
{ return v[rng() % v.size()]; }

WreathElement random_element(std::vector<Permutation> const &s_elems,
                             std::vector<Permutation> const &top_elems,
                             std::size_t n, std::mt19937 &rng)
{
  WreathElement e;
  for (std::size_t i = 0; i < n; ++i)
    e.coords.push_back(pick(s_elems, rng));
  e.top = pick(top_elems, rng);
  return e;
}

WreathGroup const &reference()
{
  static WreathGroup w = build_kurzweil(PermGroup::alternating(5),
                                        PermGroup::symmetric(3),
                                        grp(3, {{{0, 1}}}));
  return w;
}

} // anonymous namespace

TEST_CASE("wreath_multiply follows the product formula")
{
  std::mt19937 rng(1);
  auto s_elems = PermGroup::symmetric(4).elements(100);
  auto x = cyc(3, {{0, 1}});
  auto y = cyc(3, {{0, 1, 2}});

  for (int trial = 0; trial < 20; ++trial) {
    WreathElement u{{pick(s_elems, rng), pick(s_elems, rng), pick(s_elems, rng)}, x};
    WreathElement v{{pick(s_elems, rng), pick(s_elems, rng), pick(s_elems, rng)}, y};
    auto uv = wreath_multiply(u, v);
    CHECK(uv.coords[0] == u.coords[0] * v.coords[1]);
    CHECK(uv.coords[1] == u.coords[1] * v.coords[0]);
    CHECK(uv.coords[2] == u.coords[2] * v.coords[2]);
    CHECK(uv.top == x * y);
    CHECK(wreath_multiply(u, wreath_identity(3, 4)) == u);
    CHECK(wreath_multiply(wreath_identity(3, 4), u) == u);
  }

  WreathElement bad{{Permutation(4), Permutation(4)}, Permutation(3)};
  CHECK_THROWS_AS(wreath_multiply(bad, wreath_identity(3, 4)), Error);
  CHECK_THROWS_AS(wreath_multiply(wreath_identity(3, 4), wreath_identity(3, 5)), Error);
}

TEST_CASE("wreath product is associative and the embedding is a homomorphism")
{
  std::mt19937 rng(2);
  auto s_elems = PermGroup::alternating(5).elements(100);
  auto top_elems = PermGroup::symmetric(3).elements(10);

  for (int trial = 0; trial < 1000; ++trial) {
    auto u = random_element(s_elems, top_elems, 3, rng);
    auto v = random_element(s_elems, top_elems, 3, rng);
    auto t = random_element(s_elems, top_elems, 3, rng);
    CHECK(wreath_multiply(wreath_multiply(u, v), t) ==
          wreath_multiply(u, wreath_multiply(v, t)));
    CHECK(wreath_embed(wreath_multiply(u, v)) == wreath_embed(u) * wreath_embed(v));
    CHECK(wreath_decode(wreath_embed(u), 3, 5) == u);
  }
  CHECK_THROWS_AS(wreath_decode(cyc(6, {{1, 2}}), 3, 2), Error);
}

TEST_CASE("reference instance: A5 wr S3 over a point stabilizer")
{
  auto const &w = reference();
  CHECK(w.n == 3u);
  CHECK(w.u.degree() == 15u);
  CHECK(w.u.order() == 1296000);
  CHECK(w.dgbar.order() == 360);
  CHECK(w.u.order() / w.dgbar.order() == 3600);
  CHECK(w.d.order() == 60);
  CHECK(w.gbar.order() == 6);
  CHECK(w.base.order() == 216000);
  CHECK(intersection(w.d, w.gbar).is_trivial());
  CHECK(w.warnings.empty());

  // The n blocks of size k form a U-invariant partition.
  std::vector<std::uint32_t> labels(15);
  for (Point p = 0; p < 15; ++p)
    labels[p] = p / 5u;
  TransitiveGSet natural{15, w.u.generators()};
  CHECK(is_invariant(natural, BlockSystem::from_labels(labels)));
}

TEST_CASE("reference instance: core-free lift and intervals")
{
  auto const &w = reference();
  CHECK(verify_corefree_lift(w));

  auto upper = dual_interval_check(w);
  CHECK(upper.holds);
  CHECK(is_isomorphic(upper.computed, chain(2)));

  auto diagonal = diagonal_interval_check(w);
  CHECK(diagonal.holds);
  CHECK(is_isomorphic(diagonal.computed, mlattice(3)));
}

TEST_CASE("A5 wr S4 over D8")
{
  auto s4 = PermGroup::symmetric(4);
  auto d8 = grp(4, {{{0, 1, 2, 3}}, {{0, 2}}});
  auto w = build_kurzweil(PermGroup::alternating(5), s4, d8);
  CHECK(w.n == 3u);
  // D8 contains the normal Klein four-group of S4.
  REQUIRE(w.warnings.size() == 1u);
  auto upper = dual_interval_check(w);
  CHECK(upper.holds);
  CHECK(is_isomorphic(upper.computed, chain(2)));
}

TEST_CASE("build_kurzweil preconditions")
{
  auto a5 = PermGroup::alternating(5);
  auto kind_of = [](auto &&f) {
    try {
      f();
    } catch (Error const &e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };

  CHECK(kind_of([&] {
    build_kurzweil(a5, PermGroup::cyclic(2), PermGroup::trivial(2));
  }) == ErrorKind::IndexTooSmall);

  CHECK(kind_of([&] {
    build_kurzweil(a5, PermGroup::cyclic(3), PermGroup::symmetric(3));
  }) == ErrorKind::NotASubgroup);

  CHECK(kind_of([&] {
    build_kurzweil(PermGroup::symmetric(3), PermGroup::symmetric(3), grp(3, {{{0, 1}}}));
  }) == ErrorKind::NotSimple);

  KurzweilOptions loose;
  loose.allow_non_simple = true;
  auto w = build_kurzweil(PermGroup::symmetric(3), PermGroup::symmetric(3),
                          grp(3, {{{0, 1}}}), loose);
  CHECK(w.warnings.size() == 1u);
  CHECK(w.u.order() == 216 * 6);
}

TEST_CASE("non-core-free H is tolerated with a warning")
{
  // S3 x C2 on 5 points; H = <(0 1), (3 4)> has index 3 and contains the
  // normal factor C2.
  auto g = direct_product(PermGroup::symmetric(3), PermGroup::cyclic(2));
  auto h = grp(5, {{{0, 1}}, {{3, 4}}});
  REQUIRE_FALSE(is_core_free(g, h));
  auto w = build_kurzweil(PermGroup::alternating(5), g, h);
  REQUIRE(w.warnings.size() == 1u);
  CHECK(w.warnings[0].find("core-free") != std::string::npos);
  CHECK(w.n == 3u);
}

TEST_CASE("kurzweil_iterate_size")
{
  auto const &w = reference();
  auto a5 = PermGroup::alternating(5);
  auto size = kurzweil_iterate_size(w, a5);
  CHECK(size.m == 3600);
  REQUIRE(size.order);
  BigInt expected = boost::multiprecision::pow(BigInt(60), 3600) * 1296000;
  CHECK(*size.order == expected);
  CHECK(size.order_digits == expected.str().size());
  CHECK(size.degree == 3600 * 5);

  auto trivial = kurzweil_iterate_size(w, PermGroup::trivial(1));
  REQUIRE(trivial.order);
  CHECK(*trivial.order == 1296000);

  Config small;
  small.coset_index_cap = 100;
  auto approx = kurzweil_iterate_size(w, a5, small);
  CHECK_FALSE(approx.order);
  CHECK(approx.order_digits == expected.str().size());
}
