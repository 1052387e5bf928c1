#include <boost/multiprecision/cpp_dec_float.hpp>

#include "gilt/errors.h"
#include "gilt/gset.h"
#include "gilt/kurzweil.h"

namespace gilt
{

WreathElement wreath_identity(std::size_t n, std::size_t k)
{ return WreathElement{std::vector<Permutation>(n, Permutation(k)), Permutation(n)}; }

namespace
{

void check_shape(WreathElement const &u)
{
  if (u.coords.size() != u.top.degree())
    throw Error(ErrorKind::ShapeMismatch,
                "wreath element has " + std::to_string(u.coords.size()) +
                " coordinates but its top permutes " +
                std::to_string(u.top.degree()) + " blocks");
  for (auto const &s : u.coords)
    if (s.degree() != u.coords.front().degree())
      throw Error(ErrorKind::ShapeMismatch, "coordinates of unequal degree");
}

} // anonymous namespace

WreathElement wreath_multiply(WreathElement const &u, WreathElement const &v)
{
  check_shape(u);
  check_shape(v);
  if (u.coords.size() != v.coords.size() ||
      (!u.coords.empty() && u.coords[0].degree() != v.coords[0].degree()))
    throw Error(ErrorKind::ShapeMismatch, "wreath elements of different shape");

  WreathElement res;
  for (std::size_t i = 0; i < u.coords.size(); ++i)
    res.coords.push_back(u.coords[i] * v.coords[u.top[static_cast<Point>(i)]]);
  res.top = u.top * v.top;
  return res;
}

Permutation wreath_embed(WreathElement const &u)
{
  check_shape(u);
  std::size_t const n = u.coords.size();
  std::size_t const k = n == 0u ? 0u : u.coords[0].degree();

  std::vector<Point> images(n * k);
  for (Point i = 0; i < n; ++i)
    for (Point p = 0; p < k; ++p)
      images[i * k + p] = static_cast<Point>(u.top[i] * k + u.coords[i][p]);
  return Permutation::from_images_unchecked(std::move(images));
}

WreathElement wreath_decode(Permutation const &p, std::size_t n, std::size_t k)
{
  if (p.degree() != n * k || k == 0u)
    throw Error(ErrorKind::ShapeMismatch, "permutation does not act on n*k points");

  WreathElement res;
  std::vector<Point> top(n);
  for (Point i = 0; i < n; ++i) {
    top[i] = static_cast<Point>(p[static_cast<Point>(i * k)] / k);
    std::vector<Point> coord(k);
    for (Point q = 0; q < k; ++q) {
      Point img = p[static_cast<Point>(i * k + q)];
      if (img / k != top[i])
        throw Error(ErrorKind::ShapeMismatch, "permutation does not preserve the blocks");
      coord[q] = static_cast<Point>(img % k);
    }
    res.coords.push_back(Permutation(std::move(coord)));
  }
  res.top = Permutation(std::move(top));
  return res;
}

WreathGroup build_kurzweil(PermGroup const &s, PermGroup const &g,
                           PermGroup const &h, KurzweilOptions options,
                           Config const &config)
{
  require_subgroup(g, h, "H");

  WreathGroup w{s, g, h};

  if (!is_nonabelian_simple(s, config)) {
    if (!options.allow_non_simple)
      throw Error(ErrorKind::NotSimple, "S is not a nonabelian simple group");
    w.warnings.push_back("S is not nonabelian simple");
  }

  auto action = coset_action(g, h, config);
  w.n = action.action.degree;
  w.k = s.degree();
  if (w.n < 3u)
    throw Error(ErrorKind::IndexTooSmall,
                "the construction needs |G:H| >= 3, got " + std::to_string(w.n));
  if (!action.kernel.is_trivial())
    w.warnings.push_back("H is not core-free in G");

  std::size_t const n = w.n, k = w.k;

  std::vector<Permutation> base_gens, diag_gens, top_gens;
  for (auto const &x : s.generators()) {
    WreathElement diag = wreath_identity(n, k);
    for (std::size_t i = 0; i < n; ++i) {
      WreathElement e = wreath_identity(n, k);
      e.coords[i] = x;
      base_gens.push_back(wreath_embed(e));
      diag.coords[i] = x;
    }
    diag_gens.push_back(wreath_embed(diag));
  }
  for (auto const &x : action.action.gen_images) {
    WreathElement e = wreath_identity(n, k);
    e.top = x;
    top_gens.push_back(wreath_embed(e));
  }

  auto join_gens = [](std::vector<Permutation> a, std::vector<Permutation> const &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  w.base = PermGroup(n * k, base_gens);
  w.d = PermGroup(n * k, diag_gens);
  w.gbar = PermGroup(n * k, top_gens);
  w.dgbar = PermGroup(n * k, join_gens(diag_gens, top_gens));
  w.u = PermGroup(n * k, join_gens(base_gens, top_gens));
  w.gbar_action = action.image;
  return w;
}

bool verify_corefree_lift(WreathGroup const &w, Config const &config)
{ return is_core_free(w.u, w.dgbar, config); }

IntervalCheck dual_interval_check(WreathGroup const &w, Config const &config)
{
  IntervalCheck res{false, interval_lattice(w.u, w.dgbar, config),
                    dual(interval_lattice(w.base_group, w.base_subgroup, config))};
  res.holds = is_isomorphic(res.computed, res.expected).has_value();
  return res;
}

IntervalCheck diagonal_interval_check(WreathGroup const &w, Config const &config)
{
  IntervalCheck res{false, interval_lattice(w.base, w.d, config),
                    dual(partition_lattice(static_cast<unsigned>(w.n), config))};
  res.holds = is_isomorphic(res.computed, res.expected).has_value();
  return res;
}

IterateSize kurzweil_iterate_size(WreathGroup const &w, PermGroup const &s2,
                                  Config const &config)
{
  IterateSize res;
  BigInt u_order = w.u.order();
  BigInt s2_order = s2.order();
  res.m = u_order / w.dgbar.order();
  res.degree = res.m * s2.degree();

  if (res.m <= config.coset_index_cap) {
    res.order = boost::multiprecision::pow(s2_order, static_cast<unsigned>(res.m)) * u_order;
    res.order_digits = res.order->str().size();
    return res;
  }

  // floor(log10(|S2|^m |U|)) + 1 from the leading digits. The integer part of
  // m * log10|S2| is exact enough here since m stays far below 2^53.
  using boost::multiprecision::cpp_dec_float_50;
  cpp_dec_float_50 log = cpp_dec_float_50(res.m) * log10(cpp_dec_float_50(s2_order)) +
                         log10(cpp_dec_float_50(u_order));
  res.order_digits = static_cast<std::uint64_t>(floor(log)) + 1u;
  return res;
}

} // namespace gilt
