#include <algorithm>

#include "gilt/errors.h"
#include "gilt/gset.h"
#include "gilt/props.h"

namespace gilt
{

namespace
{

Json gens_json(PermGroup const &g)
{
  Json res = Json::array();
  for (auto const &x : g.generators())
    res.push_back(x.to_string());
  return res;
}

Json group_summary(PermGroup const &g)
{ return Json{{"order", g.order().str()}, {"generators", gens_json(g)}}; }

// First generator pair that fails to commute, as evidence of nonabelianness.
std::optional<std::pair<Permutation, Permutation>>
noncommuting_pair(PermGroup const &g)
{
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1u; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return std::make_pair(gens[i], gens[j]);
  return std::nullopt;
}

// |NH| = |N||H|/|N n H| = |G|
bool nh_is_g(PermGroup const &g, PermGroup const &n, PermGroup const &h,
             Config const &config)
{
  BigInt nh = n.order() * h.order() / intersection(n, h, config).order();
  return nh == g.order();
}

std::uint64_t factorial(std::size_t n)
{
  std::uint64_t res = 1;
  for (std::size_t i = 2; i <= n; ++i)
    res *= i;
  return res;
}

} // anonymous namespace

bool has_no_abelian_normal(PermGroup const &g, Config const &config)
{
  for (auto const &m : minimal_normal_subgroups(g, config))
    if (is_abelian(m))
      return false;
  return true;
}

bool trivial_centralizers(PermGroup const &g, Config const &config)
{
  for (auto const &m : minimal_normal_subgroups(g, config))
    if (!centralizer(g, m, config).is_trivial())
      return false;
  return true;
}

std::optional<AltSymWitness> alt_or_sym_witness(PermGroup const &g,
                                                Config const &config)
{
  BigInt order = g.order();
  if (order > config.alt_sym_order_bound)
    throw Error(ErrorKind::BoundExceeded,
                "order " + order.str() + " exceeds the alternating/symmetric "
                "recognition bound " + std::to_string(config.alt_sym_order_bound));
  auto const N = to_u64(order);

  std::vector<AltSymWitness> candidates;
  for (std::size_t n = 1; factorial(n) / 2u <= N; ++n) {
    if (factorial(n) == N) {
      auto t = PermGroup::symmetric(n);
      candidates.push_back({n, true, t.generators(), {}});
    }
    if (n >= 3u && factorial(n) / 2u == N) {
      auto t = PermGroup::alternating(n);
      candidates.push_back({n, false, t.generators(), {}});
    }
  }
  if (candidates.empty())
    return std::nullopt;

  std::vector<Permutation> elements;
  std::vector<Permutation> reps;

  for (auto &c : candidates) {
    auto const &t = c.standard_generators;
    if (t.empty()) {
      // S_1 and the trivial group.
      return c;
    }

    if (elements.empty()) {
      elements = g.elements(config.alt_sym_order_bound);
      std::sort(elements.begin(), elements.end());
      reps = class_representatives(g, config.alt_sym_order_bound);
    }

    std::size_t const n = c.n, d = g.degree();
    auto graph_gen = [&](Permutation const &x, Permutation const &y) {
      std::vector<Point> images(n + d);
      for (Point p = 0; p < n; ++p)
        images[p] = x[p];
      for (Point p = 0; p < d; ++p)
        images[n + p] = static_cast<Point>(n + y[p]);
      return Permutation::from_images_unchecked(std::move(images));
    };

    // The assignment t_i -> g_i extends to a homomorphism iff the graph
    // group <(t_i, g_i)> has order |T|; it is onto G iff <g_i> = G.
    auto accept = [&](std::vector<Permutation> const &images) {
      if (PermGroup(d, images).order() != order)
        return false;
      std::vector<Permutation> graph;
      for (std::size_t i = 0; i < t.size(); ++i)
        graph.push_back(graph_gen(t[i], images[i]));
      return PermGroup(n + d, graph).order() == order;
    };

    // The first image may be taken up to conjugacy.
    for (auto const &g1 : reps) {
      if (g1.order() != t[0].order())
        continue;
      if (t.size() == 1u) {
        if (accept({g1})) {
          c.images = {g1};
          return c;
        }
        continue;
      }

      std::uint64_t const prod_order = (t[0] * t[1]).order();
      std::uint64_t const comm_order = commutator(t[0], t[1]).order();
      for (auto const &g2 : elements) {
        if (g2.order() != t[1].order() || (g1 * g2).order() != prod_order ||
            commutator(g1, g2).order() != comm_order)
          continue;
        if (accept({g1, g2})) {
          c.images = {g1, g2};
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_alt_or_sym(PermGroup const &g, Config const &config)
{ return alt_or_sym_witness(g, config).has_value(); }

bool core_free_bottom(PermGroup const &g, PermGroup const &h,
                      Config const &config)
{ return is_core_free(g, h, config); }

bool core_free_hereditary(PermGroup const &g, PermGroup const &h,
                          Config const &config)
{
  auto interval = interval_subgroups(g, h, config);
  for (Element y = 0; y < interval.subgroups.size(); ++y)
    if (y != interval.lattice.top() && !is_core_free(g, interval.subgroups[y], config))
      return false;
  return true;
}

bool nh_equals_g_all_minimal(PermGroup const &g, PermGroup const &h,
                             Config const &config)
{
  require_subgroup(g, h);
  for (auto const &n : minimal_normal_subgroups(g, config))
    if (!nh_is_g(g, n, h, config))
      return false;
  return true;
}

std::optional<bool> WitnessReport::flag(std::string const &name) const
{
  auto it = flags.find(name);
  return it == flags.end() ? std::nullopt : it->second;
}

WitnessReport verify_parachute_consequences(PermGroup const &g,
                                            PermGroup const &h,
                                            Config const &config)
{
  require_subgroup(g, h);
  if (!is_core_free(g, h, config))
    throw Error(ErrorKind::NotCoreFree, "H is not core-free in G");

  WitnessReport r;
  auto &ev = r.evidence;
  auto set = [&](char const *name, std::optional<bool> value, Json evidence) {
    r.flags[name] = value;
    ev[name] = std::move(evidence);
  };

  // Hypothesis gate.
  auto interval = interval_subgroups(g, h, config);
  auto const &l = interval.lattice;
  auto shape = parachute_shape(l);
  bool gate = shape.meets_hypothesis();
  {
    Json e{{"interval_size", l.size()},
           {"is_parachute", shape.is_parachute},
           {"panel_sizes", shape.panel_sizes}};
    set(flag::parachute_hypothesis, gate, std::move(e));
  }

  // core_G(Y) = 1 for H <= Y < G
  {
    Json checked = Json::array();
    std::optional<Json> witness;
    for (Element y = 0; y < l.size() && !witness; ++y) {
      if (y == l.top())
        continue;
      auto c = core(g, interval.subgroups[y], config);
      if (!c.is_trivial())
        witness = Json{{"Y", group_summary(interval.subgroups[y])},
                       {"core", group_summary(c)}};
      else
        checked.push_back(group_summary(interval.subgroups[y]));
    }
    if (witness)
      set(flag::core_free_all_Y, false, Json{{"counterexample", *witness}});
    else
      set(flag::core_free_all_Y, true, Json{{"core_free_Y", checked}});
  }

  // Both core-freeness variants, evaluated on the panel subgroups (the atoms).
  {
    bool bottom = true, hereditary = true;
    Json panels = Json::array();
    for (Element a : l.atoms()) {
      auto const &k = interval.subgroups[a];
      bool b = core_free_bottom(g, k, config);
      bool hh = core_free_hereditary(g, k, config);
      bottom = bottom && b;
      hereditary = hereditary && hh;
      panels.push_back(Json{{"K", group_summary(k)},
                            {"core_free", b},
                            {"hereditary", hh}});
    }
    set(flag::core_free_bottom, bottom, Json{{"panels", panels}});
    set(flag::core_free_hereditary, hereditary, Json{{"panels", panels}});
  }

  std::vector<PermGroup> minimal;
  if (!g.is_trivial())
    minimal = minimal_normal_subgroups(g, config);

  // NH = G and C_G(N) = 1 for minimal normal N
  {
    Json ok = Json::array();
    std::optional<Json> bad;
    for (auto const &n : minimal) {
      if (!nh_is_g(g, n, h, config)) {
        bad = Json{{"N", group_summary(n)},
                   {"N_cap_H_order", intersection(n, h, config).order().str()}};
        break;
      }
      ok.push_back(group_summary(n));
    }
    if (bad)
      set(flag::NH_equals_G_all_minimal, false, Json{{"counterexample", *bad}});
    else
      set(flag::NH_equals_G_all_minimal, true, Json{{"minimal_normal", ok}});
  }
  {
    Json ok = Json::array();
    std::optional<Json> bad;
    for (auto const &n : minimal) {
      auto c = centralizer(g, n, config);
      if (!c.is_trivial()) {
        bad = Json{{"N", group_summary(n)}, {"centralizer", group_summary(c)}};
        break;
      }
      ok.push_back(group_summary(n));
    }
    if (bad)
      set(flag::trivial_centralizers, false, Json{{"counterexample", *bad}});
    else
      set(flag::trivial_centralizers, true, Json{{"minimal_normal", ok}});
  }
  {
    Json nonabelian = Json::array();
    std::optional<Json> bad;
    for (auto const &n : minimal) {
      auto pair = noncommuting_pair(n);
      if (!pair) {
        bad = Json{{"abelian_normal", group_summary(n)}};
        break;
      }
      nonabelian.push_back(Json{{"N", group_summary(n)},
                                {"noncommuting",
                                 {pair->first.to_string(), pair->second.to_string()}}});
    }
    if (bad)
      set(flag::no_abelian_normal, false, Json{{"counterexample", *bad}});
    else
      set(flag::no_abelian_normal, true, Json{{"minimal_normal", nonabelian}});
  }

  if (g.is_trivial()) {
    set(flag::subdirectly_irreducible, std::nullopt,
        Json{{"error", "DegenerateInput: trivial group"}});
  } else {
    Json mins = Json::array();
    for (auto const &n : minimal)
      mins.push_back(group_summary(n));
    set(flag::subdirectly_irreducible, minimal.size() == 1u,
        Json{{"minimal_normal", mins}});
  }

  {
    auto s = solvability(g);
    Json series = Json::array();
    for (auto const &t : s.series)
      series.push_back(t.order().str());
    Json e{{"derived_series_orders", series}};
    if (!s.solvable)
      e["perfect_term"] = group_summary(s.series.back());
    set(flag::solvable, s.solvable, std::move(e));
  }

  try {
    auto w = alt_or_sym_witness(g, config);
    if (w) {
      Json images = Json::array();
      for (auto const &x : w->images)
        images.push_back(x.to_string());
      set(flag::alt_or_sym, true,
          Json{{"n", w->n}, {"symmetric", w->symmetric}, {"images", images}});
    } else {
      set(flag::alt_or_sym, false,
          Json{{"reason", "no isomorphism onto S_n or A_n of order " + g.order().str()}});
    }
  } catch (Error const &e) {
    if (e.kind() != ErrorKind::BoundExceeded)
      throw;
    set(flag::alt_or_sym, std::nullopt, Json{{"error", e.what()}});
  }

  bool conclusions = gate &&
                     r.flag(flag::NH_equals_G_all_minimal) == true &&
                     r.flag(flag::trivial_centralizers) == true &&
                     r.flag(flag::subdirectly_irreducible) == true &&
                     r.flag(flag::solvable) == false;
  set(flag::conclusions_asserted, conclusions,
      Json{{"applicable", gate}});
  return r;
}

WitnessReport check_conjunction(std::vector<WitnessReport> const &reports)
{
  if (reports.empty())
    throw Error(ErrorKind::EmptyInput, "conjunction of no reports");
  if (reports.size() == 1u)
    return reports.front();

  WitnessReport res;
  std::map<std::string, std::vector<bool>> known;

  for (std::size_t i = 0; i < reports.size(); ++i) {
    std::string label = "r" + std::to_string(i);
    for (auto const &[name, value] : reports[i].flags) {
      auto &slot = known[name];
      if (value)
        slot.push_back(*value);
    }
    for (auto const &[name, e] : reports[i].evidence.items())
      res.evidence[name][label] = e;
    for (auto const &c : reports[i].conflicts)
      res.conflicts.push_back(label + "/" + c);
  }

  for (auto const &[name, values] : known) {
    if (values.empty()) {
      res.flags[name] = std::nullopt;
      continue;
    }
    bool all = std::all_of(values.begin(), values.end(), [](bool b) { return b; });
    bool any = std::any_of(values.begin(), values.end(), [](bool b) { return b; });
    res.flags[name] = all;
    if (any && !all)
      res.conflicts.push_back(name);
  }
  return res;
}

Json report_to_json(WitnessReport const &r)
{
  Json flags = Json::object();
  for (auto const &[name, value] : r.flags)
    flags[name] = value ? Json(*value) : Json(nullptr);
  return Json{{"flags", flags}, {"evidence", r.evidence}, {"conflicts", r.conflicts}};
}

} // namespace gilt
