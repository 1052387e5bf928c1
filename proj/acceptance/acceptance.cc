#include <chrono>
#include <cstdio>
#include <exception>

#include "acceptance.h"
#include "oracles.h"

#include "gilt/catalog.h"
#include "gilt/errors.h"
#include "gilt/gset.h"
#include "gilt/kurzweil.h"
#include "gilt/lattice.h"
#include "gilt/parallel.h"
#include "gilt/props.h"
#include "gilt/search.h"
#include "gilt/subgroup_table.h"
#include "gilt/sweeps.h"

namespace gilt::acceptance
{

namespace
{

struct Check
{
  bool ok = true;
  std::string detail;
  Json canonical = Json::object();

  // Keeps the first failure message.
  void fail(std::string const &why)
  {
    if (ok)
      detail = why;
    ok = false;
  }
};

Catalog const &catalog()
{
  static Catalog c = Catalog::builtin();
  return c;
}

std::vector<CatalogEntry const *> entries_up_to(std::uint64_t order)
{
  std::vector<CatalogEntry const *> res;
  for (auto const &e : catalog().entries())
    if (e.group.order() <= order)
      res.push_back(&e);
  return res;
}

Permutation cycle(std::size_t degree, std::vector<std::vector<Point>> const &c)
{ return Permutation::from_cycles(degree, c); }

// Interval in Sub(G) by brute force against the congruence lattice of the
// coset action.
Check interval_congruence(Config const &config)
{
  auto groups = entries_up_to(360);
  struct Slot
  {
    std::size_t pairs = 0;
    std::vector<std::string> mismatches;
  };
  std::vector<Slot> slots(groups.size());

  parallel_for(groups.size(), config.thread_count, [&](std::size_t i) {
    auto const &g = groups[i]->group;
    auto sub = subgroup_lattice_bruteforce(g, config);
    for (Element h = 0; h < sub.subgroups.size(); ++h) {
      auto a = interval_lattice(g, sub.group(h), config);
      auto b = interval_bruteforce(sub, h).first;
      ++slots[i].pairs;
      if (!is_isomorphic(a, b))
        slots[i].mismatches.push_back(groups[i]->name + "/" + std::to_string(h));
    }
  });

  Check c;
  std::size_t pairs = 0;
  Json mismatches = Json::array();
  for (auto const &s : slots) {
    pairs += s.pairs;
    for (auto const &m : s.mismatches)
      mismatches.push_back(m);
  }
  if (!mismatches.empty())
    c.fail("interval mismatch at " + mismatches.front().get<std::string>());
  c.detail = c.ok ? std::to_string(groups.size()) + " groups, " +
                        std::to_string(pairs) + " pairs" : c.detail;
  c.canonical = Json{{"groups", groups.size()}, {"pairs", pairs},
                     {"mismatches", mismatches}};
  return c;
}

NamedGroups named(std::vector<CatalogEntry const *> const &entries)
{
  NamedGroups res;
  for (auto const *e : entries)
    res.emplace_back(e->name, e->group);
  return res;
}

Check from_sweep(SweepResult const &r, std::string const &what)
{
  Check c;
  if (!r.ok())
    c.fail(what + " fails at " + r.failures.front());
  else
    c.detail = std::to_string(r.groups) + " groups, " + std::to_string(r.cases) +
               " cases";
  c.canonical = sweep_to_json(r);
  return c;
}

Check dedekind(Config const &config)
{
  auto r = dedekind_sweep({{"S4", PermGroup::symmetric(4)},
                           {"A5", PermGroup::alternating(5)}}, config);
  return from_sweep(r, "Dedekind's rule");
}

Check antichain(Config const &config)
{
  auto r = antichain_sweep(named(entries_up_to(120)), config);
  auto c = from_sweep(r, "antichain");
  if (c.ok)
    c.detail += ", " + std::to_string(r.nontrivial) +
                " with two or more permuting complements";
  return c;
}

Check kurzweil_reference(Config const &config)
{
  Check c;
  auto g = PermGroup::symmetric(3);
  auto h = PermGroup(3, {cycle(3, {{0, 1}})});
  auto w = build_kurzweil(PermGroup::alternating(5), g, h, {}, config);

  BigInt const u = w.u.order(), dg = w.dgbar.order();
  if (u != 1296000)
    c.fail("|U| = " + u.str());
  if (dg * 3600 != u)
    c.fail("|U:DGbar| = " + BigInt(u / dg).str());

  bool corefree = verify_corefree_lift(w, config);
  if (!corefree)
    c.fail("core_U(DGbar) is not trivial");

  auto dual_check = dual_interval_check(w, config);
  bool two_chain = is_isomorphic(dual_check.computed, chain(2)).has_value();
  if (!dual_check.holds || !two_chain)
    c.fail("[DGbar, U] is not the dual 2-chain");

  auto diag = diagonal_interval_check(w, config);
  Config eq_config = config;
  eq_config.partition_n_cap = std::max(eq_config.partition_n_cap, 3u);
  bool diag_dual_eq3 =
      is_isomorphic(diag.computed, dual(partition_lattice(3, eq_config))).has_value();
  if (!diag.holds || !diag_dual_eq3)
    c.fail("[D, A5^3] is not dual(Eq(3))");

  c.canonical = Json{{"U_order", u.str()},
                     {"DGbar_order", dg.str()},
                     {"index", BigInt(u / dg).str()},
                     {"core_free", corefree},
                     {"upper_interval", lattice_to_json(dual_check.computed)},
                     {"diagonal_interval", lattice_to_json(diag.computed)},
                     {"warnings", w.warnings}};
  if (c.ok)
    c.detail = "|U| = " + u.str() + ", |U:DGbar| = " + BigInt(u / dg).str();
  return c;
}

// Multisets of k items from n kinds, as nondecreasing index vectors.
void multisets(std::size_t n, std::size_t k, std::size_t from,
               std::vector<std::size_t> &cur,
               std::vector<std::vector<std::size_t>> &out)
{
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    multisets(n, k, i, cur, out);
    cur.pop_back();
  }
}

Check parachutes(Config const &config)
{
  Check c;
  Config eq_config = config;
  eq_config.partition_n_cap = std::max(eq_config.partition_n_cap, 3u);
  std::vector<std::pair<std::string, FiniteLattice>> kinds{
      {"chain(2)", chain(2)},
      {"chain(3)", chain(3)},
      {"M3", mlattice(3)},
      {"Eq(3)", partition_lattice(3, eq_config)}};

  std::vector<std::vector<std::size_t>> shapes;
  for (std::size_t k = 2; k <= 4; ++k) {
    std::vector<std::size_t> cur;
    multisets(kinds.size(), k, 0, cur, shapes);
  }

  Json sizes = Json::array();
  for (auto const &shape : shapes) {
    std::vector<FiniteLattice> panels;
    std::string label;
    std::size_t expected = 2;
    for (auto i : shape) {
      panels.push_back(kinds[i].second);
      label += (label.empty() ? "" : ",") + kinds[i].first;
      expected += kinds[i].second.size() - 1u;
    }
    auto p = parachute(panels);

    // Rebuilding from the serialized covers reruns the full validation.
    auto rebuilt = lattice_from_json(lattice_to_json(p));
    if (rebuilt.size() != p.size())
      c.fail(label + ": rebuilt lattice differs");
    if (p.size() != expected)
      c.fail(label + ": size " + std::to_string(p.size()));

    Element bottom = 1;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      auto [interval, members] = interval_sublattice(p, bottom, p.top());
      bool fast = is_isomorphic(interval, panels[i]).has_value();
      bool slow = oracle::isomorphic_by_bijections(interval, panels[i]);
      if (!fast || !slow)
        c.fail(label + ": panel " + std::to_string(i) + " not recovered");
      bottom += static_cast<Element>(panels[i].size() - 1u);
    }
    sizes.push_back(Json{{"panels", label}, {"size", p.size()}});
  }

  Json mk = Json::array();
  for (std::size_t k = 2; k <= 4; ++k) {
    auto p = parachute(std::vector<FiniteLattice>(k, chain(2)));
    bool fast = is_isomorphic(p, mlattice(k)).has_value();
    bool slow = oracle::isomorphic_by_bijections(p, mlattice(k));
    if (!fast || !slow)
      c.fail("parachute of " + std::to_string(k) + " two-element chains is not M" +
             std::to_string(k));
    mk.push_back(fast && slow);
  }

  c.canonical = Json{{"shapes", sizes}, {"two_element_chains", mk}};
  if (c.ok)
    c.detail = std::to_string(shapes.size()) + " panel multisets";
  return c;
}

Check partitions(Config const &config)
{
  Check c;
  Config eq_config = config;
  eq_config.partition_n_cap = std::max(eq_config.partition_n_cap, 7u);
  std::uint64_t const bell[] = {2, 5, 15, 52, 203, 877};

  Json sizes = Json::array();
  for (unsigned n = 2; n <= 7; ++n) {
    auto size = partition_lattice(n, eq_config).size();
    auto oracle = oracle::bell_by_enumeration(n);
    if (size != oracle || size != bell[n - 2u])
      c.fail("|Eq(" + std::to_string(n) + ")| = " + std::to_string(size));
    sizes.push_back(size);
  }
  auto eq3 = partition_lattice(3, eq_config);
  bool m3 = is_isomorphic(eq3, mlattice(3)).has_value() &&
            oracle::isomorphic_by_bijections(eq3, mlattice(3));
  if (!m3)
    c.fail("Eq(3) is not M3");
  c.canonical = Json{{"sizes", sizes}, {"eq3_is_m3", m3}};
  if (c.ok)
    c.detail = "Bell numbers 2..877 and Eq(3) = M3";
  return c;
}

Check property_tables(Config const &config)
{
  Check c;
  Json rows = Json::array();
  for (auto const *e : entries_up_to(24)) {
    auto const &g = e->group;
    auto sub = subgroup_lattice_bruteforce(g, config);
    auto const &t = *sub.table;
    auto ns = oracle::normal_structure(sub);

    bool solvable = is_solvable(g);
    bool alt_sym = is_alt_or_sym(g, config);
    bool centralizers = trivial_centralizers(g, config);
    bool oracle_centralizers = true;
    for (auto const &m : ns.minimal)
      oracle_centralizers = oracle_centralizers && oracle::centralizer(t, m).count() == 1u;

    Json row{{"name", e->name}, {"order", t.order()}, {"solvable", solvable},
             {"alt_or_sym", alt_sym}, {"trivial_centralizers", centralizers}};
    if (solvable != oracle::solvable(t))
      c.fail(e->name + ": solvable");
    if (alt_sym != oracle::alt_or_sym(t))
      c.fail(e->name + ": alt_or_sym");
    if (centralizers != oracle_centralizers)
      c.fail(e->name + ": trivial_centralizers");

    if (g.is_trivial()) {
      row["subdirectly_irreducible"] = "DegenerateInput";
    } else {
      bool si = is_subdirectly_irreducible(g, config);
      if (si != (ns.minimal.size() == 1u))
        c.fail(e->name + ": subdirectly_irreducible");
      row["subdirectly_irreducible"] = si;
    }
    rows.push_back(std::move(row));
  }
  c.canonical = Json{{"rows", rows}};
  if (c.ok)
    c.detail = std::to_string(rows.size()) + " groups of order <= 24";
  return c;
}

Check search_witnesses(Config const &config)
{
  Check c;
  auto const &cat = catalog();
  SearchOptions opts;
  opts.limit = config.search_limit;

  auto certify_all = [&](SearchResult const &r, FiniteLattice const &l,
                         std::string const &what) {
    for (auto const &w : r.witnesses)
      if (!certify(w, l, config))
        c.fail(what + ": witness " + w.name + " fails certify");
  };

  auto m3 = find_representations(mlattice(3), cat, opts, config);
  certify_all(m3, mlattice(3), "M3");
  bool v4 = false;
  for (auto const &w : m3.witnesses)
    v4 = v4 || (w.name == "V4" && w.subgroup.is_trivial());
  if (!v4)
    c.fail("M3: no (V4, 1) witness");

  auto m4 = find_representations(mlattice(4), cat, opts, config);
  certify_all(m4, mlattice(4), "M4");
  bool s3 = false;
  for (auto const &w : m4.witnesses)
    s3 = s3 || (w.group.order() == 6 && !is_abelian(w.group) && w.subgroup.is_trivial());
  if (!s3)
    c.fail("M4: no (S3, 1) witness");

  SearchOptions cf = opts;
  cf.core_free_only = true;
  auto two = find_representations(chain(2), cat, cf, config);
  certify_all(two, chain(2), "chain(2)");
  if (two.witnesses.empty())
    c.fail("chain(2): no core-free witness");
  for (auto const &w : two.witnesses)
    if (!w.core_free)
      c.fail("chain(2): witness " + w.name + " is not core-free");

  c.canonical = Json{{"M3", search_result_to_json(m3)},
                     {"M4", search_result_to_json(m4)},
                     {"chain2_core_free", search_result_to_json(two)}};
  if (c.ok)
    c.detail = std::to_string(m3.witnesses.size() + m4.witnesses.size() +
                              two.witnesses.size()) + " witnesses certified";
  return c;
}

Check monotonicity(Config const &config)
{
  auto groups = entries_up_to(120);
  struct Slot
  {
    std::size_t pairs = 0;
    std::vector<std::string> failures;
  };
  std::vector<Slot> slots(groups.size());

  parallel_for(groups.size(), config.thread_count, [&](std::size_t i) {
    auto const &g = groups[i]->group;
    auto sub = subgroup_lattice_bruteforce(g, config);
    auto const &t = *sub.table;
    auto ns = oracle::normal_structure(sub);

    bool all_normal = true;
    for (auto const &n : ns.normal)
      all_normal = all_normal && oracle::centralizer(t, n).count() == 1u;
    if (trivial_centralizers(g, config) != all_normal)
      slots[i].failures.push_back(groups[i]->name + ": centralizers");

    for (Element h = 0; h < sub.subgroups.size(); ++h) {
      bool all = true;
      for (auto const &n : ns.normal)
        all = all && t.product(n, sub.subgroups[h]).count() == t.order();
      ++slots[i].pairs;
      if (nh_equals_g_all_minimal(g, sub.group(h), config) != all)
        slots[i].failures.push_back(groups[i]->name + "/" + std::to_string(h) + ": NH");
    }
  });

  Check c;
  std::size_t pairs = 0;
  Json failures = Json::array();
  for (auto const &s : slots) {
    pairs += s.pairs;
    for (auto const &f : s.failures)
      failures.push_back(f);
  }
  if (!failures.empty())
    c.fail("disagreement at " + failures.front().get<std::string>());
  else
    c.detail = std::to_string(groups.size()) + " groups, " + std::to_string(pairs) +
               " (G, H) pairs";
  c.canonical = Json{{"groups", groups.size()}, {"pairs", pairs}, {"failures", failures}};
  return c;
}

// The outputs selftest writes, computed twice and serially vs in parallel.
Json determinism_bundle(Config const &config)
{
  SearchOptions opts;
  opts.max_group_order = 120;
  opts.limit = 0;
  Config eq_config = config;
  eq_config.partition_n_cap = std::max(eq_config.partition_n_cap, 4u);

  auto report = verify_parachute_consequences(PermGroup::symmetric(4),
                                              PermGroup::trivial(4), config);
  auto p = parachute({partition_lattice(3, eq_config), mlattice(3), chain(3)});
  return Json{{"search", search_result_to_json(
                             find_representations(partition_lattice(3, eq_config),
                                                  catalog(), opts, config))},
              {"report", report_to_json(report)},
              {"parachute", lattice_to_json(p)},
              {"eq4", lattice_to_json(partition_lattice(4, eq_config))}};
}

Check determinism(Config const &config)
{
  Check c;
  Config serial = config;
  serial.thread_count = 1;
  auto first = canonical_dump(determinism_bundle(config));
  auto second = canonical_dump(determinism_bundle(config));
  auto third = canonical_dump(determinism_bundle(serial));
  if (first != second)
    c.fail("two runs differ");
  if (first != third)
    c.fail("serial and parallel runs differ");

  // Parsing and re-serializing is the identity on canonical output.
  auto j = Json::parse(first);
  auto again = lattice_to_json(lattice_from_json(j["parachute"]));
  if (canonical_dump(again) != canonical_dump(j["parachute"]))
    c.fail("lattice JSON is not byte-stable");

  c.canonical = Json{{"bytes", first.size()}, {"identical", c.ok}};
  if (c.ok)
    c.detail = std::to_string(first.size()) + " bytes identical across 3 runs";
  return c;
}

struct Criterion
{
  int id;
  char const *title;
  double limit;
  Check (*run)(Config const &);
};

Criterion const criteria[] = {
    {1, "interval-congruence identification", 60.0, interval_congruence},
    {2, "Dedekind's rule", 60.0, dedekind},
    {3, "permuting complements form antichains", 120.0, antichain},
    {4, "Kurzweil reference instance", 120.0, kurzweil_reference},
    {5, "parachute constructor", 10.0, parachutes},
    {6, "partition lattices", 30.0, partitions},
    {7, "property-checker tables", 60.0, property_tables},
    {8, "search witnesses", 60.0, search_witnesses},
    {9, "monotonicity reductions", 120.0, monotonicity},
    {10, "determinism", 0.0, determinism},
};

} // anonymous namespace

std::vector<int> criterion_ids()
{
  std::vector<int> res;
  for (auto const &c : criteria)
    res.push_back(c.id);
  return res;
}

Outcome run_criterion(int id, Config const &config)
{
  for (auto const &cr : criteria) {
    if (cr.id != id)
      continue;
    Outcome o;
    o.id = id;
    o.title = cr.title;
    o.limit_seconds = cr.limit;

    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run(config);
    } catch (std::exception const &e) {
      c.fail(std::string("exception: ") + e.what());
      c.canonical = Json{{"exception", e.what()}};
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    o.passed = c.ok;
    o.detail = c.detail;
    if (o.limit_seconds > 0.0 && o.seconds >= o.limit_seconds) {
      o.passed = false;
      o.detail += " (over the time limit)";
    }
    o.canonical = Json{{"id", id}, {"title", o.title}, {"passed", c.ok},
                       {"result", c.canonical}};
    return o;
  }
  throw Error(ErrorKind::InvalidPoint, "no acceptance criterion " + std::to_string(id));
}

std::vector<Outcome> run_all(Config const &config,
                             std::function<void(Outcome const &)> const &on_done)
{
  std::vector<Outcome> res;
  for (int id : criterion_ids()) {
    res.push_back(run_criterion(id, config));
    if (on_done)
      on_done(res.back());
  }
  return res;
}

std::string format_line(Outcome const &o)
{
  char timing[64];
  if (o.limit_seconds > 0.0)
    std::snprintf(timing, sizeof timing, "%.1f s / %.0f s", o.seconds, o.limit_seconds);
  else
    std::snprintf(timing, sizeof timing, "%.1f s", o.seconds);
  return std::string(o.passed ? "PASS" : "FAIL") + " " + std::to_string(o.id) + " " +
         o.title + " (" + timing + "): " + o.detail;
}

Json canonical_report(std::vector<Outcome> const &outcomes)
{
  Json res = Json::array();
  for (auto const &o : outcomes)
    res.push_back(o.canonical);
  return Json{{"criteria", res}};
}

} // namespace gilt::acceptance
