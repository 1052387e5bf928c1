#include <algorithm>
#include <functional>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "acceptance.h"
#include "cli.h"
#include "gilt/catalog.h"
#include "gilt/errors.h"
#include "gilt/gset.h"
#include "gilt/io.h"
#include "gilt/kurzweil.h"
#include "gilt/props.h"
#include "gilt/search.h"
#include "gilt/subgroup_table.h"
#include "gilt/sweeps.h"

namespace gilt::cli
{

namespace
{

constexpr int ok = 0;
constexpr int check_failed = 1;
constexpr int usage_error = 2;

struct Output
{
  std::string path;
  bool dot = false;
};

void emit(std::ostream &out, std::string const &path, std::string const &text)
{
  if (path.empty())
    out << text;
  else
    write_text_file(path, text);
}

void emit_lattice(std::ostream &out, Output const &o, FiniteLattice const &l)
{
  emit(out, o.path, o.dot ? lattice_to_dot(l) : canonical_dump(lattice_to_json(l)));
}

void add_output(CLI::App *cmd, Output &o, bool dot = true)
{
  cmd->add_option("--out,-o", o.path, "Write to this file instead of stdout");
  if (dot)
    cmd->add_flag("--dot", o.dot, "Emit a DOT Hasse diagram instead of JSON");
}

Json wreath_json(WreathGroup const &w)
{
  return Json{{"n", w.n},
              {"k", w.k},
              {"U", group_to_json(w.u)},
              {"U_order", w.u.order().str()},
              {"D", group_to_json(w.d)},
              {"Gbar", group_to_json(w.gbar)},
              {"DGbar", group_to_json(w.dgbar)},
              {"DGbar_order", w.dgbar.order().str()},
              {"warnings", w.warnings}};
}

// Samples random products and checks the embedding is multiplicative.
bool sample_multiplication(WreathGroup const &w, std::size_t samples,
                           std::uint64_t seed, Config const &config)
{
  if (samples == 0u)
    return true;
  std::mt19937_64 rng(seed);
  auto s_elems = w.s.elements(config.element_scan_bound);
  auto top_elems = w.gbar_action.elements(config.element_scan_bound);
  auto random_element = [&] {
    WreathElement e;
    for (std::size_t i = 0; i < w.n; ++i)
      e.coords.push_back(s_elems[rng() % s_elems.size()]);
    e.top = top_elems[rng() % top_elems.size()];
    return e;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    auto a = random_element(), b = random_element();
    if (wreath_embed(wreath_multiply(a, b)) != wreath_embed(a) * wreath_embed(b))
      return false;
  }
  return true;
}

NamedGroups catalog_groups(std::uint64_t max_order,
                           std::vector<std::string> const &files)
{
  NamedGroups res;
  if (files.empty()) {
    auto const catalog = Catalog::builtin();
    for (auto const &e : catalog.entries())
      if (e.group.order() <= max_order)
        res.emplace_back(e.name, e.group);
  }
  for (auto const &f : files)
    res.emplace_back(f, read_group_file(f));
  return res;
}

int report_sweep(std::ostream &out, SweepResult const &r)
{
  out << canonical_dump(sweep_to_json(r));
  return r.ok() ? ok : check_failed;
}

} // anonymous namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Finite permutation groups, subgroup intervals and lattices"};
  app.name("gilt");
  // Long form only: `--h` names the subgroup file.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  app.add_option("--config", config_path, "JSON config file (default: $GILT_CONFIG)");
  app.add_option("--threads", threads, "Worker threads; 1 forces serial execution")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized checks");

  // The chosen subcommand stores its action here; it runs after parsing so
  // that the config and global flags are known.
  std::function<int(Config const &)> action;
  auto on = [&](CLI::App *cmd, std::function<int(Config const &)> f) {
    cmd->callback([&action, f] { action = f; });
  };

  // order
  std::string group_path, sub_path;
  auto order = app.add_subcommand("order", "Print the order of a group");
  order->add_option("group", group_path, "Group file")->required();
  on(order, [&](Config const &) {
    out << read_group_file(group_path).order().str() << "\n";
    return ok;
  });

  // core
  auto core_cmd = app.add_subcommand("core", "Core of H in G, as a group file");
  core_cmd->add_option("group", group_path, "Group file G")->required();
  core_cmd->add_option("subgroup", sub_path, "Group file H")->required();
  on(core_cmd, [&](Config const &config) {
    auto c = core(read_group_file(group_path), read_group_file(sub_path), config);
    out << "# order " << c.order().str() << "\n" << format_group(c);
    return ok;
  });

  // interval
  Output interval_out;
  bool use_oracle = false;
  auto interval = app.add_subcommand("interval", "The interval [H, G] as a lattice");
  interval->add_option("group", group_path, "Group file G")->required();
  interval->add_option("subgroup", sub_path, "Group file H")->required();
  interval->add_flag("--oracle", use_oracle,
                     "Also enumerate Sub(G) and require an isomorphic interval");
  add_output(interval, interval_out);
  on(interval, [&](Config const &config) {
    auto g = read_group_file(group_path);
    auto h = read_group_file(sub_path);
    auto l = interval_lattice(g, h, config);
    if (use_oracle && !is_isomorphic(l, interval_bruteforce(g, h, config))) {
      err << "interval differs from the brute-force interval\n";
      return check_failed;
    }
    emit_lattice(out, interval_out, l);
    return ok;
  });

  // sublattice
  Output sub_out;
  auto sublattice = app.add_subcommand("sublattice", "Sub(G) by brute force");
  sublattice->add_option("group", group_path, "Group file")->required();
  add_output(sublattice, sub_out);
  on(sublattice, [&](Config const &config) {
    emit_lattice(out, sub_out,
                 subgroup_lattice_bruteforce(read_group_file(group_path), config).lattice);
    return ok;
  });

  // lat ...
  auto lat = app.add_subcommand("lat", "Lattice utilities");
  lat->require_subcommand(1);
  lat->fallthrough();
  Output lat_out;
  std::vector<std::string> lattice_paths;
  unsigned lat_n = 0;

  auto iso = lat->add_subcommand("iso", "Find an isomorphism between two lattices");
  iso->add_option("a", lattice_paths, "Two lattice JSON files")->required()->expected(2);
  on(iso, [&](Config const &) {
    auto a = read_lattice_file(lattice_paths[0]);
    auto b = read_lattice_file(lattice_paths[1]);
    auto m = is_isomorphic(a, b);
    if (!m) {
      out << "not isomorphic\n";
      return check_failed;
    }
    out << canonical_dump(Json{{"isomorphic", true}, {"mapping", m->mapping}});
    return ok;
  });

  auto dual_cmd = lat->add_subcommand("dual", "Order dual");
  dual_cmd->add_option("lattice", lattice_paths, "Lattice JSON file")->required()->expected(1);
  add_output(dual_cmd, lat_out);
  on(dual_cmd, [&](Config const &) {
    emit_lattice(out, lat_out, dual(read_lattice_file(lattice_paths[0])));
    return ok;
  });

  auto para = lat->add_subcommand("parachute", "Glue panels into a parachute");
  para->add_option("panels", lattice_paths, "Panel lattice JSON files")->required();
  add_output(para, lat_out);
  on(para, [&](Config const &) {
    std::vector<FiniteLattice> panels;
    for (auto const &p : lattice_paths)
      panels.push_back(read_lattice_file(p));
    emit_lattice(out, lat_out, parachute(panels));
    return ok;
  });

  auto eqn = lat->add_subcommand("eqn", "Partition lattice Eq(n)");
  eqn->add_option("n", lat_n, "Number of points")->required();
  add_output(eqn, lat_out);
  on(eqn, [&](Config const &config) {
    emit_lattice(out, lat_out, partition_lattice(lat_n, config));
    return ok;
  });

  auto chain_cmd = lat->add_subcommand("chain", "Chain with k elements");
  chain_cmd->add_option("k", lat_n, "Number of elements")->required()
      ->check(CLI::PositiveNumber);
  add_output(chain_cmd, lat_out);
  on(chain_cmd, [&](Config const &) {
    emit_lattice(out, lat_out, chain(lat_n));
    return ok;
  });

  auto mn = lat->add_subcommand("mn", "M_k: bottom, k atoms, top");
  mn->add_option("k", lat_n, "Number of atoms")->required();
  add_output(mn, lat_out);
  on(mn, [&](Config const &) {
    emit_lattice(out, lat_out, mlattice(lat_n));
    return ok;
  });

  // kurzweil ...
  auto kurz = app.add_subcommand("kurzweil", "The wreath-product construction");
  kurz->require_subcommand(1);
  kurz->fallthrough();
  std::string s_path, g_path, h_path, kurz_out, s2_path;
  bool allow_non_simple = false, diagonal = false;
  std::size_t samples = 0;
  auto add_sgh = [&](CLI::App *cmd) {
    cmd->add_option("--s", s_path, "Group file for S")->required();
    cmd->add_option("--g", g_path, "Group file for G")->required();
    cmd->add_option("--h", h_path, "Group file for H")->required();
    cmd->add_flag("--allow-non-simple", allow_non_simple,
                  "Warn instead of failing when S is not nonabelian simple");
  };
  auto build_w = [&](Config const &config) {
    return build_kurzweil(read_group_file(s_path), read_group_file(g_path),
                          read_group_file(h_path), {allow_non_simple}, config);
  };

  auto kbuild = kurz->add_subcommand("build", "Generators for U, D, Gbar and DGbar");
  add_sgh(kbuild);
  kbuild->add_option("--out,-o", kurz_out, "Write to this file instead of stdout");
  kbuild->add_option("--iterate", s2_path,
                     "Group file S2: also report sizes for applying the construction "
                     "again over (U, DGbar)");
  on(kbuild, [&](Config const &config) {
    auto w = build_w(config);
    auto j = wreath_json(w);
    if (!s2_path.empty()) {
      auto size = kurzweil_iterate_size(w, read_group_file(s2_path), config);
      j["iterate"] = Json{{"index", size.m.str()},
                          {"degree", size.degree.str()},
                          {"order_digits", size.order_digits}};
      if (size.order)
        j["iterate"]["order"] = size.order->str();
    }
    for (auto const &warning : w.warnings)
      err << "warning: " << warning << "\n";
    emit(out, kurz_out, canonical_dump(j));
    return ok;
  });

  auto kcheck = kurz->add_subcommand("check", "Core-free lift and the dual interval");
  add_sgh(kcheck);
  kcheck->add_flag("--diagonal", diagonal, "Also compare [D, S^n] with dual(Eq(n))");
  kcheck->add_option("--samples", samples,
                     "Random products checked against the embedding (uses --seed)");
  on(kcheck, [&](Config const &config) {
    auto w = build_w(config);
    bool lift = verify_corefree_lift(w, config);
    auto d = dual_interval_check(w, config);
    Json j{{"core_free_lift", lift},
           {"dual_interval", d.holds},
           {"upper_interval", lattice_to_json(d.computed)},
           {"warnings", w.warnings}};
    bool all = lift && d.holds;
    if (diagonal) {
      auto diag = diagonal_interval_check(w, config);
      j["diagonal_interval"] = diag.holds;
      all = all && diag.holds;
    }
    if (samples > 0u) {
      bool mult = sample_multiplication(w, samples, seed, config);
      j["multiplication_samples"] = Json{{"count", samples}, {"seed", seed}, {"holds", mult}};
      all = all && mult;
    }
    out << canonical_dump(j);
    return all ? ok : check_failed;
  });

  // verify ...
  auto verify = app.add_subcommand("verify", "Property suites and witness reports");
  verify->require_subcommand(1);
  verify->fallthrough();
  std::uint64_t sweep_max = 120;
  std::vector<std::string> sweep_files;
  std::string report_path;

  auto vded = verify->add_subcommand("dedekind", "Dedekind's rule on every subgroup triple");
  auto vanti = verify->add_subcommand("antichain",
                                      "Permuting complements form antichains");
  for (auto *cmd : {vded, vanti}) {
    cmd->add_option("--max-order", sweep_max, "Catalog groups up to this order");
    cmd->add_option("--group", sweep_files, "Check these group files instead");
  }
  on(vded, [&](Config const &config) {
    return report_sweep(out, dedekind_sweep(catalog_groups(sweep_max, sweep_files), config));
  });
  on(vanti, [&](Config const &config) {
    return report_sweep(out, antichain_sweep(catalog_groups(sweep_max, sweep_files), config));
  });

  auto vpara = verify->add_subcommand("parachute",
                                      "Consequences of a parachute interval above H");
  vpara->add_option("--g", g_path, "Group file for G")->required();
  vpara->add_option("--h", h_path, "Group file for H")->required();
  vpara->add_option("--json", report_path, "Write the report here instead of stdout");
  on(vpara, [&](Config const &config) {
    auto r = verify_parachute_consequences(read_group_file(g_path),
                                           read_group_file(h_path), config);
    emit(out, report_path, canonical_dump(report_to_json(r)));
    // Gate passed but a consequence failed: that is a counterexample, so exit 1.
    bool gate = r.flag(flag::parachute_hypothesis) == true;
    return gate && r.flag(flag::conclusions_asserted) != true ? check_failed : ok;
  });

  // search
  std::string lattice_path, search_out;
  SearchOptions search_opts;
  std::optional<std::size_t> limit;
  std::vector<std::string> extra_groups;
  bool builtin = true;
  auto search = app.add_subcommand("search", "Find intervals isomorphic to a lattice");
  search->add_option("--lattice", lattice_path, "Target lattice JSON")->required();
  search->add_flag("--core-free", search_opts.core_free_only, "Only core-free H");
  search->add_flag("--hereditary", search_opts.hereditary,
                   "Every H <= Y < G must be core-free");
  search->add_option("--max-order", search_opts.max_group_order, "Largest |G| scanned");
  search->add_option("--limit", limit, "Maximum witnesses (0: no limit)");
  search->add_option("--group", extra_groups, "Add group files to the catalog");
  search->add_flag("!--no-builtin", builtin, "Skip the built-in catalog");
  search->add_option("--out,-o", search_out, "Write to this file instead of stdout");
  on(search, [&](Config const &config) {
    auto target = read_lattice_file(lattice_path);
    Catalog catalog = builtin ? Catalog::builtin(config) : Catalog{};
    for (auto const &f : extra_groups)
      catalog.add_file(f);
    search_opts.limit = limit.value_or(config.search_limit);
    auto r = find_representations(target, catalog, search_opts, config);
    emit(out, search_out, canonical_dump(search_result_to_json(r)));
    return r.witnesses.empty() ? check_failed : ok;
  });

  // certify
  std::string witness_path;
  auto certify_cmd = app.add_subcommand("certify", "Recheck stored witnesses");
  certify_cmd->add_option("--witness", witness_path,
                          "A witness or search output JSON")->required();
  certify_cmd->add_option("--lattice", lattice_path, "Target lattice JSON")->required();
  on(certify_cmd, [&](Config const &config) {
    auto j = read_json_file(witness_path);
    auto target = read_lattice_file(lattice_path);
    std::vector<Json> items;
    if (j.is_object() && j.contains("witnesses"))
      items.assign(j["witnesses"].begin(), j["witnesses"].end());
    else
      items.push_back(j);
    bool all = true;
    for (auto const &item : items) {
      auto w = witness_from_json(item);
      bool valid = certify(w, target, config);
      out << (valid ? "valid " : "invalid ") << w.name << "\n";
      all = all && valid;
    }
    return all ? ok : check_failed;
  });

  // selftest
  std::string canonical_path;
  std::vector<int> only;
  auto selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--canonical", canonical_path,
                       "Write the timing-free canonical results here");
  selftest->add_option("--only", only, "Run just these criteria");
  on(selftest, [&](Config const &config) {
    std::vector<acceptance::Outcome> outcomes;
    auto ids = only.empty() ? acceptance::criterion_ids() : only;
    for (int id : ids) {
      outcomes.push_back(acceptance::run_criterion(id, config));
      out << acceptance::format_line(outcomes.back()) << std::endl;
    }
    if (!canonical_path.empty())
      write_text_file(canonical_path, canonical_dump(acceptance::canonical_report(outcomes)));
    bool all = std::all_of(outcomes.begin(), outcomes.end(),
                           [](auto const &o) { return o.passed; });
    return all ? ok : check_failed;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    Config config = config_path.empty() ? Config::from_environment()
                                        : Config::from_json_file(config_path);
    if (threads != 0u)
      config.thread_count = threads;
    config.validate();
    if (!action) {
      err << "no command given\n";
      return usage_error;
    }
    return action(config);
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
}

} // namespace gilt::cli
