#include <algorithm>

#include "gilt/errors.h"
#include "gilt/gset.h"
#include "gilt/parallel.h"
#include "gilt/props.h"
#include "gilt/search.h"
#include "gilt/subgroup_table.h"

namespace gilt
{

namespace
{

// Smallest subgroup index of each conjugacy class, in increasing order.
std::vector<Element> subgroup_class_representatives(SubgroupLattice const &sub)
{
  auto const &t = *sub.table;
  std::vector<std::uint32_t> gens;
  for (auto const &x : t.group().generators())
    gens.push_back(t.index_of(x));

  auto conjugate = [&](Bitset const &s, std::uint32_t g) {
    Bitset res = t.empty_set();
    std::uint32_t const gi = t.inverse(g);
    s.for_each([&](std::size_t x) {
      res.set(t.mul(t.mul(gi, static_cast<std::uint32_t>(x)), g));
    });
    return res;
  };

  std::vector<bool> seen(sub.subgroups.size(), false);
  std::vector<Element> reps;
  for (Element i = 0; i < sub.subgroups.size(); ++i) {
    if (seen[i])
      continue;
    reps.push_back(i);
    seen[i] = true;
    std::vector<Element> stack{i};
    while (!stack.empty()) {
      Element j = stack.back();
      stack.pop_back();
      for (auto g : gens) {
        Element k = sub.index.at(conjugate(sub.subgroups[j], g));
        if (!seen[k]) {
          seen[k] = true;
          stack.push_back(k);
        }
      }
    }
  }
  return reps;
}

std::optional<Witness> try_pair(CatalogEntry const &entry, PermGroup const &h,
                                FiniteLattice const &target,
                                SearchOptions const &opts, Config const &config)
{
  bool const cf = is_core_free(entry.group, h, config);
  if ((opts.core_free_only || opts.hereditary) && !cf)
    return std::nullopt;

  auto interval = interval_lattice(entry.group, h, config);
  auto iso = is_isomorphic(interval, target);
  if (!iso)
    return std::nullopt;

  bool const hcf = core_free_hereditary(entry.group, h, config);
  if (opts.hereditary && !hcf)
    return std::nullopt;
  return Witness{entry.name, entry.group, h, std::move(*iso), cf, hcf};
}

std::vector<Witness> search_entry(CatalogEntry const &entry,
                                  FiniteLattice const &target,
                                  SearchOptions const &opts, Config const &config)
{
  std::vector<Witness> res;
  if (entry.group.order() > opts.max_group_order)
    return res;

  if (entry.candidate_subgroups) {
    for (auto const &h : *entry.candidate_subgroups)
      if (auto w = try_pair(entry, h, target, opts, config))
        res.push_back(std::move(*w));
    return res;
  }

  auto sub = subgroup_lattice_bruteforce(entry.group, config);
  std::vector<Element> candidates;
  if (opts.prune_conjugates) {
    candidates = subgroup_class_representatives(sub);
  } else {
    candidates.resize(sub.subgroups.size());
    for (Element i = 0; i < candidates.size(); ++i)
      candidates[i] = i;
  }

  for (Element i : candidates) {
    // Cheap size filter on the enumerated lattice before the real interval.
    if (interval_bruteforce(sub, i).first.size() != target.size())
      continue;
    if (auto w = try_pair(entry, sub.group(i), target, opts, config))
      res.push_back(std::move(*w));
  }
  return res;
}

} // anonymous namespace

SearchResult find_representations(FiniteLattice const &target,
                                  Catalog const &catalog,
                                  SearchOptions const &opts,
                                  Config const &config)
{
  if (catalog.empty())
    throw Error(ErrorKind::EmptyCatalog, "no groups to search");

  auto const &entries = catalog.entries();
  std::vector<std::vector<Witness>> found(entries.size());
  parallel_for(entries.size(), config.thread_count, [&](std::size_t i) {
    found[i] = search_entry(entries[i], target, opts, config);
  });

  SearchResult res;
  for (auto &f : found)
    for (auto &w : f)
      res.witnesses.push_back(std::move(w));

  // Stable, so ties keep catalog and subgroup order.
  std::stable_sort(res.witnesses.begin(), res.witnesses.end(),
                   [](Witness const &a, Witness const &b) {
    auto ga = a.group.order(), gb = b.group.order();
    if (ga != gb)
      return ga < gb;
    return a.subgroup.order() < b.subgroup.order();
  });

  if (opts.limit != 0u && res.witnesses.size() > opts.limit) {
    res.witnesses.resize(opts.limit);
    res.truncated = true;
  }
  return res;
}

bool certify(Witness const &w, FiniteLattice const &target, Config const &config)
{
  try {
    if (!is_subgroup(w.group, w.subgroup))
      return false;
    auto interval = interval_lattice(w.group, w.subgroup, config);
    if (!is_isomorphism(interval, target, w.iso.mapping))
      return false;
    return w.core_free == is_core_free(w.group, w.subgroup, config) &&
           w.hereditary_core_free == core_free_hereditary(w.group, w.subgroup, config);
  } catch (...) {
    return false;
  }
}

Json witness_to_json(Witness const &w)
{
  return Json{{"name", w.name},
              {"group", group_to_json(w.group)},
              {"subgroup", group_to_json(w.subgroup)},
              {"iso", w.iso.mapping},
              {"flags", {{"core_free", w.core_free},
                         {"hereditary_core_free", w.hereditary_core_free}}}};
}

Witness witness_from_json(Json const &j)
{
  try {
    Witness w{j.at("name").get<std::string>(),
              group_from_json(j.at("group")),
              group_from_json(j.at("subgroup")),
              LatticeIso{j.at("iso").get<std::vector<Element>>()},
              j.at("flags").at("core_free").get<bool>(),
              j.at("flags").at("hereditary_core_free").get<bool>()};
    if (w.group.degree() != w.subgroup.degree())
      throw Error(ErrorKind::ParseError, "group and subgroup degrees differ");
    return w;
  } catch (Json::exception const &e) {
    throw Error(ErrorKind::ParseError, std::string("witness: ") + e.what());
  }
}

Json search_result_to_json(SearchResult const &r)
{
  Json ws = Json::array();
  for (auto const &w : r.witnesses)
    ws.push_back(witness_to_json(w));
  return Json{{"witnesses", ws}, {"truncated", r.truncated}};
}

} // namespace gilt
