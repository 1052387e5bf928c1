#include "gilt/lattice.h"
#include "gilt/parallel.h"
#include "gilt/subgroup_table.h"
#include "gilt/sweeps.h"

namespace gilt
{

namespace
{

template<typename F>
SweepResult sweep(NamedGroups const &groups, Config const &config, F &&per_group)
{
  std::vector<SweepResult> slots(groups.size());
  parallel_for(groups.size(), config.thread_count, [&](std::size_t i) {
    auto sub = subgroup_lattice_bruteforce(groups[i].second, config);
    per_group(groups[i].first, sub, slots[i]);
  });

  SweepResult res;
  res.groups = groups.size();
  for (auto &s : slots) {
    res.cases += s.cases;
    res.nontrivial += s.nontrivial;
    for (auto &f : s.failures)
      res.failures.push_back(std::move(f));
  }
  return res;
}

} // anonymous namespace

SweepResult dedekind_sweep(NamedGroups const &groups, Config const &config)
{
  return sweep(groups, config, [](std::string const &name,
                                  SubgroupLattice const &sub, SweepResult &out) {
    auto const &t = *sub.table;
    auto const &s = sub.subgroups;
    std::size_t const m = s.size();

    std::vector<Bitset> prod(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        prod[a * m + b] = t.product(s[a], s[b]);

    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (!s[a].is_subset_of(s[b]))
          continue;
        for (std::size_t c = 0; c < m; ++c) {
          std::size_t const cb = sub.find(s[c] & s[b]);
          ++out.cases;
          if (prod[a * m + cb] != (prod[a * m + c] & s[b]) ||
              prod[cb * m + a] != (prod[c * m + a] & s[b]))
            out.failures.push_back(name + "/" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c));
        }
      }
  });
}

SweepResult antichain_sweep(NamedGroups const &groups, Config const &config)
{
  return sweep(groups, config, [](std::string const &name,
                                  SubgroupLattice const &sub, SweepResult &out) {
    auto const &t = *sub.table;
    auto const &s = sub.subgroups;
    for (Element h = 0; h < s.size(); ++h) {
      // Antichains are checked in the interval lattice itself.
      auto [interval, members] = interval_bruteforce(sub, h);
      std::vector<Element> position(s.size(), 0);
      for (Element k = 0; k < members.size(); ++k)
        position[members[k]] = k;

      for (Element a : members) {
        ++out.cases;
        std::vector<Element> permuting;
        for (Element b : complements_in_interval(sub, h, a))
          if (t.product(s[a], s[b]) == t.product(s[b], s[a]))
            permuting.push_back(position[b]);
        if (permuting.size() >= 2u)
          ++out.nontrivial;
        if (!is_antichain(interval, permuting))
          out.failures.push_back(name + "/" + std::to_string(h) + "," +
                                 std::to_string(a));
      }
    }
  });
}

Json sweep_to_json(SweepResult const &r)
{
  return Json{{"groups", r.groups},
              {"cases", r.cases},
              {"nontrivial", r.nontrivial},
              {"failures", r.failures}};
}

} // namespace gilt
