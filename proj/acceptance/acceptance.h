#ifndef GUARD_GILT_ACCEPTANCE_H
#define GUARD_GILT_ACCEPTANCE_H

// The acceptance suite shared by the test binary and `gilt selftest`.

#include <functional>
#include <string>
#include <vector>

#include "gilt/config.h"
#include "gilt/io.h"

namespace gilt::acceptance
{

struct Outcome
{
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  // Wall-clock budget; 0 means none.
  double limit_seconds = 0.0;
  std::string detail;
  // Everything except timings, so two runs can be compared byte for byte.
  Json canonical = Json::object();
};

std::vector<int> criterion_ids();

// Never throws; an exception becomes a failed outcome.
Outcome run_criterion(int id, Config const &config);

std::vector<Outcome> run_all(Config const &config,
                             std::function<void(Outcome const &)> const &on_done = {});

// "PASS 4 kurzweil reference instance (1.9 s / 120 s)"
std::string format_line(Outcome const &o);

Json canonical_report(std::vector<Outcome> const &outcomes);

} // namespace gilt::acceptance

#endif // GUARD_GILT_ACCEPTANCE_H
