#include <cstdlib>
#include <iostream>

#include "acceptance.h"

int main(int argc, char **argv)
{
  auto config = gilt::Config::from_environment();
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i)
    ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    ids = gilt::acceptance::criterion_ids();

  bool ok = true;
  for (int id : ids) {
    auto o = gilt::acceptance::run_criterion(id, config);
    std::cout << gilt::acceptance::format_line(o) << std::endl;
    ok = ok && o.passed;
  }
  return ok ? 0 : 1;
}
