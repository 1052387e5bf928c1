#ifndef GUARD_GILT_TOOLS_CLI_H
#define GUARD_GILT_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace gilt::cli
{

// Exit codes: 0 success, 1 a mathematical check failed, 2 usage, parse or
// input error. args excludes the program name.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace gilt::cli

#endif // GUARD_GILT_TOOLS_CLI_H
