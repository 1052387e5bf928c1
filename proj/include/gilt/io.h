#ifndef GUARD_GILT_IO_H
#define GUARD_GILT_IO_H

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lattice.h"
#include "perm_group.h"

namespace gilt
{

using Json = nlohmann::json;

// Group file: a `degree d` line, then one generator per line in 1-based cycle
// notation. Blank lines and `#` comments are ignored. Throws ParseError.
PermGroup parse_group(std::string const &text);
PermGroup read_group_file(std::string const &path);
std::string format_group(PermGroup const &g);

// Generators as 1-based cycle strings.
Json group_to_json(PermGroup const &g);
// {"degree": d, "generators": [...]}. Throws ParseError.
PermGroup group_from_json(Json const &j);

// {"size": m, "covers": [[a, b], ...]}, covers sorted.
Json lattice_to_json(FiniteLattice const &l);
// Throws ParseError plus the lattice validation errors.
FiniteLattice lattice_from_json(Json const &j);
FiniteLattice read_lattice_file(std::string const &path);

// Hasse diagram, bottom at the bottom.
std::string lattice_to_dot(FiniteLattice const &l, std::string const &name = "L");

// Sorted keys, two-space indent, trailing LF.
std::string canonical_dump(Json const &j);

Json read_json_file(std::string const &path);
void write_text_file(std::string const &path, std::string const &text);

} // namespace gilt

#endif // GUARD_GILT_IO_H
