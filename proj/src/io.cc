#include <fstream>
#include <sstream>

#include "gilt/errors.h"
#include "gilt/io.h"

namespace gilt
{

namespace
{

std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1u);
}

std::string read_text_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // anonymous namespace

PermGroup parse_group(std::string const &text)
{
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;

    if (!degree) {
      std::istringstream words(line);
      std::string keyword;
      long long d = -1;
      std::string rest;
      if (!(words >> keyword >> d) || keyword != "degree" || d < 0 || (words >> rest))
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(lineno) + ": expected `degree d`");
      degree = static_cast<std::size_t>(d);
      continue;
    }

    try {
      gens.push_back(Permutation::parse(*degree, line));
    } catch (Error const &e) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": " + e.what());
    }
  }

  if (!degree)
    throw Error(ErrorKind::ParseError, "missing `degree d` line");
  return PermGroup(*degree, std::move(gens));
}

PermGroup read_group_file(std::string const &path)
{ return parse_group(read_text_file(path)); }

std::string format_group(PermGroup const &g)
{
  std::string res = "degree " + std::to_string(g.degree()) + "\n";
  for (auto const &x : g.generators())
    res += x.to_string() + "\n";
  return res;
}

Json group_to_json(PermGroup const &g)
{
  Json gens = Json::array();
  for (auto const &x : g.generators())
    gens.push_back(x.to_string());
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

PermGroup group_from_json(Json const &j)
{
  try {
    auto degree = j.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (auto const &s : j.at("generators"))
      gens.push_back(Permutation::parse(degree, s.get<std::string>()));
    return PermGroup(degree, std::move(gens));
  } catch (Json::exception const &e) {
    throw Error(ErrorKind::ParseError, std::string("group JSON: ") + e.what());
  } catch (Error const &e) {
    throw Error(ErrorKind::ParseError, std::string("group JSON: ") + e.what());
  }
}

Json lattice_to_json(FiniteLattice const &l)
{
  Json covers = Json::array();
  for (auto [a, b] : l.covers())
    covers.push_back(Json::array({a, b}));
  return Json{{"covers", covers}, {"size", l.size()}};
}

FiniteLattice lattice_from_json(Json const &j)
{
  std::size_t size;
  std::vector<Cover> covers;
  try {
    if (!j.at("size").is_number_unsigned())
      throw Error(ErrorKind::ParseError, "size must be a non-negative integer");
    size = j.at("size").get<std::size_t>();
    for (auto const &c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2u || !c[0].is_number_unsigned() ||
          !c[1].is_number_unsigned())
        throw Error(ErrorKind::ParseError, "cover must be a pair of indices");
      covers.emplace_back(c[0].get<Element>(), c[1].get<Element>());
    }
  } catch (Json::exception const &e) {
    throw Error(ErrorKind::ParseError, std::string("lattice JSON: ") + e.what());
  }
  return FiniteLattice::from_covers(size, covers);
}

Json read_json_file(std::string const &path)
{
  try {
    return Json::parse(read_text_file(path));
  } catch (Json::exception const &e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

FiniteLattice read_lattice_file(std::string const &path)
{ return lattice_from_json(read_json_file(path)); }

std::string lattice_to_dot(FiniteLattice const &l, std::string const &name)
{
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < l.size(); ++x)
    out << "  " << x << " [label=\"" << x << "\"];\n";
  for (auto [a, b] : l.covers())
    out << "  " << a << " -> " << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string canonical_dump(Json const &j)
{
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  return j.dump(2) + "\n";
}

void write_text_file(std::string const &path, std::string const &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

} // namespace gilt
