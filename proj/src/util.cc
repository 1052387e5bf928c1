#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <thread>

#include <json.hpp>

#include "gilt/bigint.h"
#include "gilt/config.h"
#include "gilt/errors.h"

namespace gilt
{

std::string_view error_kind_name(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::DegreeMismatch: return "DegreeMismatch";
  case ErrorKind::NotASubgroup: return "NotASubgroup";
  case ErrorKind::NotMembers: return "NotMembers";
  case ErrorKind::BoundExceeded: return "BoundExceeded";
  case ErrorKind::DegenerateInput: return "DegenerateInput";
  case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
  case ErrorKind::NotALattice: return "NotALattice";
  case ErrorKind::NoBoundedTop: return "NoBoundedTop";
  case ErrorKind::TooFewPanels: return "TooFewPanels";
  case ErrorKind::PanelTooSmall: return "PanelTooSmall";
  case ErrorKind::InvalidPoint: return "InvalidPoint";
  case ErrorKind::IntransitiveAction: return "IntransitiveAction";
  case ErrorKind::NotInInterval: return "NotInInterval";
  case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  case ErrorKind::IndexTooSmall: return "IndexTooSmall";
  case ErrorKind::NotSimple: return "NotSimple";
  case ErrorKind::NotCoreFree: return "NotCoreFree";
  case ErrorKind::EmptyInput: return "EmptyInput";
  case ErrorKind::EmptyCatalog: return "EmptyCatalog";
  case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::uint64_t to_u64(BigInt const &n)
{
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorKind::BoundExceeded, n.str() + " does not fit 64 bits");
  return n.convert_to<std::uint64_t>();
}

unsigned Config::default_thread_count()
{ return std::max(1u, std::thread::hardware_concurrency()); }

Config Config::from_json_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::ParseError, "cannot open config file " + path);

  Config config;
  try {
    auto j = nlohmann::json::parse(in);
    if (!j.is_object())
      throw Error(ErrorKind::ParseError, "config must be a JSON object");

    auto read = [&](char const *key, auto &field) {
      if (!j.contains(key))
        return;
      auto const &v = j.at(key);
      if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
        throw Error(ErrorKind::ParseError,
                    std::string("config key ") + key + " must be a positive integer");
      field = v.get<std::remove_reference_t<decltype(field)>>();
    };
    read("brute_force_order_bound", config.brute_force_order_bound);
    read("coset_index_cap", config.coset_index_cap);
    read("partition_n_cap", config.partition_n_cap);
    read("search_limit", config.search_limit);
    read("thread_count", config.thread_count);
    read("element_scan_bound", config.element_scan_bound);
    read("alt_sym_order_bound", config.alt_sym_order_bound);
  } catch (nlohmann::json::exception const &e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }

  config.validate();
  return config;
}

Config Config::from_environment()
{
  char const *path = std::getenv("GILT_CONFIG");
  if (!path || !*path)
    return Config{};
  return from_json_file(path);
}

void Config::validate() const
{
  if (brute_force_order_bound == 0u || coset_index_cap == 0u ||
      partition_n_cap == 0u || search_limit == 0u || thread_count == 0u ||
      element_scan_bound == 0u || alt_sym_order_bound == 0u)
    throw Error(ErrorKind::ParseError, "config values must be positive");
}

} // namespace gilt
