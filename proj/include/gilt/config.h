#ifndef GUARD_GILT_CONFIG_H
#define GUARD_GILT_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <string>

namespace gilt
{

/// Resource bounds shared by the brute-force parts of the library.
///
/// Every operation that scans elements or enumerates subgroups checks the
/// relevant bound up front and throws BoundExceeded instead of truncating.
struct Config
{
  std::uint64_t brute_force_order_bound = 2000;
  std::uint64_t coset_index_cap = 100000;
  unsigned partition_n_cap = 7;
  std::size_t search_limit = 10;
  unsigned thread_count = default_thread_count();
  std::uint64_t element_scan_bound = 1000000;
  std::uint64_t alt_sym_order_bound = 40320;

  static unsigned default_thread_count();

  // Throws ParseError on malformed files or non-positive values.
  static Config from_json_file(std::string const &path);

  // Reads GILT_CONFIG if set, defaults otherwise.
  static Config from_environment();

  void validate() const;
};

} // namespace gilt

#endif // GUARD_GILT_CONFIG_H
