#ifndef GUARD_GILT_BIGINT_H
#define GUARD_GILT_BIGINT_H

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gilt
{

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(BigInt const &n)
{ return n.str(); }

// Throws BoundExceeded when n does not fit.
std::uint64_t to_u64(BigInt const &n);

} // namespace gilt

#endif // GUARD_GILT_BIGINT_H
