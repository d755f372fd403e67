#ifndef HQL_FORMAT_UTIL_HPP
#define HQL_FORMAT_UTIL_HPP

#include <complex>
#include <cstdint>
#include <string>

namespace hql {

/// Shortest round-trippable decimal form of a double ("%.17g", then trimmed).
/// Reports must be byte-stable across runs, so all numeric output funnels
/// through this one function.
std::string fmt_double(double x);

std::string fmt_complex(std::complex<double> z);

/// FNV-1a 64-bit hash, used to stamp reports with a config fingerprint.
std::uint64_t fnv1a64(const std::string& bytes);

std::string hex64(std::uint64_t v);

}  // namespace hql

#endif
