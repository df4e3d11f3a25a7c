#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace preproj {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an enumeration would exceed its configured bound.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for operations outside the implemented scope (e.g. bracket pairs
/// with no closed formula).
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Limits shared by every enumerator.
struct Budget {
  std::uint64_t enumeration_cap = 1'000'000;
  int max_total_dim = 5;
  std::uint32_t max_q = 7;
};

[[noreturn]] inline void argument_error(const std::string& what) {
  throw std::invalid_argument(what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) argument_error(what);
}

/// Checked power q^e with budget enforcement.
inline std::uint64_t checked_power(std::uint64_t q, std::uint64_t e, std::uint64_t cap,
                                   const std::string& what) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (r > cap / q) throw BudgetError(what + ": exceeds enumeration cap " + std::to_string(cap));
    r *= q;
  }
  if (r > cap) throw BudgetError(what + ": exceeds enumeration cap " + std::to_string(cap));
  return r;
}

}  // namespace preproj
