#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spcob {

/// Arbitrary-precision integer used for every coefficient in the engine.
using Integer = mpz_class;

/// Raised when an operation's precondition on its arguments is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an internal identity that must hold does not (exact division
/// leaving a remainder, and so on). Seeing one means a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_decimal(const Integer& z) { return z.get_str(10); }

inline Integer from_decimal(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) {
    throw DomainError("not a decimal integer: '" + s + "'");
  }
  return z;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace spcob
