#pragma once

#include <gmpxx.h>

#include <string>

namespace polycells {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  Integer r;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace polycells
