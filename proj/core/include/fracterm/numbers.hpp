#pragma once

#include <gmpxx.h>

#include <string>

namespace fracterm {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;

/// Nonnegative gcd; gcd(0, 0) == 0.
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Truncating integer division with the total convention n \ 0 = 0.
inline Integer int_div(const Integer& n, const Integer& d) {
  if (d == 0) return Integer(0);
  Integer r;
  mpz_tdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

inline std::string to_decimal(const Integer& n) { return n.get_str(10); }

/// "p/q" with q > 0; integers print as "p/1".
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

}  // namespace fracterm
