#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace brauer {

/// Arbitrary-precision integer and rational scalars. Rationals are kept in
/// lowest terms with positive denominator by GMP's canonical form; zero is
/// 0/1.
using Int = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Int factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of negative integer");
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline Rational inverse_factorial(int k) {
  return Rational(1) / Rational(factorial(k));
}

/// num/den in lowest terms (the raw two-argument mpq_class constructor
/// does not canonicalize).
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Exact decimal-free form: "num" or "num/den", e.g. "-1/2", "3".
inline std::string scalar_to_string(const Rational& x) { return x.get_str(); }
inline std::string scalar_to_string(const Int& x) { return x.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace brauer
