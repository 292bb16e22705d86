#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace syzforms {

// Exact arbitrary-precision rationals; the coefficient field everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Binomial coefficient C(a, k) for integer a (possibly negative), k >= 0.
inline Integer binomial(long a, int k) {
  if (k < 0) return 0;
  Integer num = 1;
  for (int i = 0; i < k; ++i) num *= Integer(a - i);
  Integer den = 1;
  for (int i = 2; i <= k; ++i) den *= i;
  return num / den;
}

// dim_k R_d for a polynomial ring in nv variables: C(d + nv - 1, nv - 1),
// zero for d < 0.
inline long dim_poly_degree(int nvars, int d) {
  if (d < 0) return 0;
  return binomial(d + nvars - 1, nvars - 1).get_si();
}

}  // namespace syzforms
