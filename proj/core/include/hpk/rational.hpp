#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hpk {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

// Accepts "7", "-3/4", "0.25", "1e-2".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

Rational frac_part(const Rational& r);  // representative in [0,1)
mpz_class floor_of(const Rational& r);
bool is_integer(const Rational& r);
long long to_int64(const Rational& r);  // throws unless integral and in range
long long to_int64(const mpz_class& z);

// gcd of the additive subgroup of Q generated by a and b
Rational rat_gcd(const Rational& a, const Rational& b);
mpz_class lcm_of_denominators(const RatVector& v);

std::string to_string(const RatVector& v);

inline int sign_of(const Rational& r) { return sgn(r); }

// gmpxx has no long long overloads; these keep conversions unambiguous on LP64
inline Rational rat(long long x) { return Rational(static_cast<long>(x)); }
inline Rational rat(long long num, long long den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}
inline mpz_class zint(long long x) { return mpz_class(static_cast<long>(x)); }

}  // namespace hpk
