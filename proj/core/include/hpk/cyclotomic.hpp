#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "hpk/qrational.hpp"

namespace hpk {

// e^{2 pi i u} q^r with u taken mod 1.
struct CycloValue {
  Rational u = 0;
  Rational r = 0;

  CycloValue() = default;
  CycloValue(const Rational& u_, const Rational& r_);
  CycloValue operator*(const CycloValue& o) const { return {u + o.u, r + o.r}; }
  CycloValue inverse() const { return {-u, -r}; }
  CycloValue conj() const { return {-u, r}; }
  bool is_one() const { return u == 0 && r == 0; }
  std::complex<double> evaluate(double q) const;
  std::string to_text() const;  // "q", "-q^(1/2)", "e(1/3)q"
  friend bool operator==(const CycloValue&, const CycloValue&) = default;
  friend auto operator<=>(const CycloValue& a, const CycloValue& b) {
    if (auto c = cmp(a.u, b.u); c != 0) return c <=> 0;
    return cmp(a.r, b.r) <=> 0;
  }
};

// Element of the cyclotomic field Q(zeta_infinity), stored as a sum of c_u e^{2 pi i u},
// reduced modulo the cyclotomic polynomial of the exponent conductor.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(const Rational& c);  // NOLINT
  static Cyclo root_of_unity(const Rational& u, const Rational& coeff = 1);

  const std::map<Rational, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> rational_value() const;
  Cyclo conj() const;
  std::complex<double> evaluate() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }

  std::string to_text() const;

 private:
  std::map<Rational, Rational> terms_;  // keys in [0,1)
  void add(const Rational& u, const Rational& c);
  void reduce();
};

// Finite sum of Cyclo coefficients times q^r.
class CycloPoly {
 public:
  CycloPoly() = default;
  CycloPoly(const Cyclo& c);  // NOLINT
  static CycloPoly monomial(const CycloValue& v, const Rational& coeff = 1);

  const std::map<Rational, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycloPoly& operator+=(const CycloPoly& o);
  CycloPoly& operator*=(const CycloPoly& o);
  friend CycloPoly operator+(CycloPoly a, const CycloPoly& b) { return a += b; }
  friend CycloPoly operator*(CycloPoly a, const CycloPoly& b) { return a *= b; }
  std::optional<QPolynomial> to_qpolynomial() const;  // when every coefficient is rational
  std::complex<double> evaluate(double q) const;

 private:
  std::map<Rational, Cyclo> terms_;
};

// Cyclotomic polynomial Phi_n with integer coefficients, constant term first.
std::vector<long> cyclotomic_polynomial(int n);

}  // namespace hpk
