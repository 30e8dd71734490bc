#pragma once

#include <map>
#include <optional>
#include <string>

#include "hpk/rational.hpp"

namespace hpk {

// Finite sum of c_r q^r with r, c_r rational.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(const Rational& c);  // NOLINT: constants convert implicitly
  static QPolynomial monomial(const Rational& exponent, const Rational& coeff = 1);
  static QPolynomial q() { return monomial(1); }

  const std::map<Rational, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(const Rational& exponent) const;
  Rational min_exponent() const;  // requires nonzero
  Rational max_exponent() const;
  Rational leading_coeff() const;
  // lcm of the exponent denominators
  mpz_class exponent_denominator() const;

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
  QPolynomial pow(unsigned k) const;
  // q -> q^e
  QPolynomial substitute_power(const Rational& e) const;

  double evaluate(double q) const;
  // exact value at rational q; nullopt when some q^r is irrational
  std::optional<Rational> evaluate_exact(const Rational& q) const;

  std::string to_text() const;
  std::string to_tex() const;

 private:
  std::map<Rational, Rational> terms_;  // no zero coefficients
  void add_term(const Rational& e, const Rational& c);
};

// Quotient of two QPolynomials in canonical form: gcd removed over Q[q^{1/D}],
// denominator monic (leading coefficient 1) with lowest exponent 0.
class QRational {
 public:
  QRational() : num_(Rational(0)), den_(Rational(1)) {}
  QRational(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  QRational(const QPolynomial& p) : num_(p), den_(Rational(1)) { canonicalize(); }  // NOLINT
  QRational(const QPolynomial& num, const QPolynomial& den);
  static QRational monomial(const Rational& exponent, const Rational& coeff = 1) {
    return QRational(QPolynomial::monomial(exponent, coeff));
  }

  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool has_integer_exponents() const;

  QRational operator-() const;
  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  QRational& operator*=(const QRational& o);
  QRational& operator/=(const QRational& o);
  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
  friend bool operator==(const QRational& a, const QRational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  QRational inverse() const;
  QRational pow(int k) const;
  QRational substitute_power(const Rational& e) const;

  double evaluate(double q) const;
  std::optional<Rational> evaluate_exact(const Rational& q) const;

  std::string to_text() const;
  std::string to_tex() const;

 private:
  QPolynomial num_, den_;
  void canonicalize();
};

std::string exponent_text(const Rational& e);

}  // namespace hpk
