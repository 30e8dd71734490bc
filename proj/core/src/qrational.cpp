#include "hpk/qrational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hpk {

namespace {

using Dense = std::vector<Rational>;  // coefficient of x^k at index k

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_mod(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense dense_divexact(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

void make_monic(Dense& p) {
  const Rational lc = p.back();
  for (auto& c : p) c /= lc;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    make_monic(b);
    Dense r = dense_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) make_monic(a);
  return a;
}

std::string coeff_text(const Rational& c, bool leading, bool has_var) {
  std::string s;
  const Rational a = abs(c);
  if (leading)
    s = c < 0 ? "-" : "";
  else
    s = c < 0 ? " - " : " + ";
  if (!has_var || a != 1) s += a.get_str() + (has_var ? "*" : "");
  return s;
}

std::string coeff_tex(const Rational& c, bool leading, bool has_var) {
  std::string s;
  const Rational a = abs(c);
  if (leading)
    s = c < 0 ? "-" : "";
  else
    s = c < 0 ? "-" : "+";
  if (!has_var || a != 1) {
    if (a.get_den() == 1)
      s += a.get_num().get_str();
    else
      s += "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  }
  return s;
}

// exact r-th root of a nonnegative integer, if it exists
std::optional<mpz_class> exact_root(const mpz_class& z, unsigned long k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

// q^e for rational q > 0 when rational
std::optional<Rational> rational_power(const Rational& q, const Rational& e) {
  if (q <= 0) return std::nullopt;
  if (!e.get_den().fits_ulong_p() || !e.get_num().fits_slong_p()) return std::nullopt;
  const unsigned long k = e.get_den().get_ui();
  auto n = exact_root(q.get_num(), k);
  auto d = exact_root(q.get_den(), k);
  if (!n || !d) return std::nullopt;
  long p = e.get_num().get_si();
  mpz_class a, b;
  const unsigned long ap = static_cast<unsigned long>(p < 0 ? -p : p);
  mpz_pow_ui(a.get_mpz_t(), n->get_mpz_t(), ap);
  mpz_pow_ui(b.get_mpz_t(), d->get_mpz_t(), ap);
  Rational r = p < 0 ? Rational(b, a) : Rational(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

std::string exponent_text(const Rational& e) {
  if (e.get_den() == 1 && e >= 0) return e.get_str();
  return "(" + e.get_str() + ")";
}

QPolynomial::QPolynomial(const Rational& c) {
  if (c != 0) terms_[Rational(0)] = c;
}

QPolynomial QPolynomial::monomial(const Rational& exponent, const Rational& coeff) {
  QPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void QPolynomial::add_term(const Rational& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool QPolynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational QPolynomial::coeff(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational QPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min exponent of zero polynomial");
  return terms_.begin()->first;
}

Rational QPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max exponent of zero polynomial");
  return terms_.rbegin()->first;
}

Rational QPolynomial::leading_coeff() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

mpz_class QPolynomial::exponent_denominator() const {
  mpz_class l = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
  return l;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  QPolynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(r.terms_);
  return *this;
}

QPolynomial QPolynomial::pow(unsigned k) const {
  QPolynomial r(Rational(1)), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

QPolynomial QPolynomial::substitute_power(const Rational& e) const {
  if (e == 0) {
    Rational s = 0;
    for (const auto& [x, c] : terms_) s += c;
    return QPolynomial(s);
  }
  QPolynomial r;
  for (const auto& [x, c] : terms_) r.add_term(x * e, c);
  return r;
}

double QPolynomial::evaluate(double q) const {
  double s = 0;
  for (const auto& [e, c] : terms_) s += c.get_d() * std::pow(q, e.get_d());
  return s;
}

std::optional<Rational> QPolynomial::evaluate_exact(const Rational& q) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    auto p = rational_power(q, e);
    if (!p) return std::nullopt;
    s += c * *p;
  }
  return s;
}

std::string QPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool var = it->first != 0;
    s += coeff_text(it->second, first, var);
    if (var) s += it->first == 1 ? "q" : "q^" + exponent_text(it->first);
    first = false;
  }
  return s;
}

std::string QPolynomial::to_tex() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool var = it->first != 0;
    s += coeff_tex(it->second, first, var);
    if (var) {
      const Rational& e = it->first;
      if (e == 1)
        s += "q";
      else if (e.get_den() == 1)
        s += "q^{" + e.get_str() + "}";
      else
        s += "q^{" + std::string(e < 0 ? "-" : "") + Rational(abs(e)).get_num().get_str() + "/" + e.get_den().get_str() + "}";
    }
    first = false;
  }
  return s;
}

QRational::QRational(const QPolynomial& num, const QPolynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("division by zero rational function");
  canonicalize();
}

void QRational::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPolynomial(Rational(1));
    return;
  }
  mpz_class D = num_.exponent_denominator();
  const mpz_class D2 = den_.exponent_denominator();
  mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), D2.get_mpz_t());
  const Rational Dq(D);
  const Rational a = num_.min_exponent(), b = den_.min_exponent();
  auto to_dense = [&](const QPolynomial& p, const Rational& shift) {
    Dense v;
    for (const auto& [e, c] : p.terms()) {
      const Rational k = (e - shift) * Dq;
      const long idx = k.get_num().get_si();
      if (static_cast<long>(v.size()) <= idx) v.resize(idx + 1, Rational(0));
      v[idx] = c;
    }
    return v;
  };
  Dense n = to_dense(num_, a), d = to_dense(den_, b);
  const Dense g = dense_gcd(n, d);
  if (g.size() > 1) {
    n = dense_divexact(n, g);
    d = dense_divexact(d, g);
  }
  const Rational lc = d.back();
  QPolynomial nn, dd;
  const Rational shift = a - b;
  for (size_t k = 0; k < n.size(); ++k)
    if (n[k] != 0) nn += QPolynomial::monomial(Rational(static_cast<long>(k)) / Dq + shift, n[k] / lc);
  for (size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) dd += QPolynomial::monomial(Rational(static_cast<long>(k)) / Dq, d[k] / lc);
  num_ = std::move(nn);
  den_ = std::move(dd);
}

bool QRational::has_integer_exponents() const {
  return num_.exponent_denominator() == 1 && den_.exponent_denominator() == 1;
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational& QRational::operator+=(const QRational& o) {
  *this = QRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

QRational& QRational::operator-=(const QRational& o) {
  *this = QRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

QRational& QRational::operator*=(const QRational& o) {
  *this = QRational(num_ * o.num_, den_ * o.den_);
  return *this;
}

QRational& QRational::operator/=(const QRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  *this = QRational(num_ * o.den_, den_ * o.num_);
  return *this;
}

QRational QRational::inverse() const { return QRational(den_, num_); }

QRational QRational::pow(int k) const {
  const QRational b = k < 0 ? inverse() : *this;
  const unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  return QRational(b.num_.pow(e), b.den_.pow(e));
}

QRational QRational::substitute_power(const Rational& e) const {
  return QRational(num_.substitute_power(e), den_.substitute_power(e));
}

double QRational::evaluate(double q) const { return num_.evaluate(q) / den_.evaluate(q); }

std::optional<Rational> QRational::evaluate_exact(const Rational& q) const {
  auto n = num_.evaluate_exact(q);
  auto d = den_.evaluate_exact(q);
  if (!n || !d) return std::nullopt;
  if (*d == 0) throw std::domain_error("pole at q = " + q.get_str());
  return *n / *d;
}

std::string QRational::to_text() const {
  if (den_.is_constant()) return num_.to_text();
  auto wrap = [](const QPolynomial& p) { return p.terms().size() > 1 ? "(" + p.to_text() + ")" : p.to_text(); };
  return wrap(num_) + "/" + wrap(den_);
}

std::string QRational::to_tex() const {
  if (den_.is_constant()) return num_.to_tex();
  return "\\frac{" + num_.to_tex() + "}{" + den_.to_tex() + "}";
}

}  // namespace hpk
