#include "hpk/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hpk {

namespace {

std::vector<long> poly_divide_exact(std::vector<long> a, const std::vector<long>& b) {
  // b monic
  const long db = static_cast<long>(b.size()) - 1;
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    const long c = a[i];
    q[i - db] = c;
    for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n < 1 || n > 4096) throw std::invalid_argument("cyclotomic order out of range");
  std::vector<long> p(n + 1, 0);  // x^n - 1
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  cache[n] = p;
  return p;
}

CycloValue::CycloValue(const Rational& u_, const Rational& r_) : u(frac_part(u_)), r(r_) {}

std::complex<double> CycloValue::evaluate(double q) const {
  const double ang = 2 * std::numbers::pi * u.get_d();
  return std::polar(std::pow(q, r.get_d()), ang);
}

std::string CycloValue::to_text() const {
  std::string base = r == 0 ? "1" : (r == 1 ? "q" : "q^" + exponent_text(r));
  if (u == 0) return base;
  if (u == Rational(1, 2)) return "-" + base;
  return "e(" + u.get_str() + ")" + (r == 0 ? "" : base);
}

Cyclo::Cyclo(const Rational& c) { add(Rational(0), c); }

Cyclo Cyclo::root_of_unity(const Rational& u, const Rational& coeff) {
  Cyclo z;
  z.add(frac_part(u), coeff);
  z.reduce();
  return z;
}

void Cyclo::add(const Rational& u, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Cyclo::reduce() {
  if (terms_.empty()) return;
  mpz_class N = 1;
  for (const auto& [u, c] : terms_) mpz_lcm(N.get_mpz_t(), N.get_mpz_t(), u.get_den_mpz_t());
  if (N == 1) return;
  if (N > 4096) throw std::overflow_error("root of unity order too large");
  const long n = N.get_si();
  std::vector<Rational> v(n, Rational(0));
  for (const auto& [u, c] : terms_) v[Rational(u * Rational(N)).get_num().get_si()] += c;
  const auto phi = cyclotomic_polynomial(static_cast<int>(n));
  const size_t deg = phi.size() - 1;
  for (size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    const Rational c = v[i];
    const size_t shift = i - deg;
    for (size_t j = 0; j <= deg; ++j) v[shift + j] -= c * phi[j];
  }
  terms_.clear();
  for (size_t k = 0; k < deg && k < v.size(); ++k)
    if (v[k] != 0) terms_[rat(static_cast<long long>(k), n)] = v[k];
}

std::optional<Rational> Cyclo::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
  return std::nullopt;
}

Cyclo Cyclo::conj() const {
  Cyclo z;
  for (const auto& [u, c] : terms_) z.add(frac_part(-u), c);
  z.reduce();
  return z;
}

std::complex<double> Cyclo::evaluate() const {
  std::complex<double> s = 0;
  for (const auto& [u, c] : terms_) s += c.get_d() * std::polar(1.0, 2 * std::numbers::pi * u.get_d());
  return s;
}

Cyclo Cyclo::operator-() const {
  Cyclo z = *this;
  for (auto& [u, c] : z.terms_) c = -c;
  return z;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  for (const auto& [u, c] : o.terms_) add(u, c);
  reduce();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  for (const auto& [u, c] : o.terms_) add(u, -c);
  reduce();
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  Cyclo z;
  for (const auto& [u1, c1] : terms_)
    for (const auto& [u2, c2] : o.terms_) z.add(frac_part(u1 + u2), c1 * c2);
  z.reduce();
  *this = std::move(z);
  return *this;
}

std::string Cyclo::to_text() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [u, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    if (u != 0) s += "*e(" + u.get_str() + ")";
  }
  return s;
}

CycloPoly::CycloPoly(const Cyclo& c) {
  if (!c.is_zero()) terms_[Rational(0)] = c;
}

CycloPoly CycloPoly::monomial(const CycloValue& v, const Rational& coeff) {
  CycloPoly p;
  const Cyclo c = Cyclo::root_of_unity(v.u, coeff);
  if (!c.is_zero()) p.terms_[v.r] = c;
  return p;
}

CycloPoly& CycloPoly::operator+=(const CycloPoly& o) {
  for (const auto& [r, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(r, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

CycloPoly& CycloPoly::operator*=(const CycloPoly& o) {
  CycloPoly p;
  for (const auto& [r1, c1] : terms_)
    for (const auto& [r2, c2] : o.terms_) {
      CycloPoly t;
      t.terms_[r1 + r2] = c1 * c2;
      if (!t.terms_.begin()->second.is_zero()) p += t;
    }
  *this = std::move(p);
  return *this;
}

std::optional<QPolynomial> CycloPoly::to_qpolynomial() const {
  QPolynomial p;
  for (const auto& [r, c] : terms_) {
    auto v = c.rational_value();
    if (!v) return std::nullopt;
    p += QPolynomial::monomial(r, *v);
  }
  return p;
}

std::complex<double> CycloPoly::evaluate(double q) const {
  std::complex<double> s = 0;
  for (const auto& [r, c] : terms_) s += c.evaluate() * std::pow(q, r.get_d());
  return s;
}

}  // namespace hpk
