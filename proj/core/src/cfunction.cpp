#include "hpk/cfunction.hpp"

#include <stdexcept>

namespace hpk {

namespace {

const Rational kHalf(1, 2);

}  // namespace

void FactorRatio::mul_num(const CycloValue& v) {
  if (v.is_one())
    ++zero_order;
  else
    num.push_back(v);
}

void FactorRatio::mul_den(const CycloValue& v) {
  if (v.is_one())
    --zero_order;
  else
    den.push_back(v);
}

// v + 1 = -(e^{i pi} v - 1); a dropped factor takes its sign with it
void FactorRatio::mul_num_plus(const CycloValue& v) {
  const CycloValue w = v * CycloValue(kHalf, 0);
  if (!w.is_one()) constant = constant * CycloValue(kHalf, 0);
  mul_num(w);
}

void FactorRatio::mul_den_plus(const CycloValue& v) {
  const CycloValue w = v * CycloValue(kHalf, 0);
  if (!w.is_one()) constant = constant * CycloValue(kHalf, 0);
  mul_den(w);
}

FactorRatio& FactorRatio::operator*=(const FactorRatio& o) {
  constant = constant * o.constant;
  num.insert(num.end(), o.num.begin(), o.num.end());
  den.insert(den.end(), o.den.begin(), o.den.end());
  zero_order += o.zero_order;
  return *this;
}

FactorRatio FactorRatio::inverse() const {
  FactorRatio r;
  r.constant = constant.inverse();
  r.num = den;
  r.den = num;
  r.zero_order = -zero_order;
  return r;
}

namespace {

CycloPoly expand(const std::vector<CycloValue>& fs) {
  CycloPoly p{Cyclo(Rational(1))};
  for (const auto& v : fs) p *= CycloPoly::monomial(v) + CycloPoly{Cyclo(Rational(-1))};
  return p;
}

}  // namespace

CycloPoly FactorRatio::numerator_poly() const { return CycloPoly::monomial(constant) * expand(num); }

CycloPoly FactorRatio::denominator_poly() const { return expand(den); }

std::optional<QRational> FactorRatio::to_qrational() const {
  const auto n = numerator_poly().to_qpolynomial();
  const auto d = denominator_poly().to_qpolynomial();
  if (!n || !d) return std::nullopt;
  return QRational(*n, *d);
}

std::complex<double> FactorRatio::evaluate(double q) const {
  std::complex<double> v = constant.evaluate(q);
  for (const auto& x : num) v *= x.evaluate(q) - 1.0;
  for (const auto& x : den) v /= x.evaluate(q) - 1.0;
  return v;
}

CycloValue r1_value(const RootDatum& d, int a, const TorusPoint& t) {
  const CycloValue v = t.eval(d.roots[a]);
  return d.doubled[a] ? v * v : v;
}

FactorRatio c_alpha(const RootDatum& d, const LabelFunction& q, int a, const TorusPoint& t) {
  FactorRatio c;
  const CycloValue x = t.eval(d.roots[a]).inverse();  // theta_{-a}(t)
  if (!d.doubled[a]) {
    // (1 - q^{-f} x) / (1 - x); the two sign flips cancel
    c.mul_num(x * CycloValue(0, -q.f[a]));
    c.mul_den(x);
    return c;
  }
  // (1 + q^{-g/2} x)(1 - q^{-g/2-f} x) / (1 - x^2); sign flips cancel as above
  c.mul_num_plus(x * CycloValue(0, -q.g[a] / 2));
  c.mul_num(x * CycloValue(0, -q.g[a] / 2 - q.f[a]));
  c.mul_den(x * x);
  return c;
}

FactorRatio weyl_denominator(const RootDatum& d, const TorusPoint& t) {
  FactorRatio D;
  for (int a = 0; a < d.npos; ++a) {
    // 1 - theta_{-alpha} = -(theta_{-alpha} - 1)
    D.constant = D.constant * CycloValue(kHalf, 0);
    D.mul_num(r1_value(d, a, t).inverse());
  }
  return D;
}

FactorRatio c_function(const RootDatum& d, const LabelFunction& q, const TorusPoint& t) {
  FactorRatio c;
  for (int a = 0; a < d.npos; ++a) c *= c_alpha(d, q, a, t);
  return c;
}

FactorRatio omega_kernel(const RootDatum& d, const LabelFunction& q, const TorusPoint& t) {
  FactorRatio c;
  for (int a = 0; a < d.nroots(); ++a) c *= c_alpha(d, q, a, t);
  return c.inverse();
}

}  // namespace hpk
