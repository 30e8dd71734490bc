#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hpk/torus.hpp"

namespace hpk {

// constant * prod (v - 1) / prod (w - 1), each v, w = e^{2 pi i u} q^r.
// Factors that vanish identically in q are dropped and counted in zero_order
// (numerator zeros minus denominator zeros).
struct FactorRatio {
  CycloValue constant;  // unit times a power of q
  std::vector<CycloValue> num, den;
  int zero_order = 0;

  void mul_num(const CycloValue& v);       // * (v - 1)
  void mul_den(const CycloValue& v);       // / (v - 1)
  void mul_num_plus(const CycloValue& v);  // * (v + 1)
  void mul_den_plus(const CycloValue& v);  // / (v + 1)
  void mul_monomial(const CycloValue& v) { constant = constant * v; }
  FactorRatio& operator*=(const FactorRatio& o);
  FactorRatio inverse() const;

  CycloPoly numerator_poly() const;
  CycloPoly denominator_poly() const;
  // Value with the vanishing factors removed, as a rational function of q.
  // nullopt when the value is not in Q(q^{1/D}).
  std::optional<QRational> to_qrational() const;
  // same, evaluated numerically; ignores zero_order
  std::complex<double> evaluate(double q) const;
};

// c_alpha(t) for the R1 direction of root a (a doubled means the R1 root is 2a).
FactorRatio c_alpha(const RootDatum& d, const LabelFunction& q, int a, const TorusPoint& t);
// Delta(t) = prod_{alpha in R1,+} (1 - theta_{-alpha})(t)
FactorRatio weyl_denominator(const RootDatum& d, const TorusPoint& t);
// c(t) = prod over R1,+ of c_alpha(t)
FactorRatio c_function(const RootDatum& d, const LabelFunction& q, const TorusPoint& t);
// 1 / (c(t) c(t^{-1}))
FactorRatio omega_kernel(const RootDatum& d, const LabelFunction& q, const TorusPoint& t);

// Symbolic evaluation of a root on a torus point: alpha(t) for R1 roots, i.e. 2a(t) for doubled a.
CycloValue r1_value(const RootDatum& d, int a, const TorusPoint& t);

}  // namespace hpk
