#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hpk/residual.hpp"
#include "hpk/table.hpp"

namespace hpk {

struct DensityValue {
  FactorRatio factors;
  std::optional<QRational> rational;  // set when the value lies in Q(q^{1/D})

  std::complex<double> evaluate(double q) const { return factors.evaluate(q); }
  std::string to_text() const;
};

// q(w0) prod'(alpha(t) - 1) / prod'(denominators) over R1 at a residual point; vanishing factors omitted.
// Throws std::invalid_argument when r is not residual.
DensityValue m_point(const RootDatum& d, const LabelFunction& q, const TorusPoint& r);

// m_L at a point t of L (numeric q); factors on R_L vanishing on L are omitted.
std::complex<double> m_L(const RootDatum& d, const LabelFunction& q, const ResidualCoset& L, const TorusPoint& t,
                         double qnum);

struct UpperDensity {
  std::complex<double> value;  // q(w^L)^{-1} prod over R1 \ R_{L,1} of c_alpha(t)^{-1}
  double modulus_form = 0;     // the same through |.|^2 factors over the positive roots
  bool singular = false;
};
UpperDensity m_upperL(const RootDatum& d, const LabelFunction& q, const ResidualCoset& L, const TorusPoint& t,
                      double qnum);

// random point of the tempered form r_L T^L_u, angles with the given denominator
TorusPoint sample_tempered(const ResidualCoset& L, unsigned long long seed, long denominator = 10007);

struct PoincareProduct {
  bool valid = false;
  std::string reason;
  QRational value;  // (-1)^n |X:Q| / m_{r_St}(r_St)
};
PoincareProduct poincare_product(const RootDatum& d, const LabelFunction& q);

struct PoincareSum {
  double value = 0;
  double tail_bound = 0;
  long long elements = 0;
};
// sum of q(w)^{-1} over the extended affine Weyl group, l(w) <= max_length
PoincareSum poincare_truncated(const RootDatum& d, const LabelFunction& q, double qnum, int max_length);

std::vector<int> weyl_exponents(const RootDatum& d);
// prod (q^{m_i+1} - 1) / ((q^{m_i} - 1)(q - 1)) over the exponents
QRational equal_label_poincare(const RootDatum& d);

// Mass of the Steinberg orbit; rejects points outside that orbit and non-regular ones.
QRational plancherel_point_mass(const RootDatum& d, const LabelFunction& q, const TorusPoint& r,
                                const std::vector<WeylElement>& W);

struct FormalDimensionReport {
  int n = 0;
  TorusPoint point;  // simple values (q, ..., q, 1, q)
  QRational density;
  QRational assembled;
  QRational reference;
  int sign = 1;  // assembled = sign * reference
  bool match = false;
  Rational numeric_q;
  Rational assembled_at_q, reference_at_q;
  bool numeric_match = false;
};
// closed form of the subregular formal dimension for C_n
QRational subregular_C_reference(int n);
FormalDimensionReport fdim_subregular_C(int n, const Rational& numeric_q = 4);

std::string density_table(const RootDatum& d, const LabelFunction& q, const CosetResult& cosets, double qnum,
                          TableFormat fmt);

}  // namespace hpk
