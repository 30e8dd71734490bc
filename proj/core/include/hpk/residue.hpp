#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hpk/residual.hpp"

namespace hpk {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Factor (d^{-1} x(t) - 1) with x = roots[root].
struct DivisorFactor {
  int root = -1;
  CycloValue d;
  friend bool operator==(const DivisorFactor&, const DivisorFactor&) = default;
};

// constant * prod_zeros (d^{-1} x(t) - 1) / prod_poles (d^{-1} x(t) - 1), constant = sign * q^{q_exponent}
struct DivisorSpec {
  int sign = 1;
  Rational q_exponent = 0;
  std::vector<DivisorFactor> poles, zeros;
};

// omega = 1 / (q(w0) c(t) c(t^{-1})) with pole/zero pairs on the same hyperplane cancelled
DivisorSpec omega_divisor(const RootDatum& d, const LabelFunction& q);
// z are the values of the X basis on t
Complex evaluate_divisor(const RootDatum& d, const DivisorSpec& D, const ComplexVector& z, double qnum);

struct ContourSpec {
  RatVector base;      // split exponents of t0
  int resolution = 0;  // nodes per circle; 0 picks 4096 in rank 1, 512 x 1024 in rank 2
};

// base point with alpha(t0) below q_{alpha^v}^{-1} q_{alpha^v/2}^{-1/2} on every simple root
RatVector default_base_point(const RootDatum& d, const LabelFunction& q, int variant = 0);

// Normalized integral of f over the compact torus with the given radii (rank 1 or 2).
Complex torus_integral(const std::function<Complex(const ComplexVector&)>& f, const std::vector<double>& radii,
                       int resolution, int inner_resolution = 0, int jobs = 1);

struct LocalMass {
  std::string kind;    // "point" or "coset"
  int orbit = -1;      // index into the residual coset list; -1 if unattributed
  std::string center;  // split exponents
  std::string label;   // parabolic and values
  Complex value;
};

struct LocalMassReport {
  Complex global;
  Complex continuous;
  std::vector<LocalMass> masses;  // W0-symmetrized, one per orbit
  double discrepancy = 0;
  double tolerance = 0;
  int resolution = 0;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty() && discrepancy < tolerance; }
  double mass_total() const;
};

LocalMassReport shift_and_collect(const RootDatum& d, const LabelFunction& q, double qnum,
                                  const ContourSpec& contour = {}, int jobs = 0);

struct VanishingReport {
  bool vanishes = false;
  double max_abs = 0;
};
// Inner residue of omega around {x(t) = value} (rank 2) or around the point with x(t) = value (rank 1),
// x a root, sampled along the cycle.
VanishingReport vanishing_cycle_check(const RootDatum& d, const LabelFunction& q, double qnum, int root,
                                      const CycloValue& value, double tol = 1e-8);

std::string mass_report_to_json(const LocalMassReport& r);

}  // namespace hpk
