#pragma once

#include <string>
#include <vector>

#include "hpk/cfunction.hpp"

namespace hpk {

// Element s of the compact torus whose R_{s,1} has full rank.
struct UnitaryCandidate {
  TorusPoint s;
  // R_{s,0}: roots a whose R1 multiple is trivial on s (the index set of R_{s,1} as well)
  std::vector<int> rs0;
};

struct UnitaryResult {
  bool rank_deficient = false;
  std::vector<UnitaryCandidate> candidates;  // one per W0-orbit, canonical representatives
};

UnitaryResult unitary_candidates(const RootDatum& d, const std::vector<WeylElement>& W, int jobs = 1);

// Graded labels k_{s,a} for a in R_{s,0}, indexed like d.roots (zero outside R_{s,0}).
std::vector<Rational> graded_labels(const RootDatum& d, const LabelFunction& q, const TorusPoint& s);

// Root subsystem spanned by a set of roots, as a datum on the same lattice.
struct Subsystem {
  RootDatum datum;
  std::vector<int> parent;  // datum root -> parent root
};
Subsystem subsystem(const RootDatum& d, const std::vector<int>& roots);

struct GradedResult {
  std::vector<RatVector> points;  // dominant representatives, sorted
  std::vector<std::string> violations;
};

// Residual points gamma (values on the X basis) of the graded system R with labels k (per root of R).
GradedResult graded_residual_points(const RootDatum& R, const std::vector<Rational>& k, int jobs = 1);

struct ResidualPoint {
  TorusPoint point;  // canonical in its W0-orbit
  int candidate = -1;
};

struct ResidualPointsResult {
  bool rank_deficient = false;
  std::vector<ResidualPoint> points;
  std::vector<std::string> violations;
  std::vector<UnitaryCandidate> candidates;
};

ResidualPointsResult residual_points(const RootDatum& d, const LabelFunction& q, const std::vector<WeylElement>& W,
                                     int jobs = 1);

// Pole and zero sets of a coset on which the roots in R_L are constant with the values at t.
struct PoleZero {
  std::vector<int> poles, zeros;
  int index() const { return static_cast<int>(poles.size()) - static_cast<int>(zeros.size()); }
};
PoleZero pole_zero_sets(const RootDatum& d, const LabelFunction& q, const std::vector<int>& roots_L,
                        const TorusPoint& t);
int index_i(const RootDatum& d, const LabelFunction& q, const std::vector<int>& roots_L, const TorusPoint& t);

using CosetKey = std::pair<IntMatrix, std::vector<CycloValue>>;

struct ResidualCoset {
  std::vector<int> parabolic;  // standard representative, simple root positions
  std::vector<int> roots;      // R_L
  IntMatrix lattice;           // rows: Hermite basis of X ∩ Q R_L
  TorusPoint point;            // r_L, lies in T_L
  TorusPoint quotient_point;   // r_L on the basis of X_L
  int dim = 0;
  int codim = 0;
  std::vector<int> poles, zeros;
  int index = 0;
  Int kL = 1;
  CosetKey key;  // canonical over W0

  const RatVector& center() const { return point.r; }
  TorusPoint center_point() const { return point.split_part(); }
};

// Coset key of L = r T^L described by its lattice rows and base point.
CosetKey coset_key(const IntMatrix& lattice, const TorusPoint& r);
CosetKey canonical_coset_key(const std::vector<WeylElement>& W, const IntMatrix& lattice, const TorusPoint& r);

struct CosetResult {
  std::vector<ResidualCoset> cosets;  // one per W0-orbit
  std::vector<std::string> violations;
  // residual points of every quotient datum used, for the suite
  struct QuotientPoints {
    std::vector<int> parabolic;
    QuotientDatum qd;
    LabelFunction labels;
    std::vector<WeylElement> W;
    ResidualPointsResult points;
  };
  std::vector<QuotientPoints> quotients;
};

CosetResult residual_cosets(const RootDatum& d, const LabelFunction& q, const std::vector<WeylElement>& W,
                            int jobs = 1);

struct CheckEntry {
  std::string check;
  std::string object;
  bool pass = true;
  std::string witness;
};

struct SuiteReport {
  std::string datum;
  std::vector<CheckEntry> entries;
  bool all_pass() const;
  int failures() const;
};

// Theorem checks on an enumeration: index identity, nesting, conjugate point, value group, order two,
// and (advisory) non-intersection of tempered forms.
SuiteReport classification_suite(const RootDatum& d, const std::vector<WeylElement>& W,
                                 const CosetResult& cosets, bool with_nonint = true);

// scaled labels eps*f against split-exponent scaling of the enumeration for f
SuiteReport scaling_check(const RootDatum& d, const LabelFunction& q, const std::vector<WeylElement>& W,
                          const Rational& eps, int jobs = 1);

struct KLReport {
  std::vector<std::pair<TorusPoint, std::vector<Rational>>> real_points;  // dominant point, simple exponents
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};
KLReport kl_real_point_check(const RootDatum& d, const LabelFunction& q, const std::vector<WeylElement>& W,
                             int jobs = 1);

// Real point with prescribed split exponents on the simple roots.
TorusPoint real_point_from_simple(const RootDatum& d, const RatVector& simple_exponents);
TorusPoint steinberg_point(const RootDatum& d, const LabelFunction& q);
TorusPoint trivial_point(const RootDatum& d, const LabelFunction& q);
// dominant W0-representative of a real point (simple exponents >= 0)
TorusPoint dominant_real(const RootDatum& d, const TorusPoint& t);

using WeightSet = std::vector<TorusPoint>;
// Growth tests for the base q > 1.
bool casselman_tempered(const RootDatum& d, const WeightSet& weights);
bool casselman_discrete(const RootDatum& d, const WeightSet& weights);

std::string cosets_to_json(const RootDatum& d, const std::vector<ResidualCoset>& cosets);
std::string suite_to_json(const SuiteReport& r);

}  // namespace hpk
