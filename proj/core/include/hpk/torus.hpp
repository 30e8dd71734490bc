#pragma once

#include <string>

#include "hpk/cyclotomic.hpp"
#include "hpk/root_datum.hpp"

namespace hpk {

// Point of T = Hom(X, C^*) given on the chosen basis of X: x_i(t) = e^{2 pi i u_i} q^{r_i}.
struct TorusPoint {
  RatVector u;  // unitary exponents, kept in [0,1)
  RatVector r;  // split exponents

  TorusPoint() = default;
  TorusPoint(RatVector u_, RatVector r_);
  static TorusPoint identity(int dim) { return TorusPoint(RatVector(dim, Rational(0)), RatVector(dim, Rational(0))); }

  int dim() const { return static_cast<int>(u.size()); }
  CycloValue eval(const IntVector& x) const;
  TorusPoint operator*(const TorusPoint& o) const;
  TorusPoint inverse() const;
  TorusPoint unitary_part() const { return TorusPoint(u, RatVector(u.size(), Rational(0))); }
  TorusPoint split_part() const { return TorusPoint(RatVector(u.size(), Rational(0)), r); }
  TorusPoint scale_split(const Rational& e) const;
  bool is_real() const;  // unitary part trivial
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend auto operator<=>(const TorusPoint&, const TorusPoint&) = default;
  std::string to_text() const;
};

// w t, with x(w t) = (w^{-1} x)(t)
TorusPoint act(const WeylElement& w, const TorusPoint& t);
// Lexicographically minimal (u, r) over the W0-orbit, with the minimizing element index.
std::pair<TorusPoint, int> canonical_in_orbit(const std::vector<WeylElement>& W, const TorusPoint& t);
// Values alpha(t) on the simple roots.
std::vector<CycloValue> simple_values(const RootDatum& d, const TorusPoint& t);
std::string values_text(const std::vector<CycloValue>& v);

}  // namespace hpk
