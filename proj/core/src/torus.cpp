#include "hpk/torus.hpp"

#include <stdexcept>

namespace hpk {

TorusPoint::TorusPoint(RatVector u_, RatVector r_) : u(std::move(u_)), r(std::move(r_)) {
  if (u.size() != r.size()) throw std::invalid_argument("torus point parts differ in length");
  for (auto& x : u) x = frac_part(x);
}

CycloValue TorusPoint::eval(const IntVector& x) const { return CycloValue(dot(x, u), dot(x, r)); }

TorusPoint TorusPoint::operator*(const TorusPoint& o) const {
  RatVector a(u.size()), b(u.size());
  for (size_t i = 0; i < u.size(); ++i) a[i] = u[i] + o.u[i], b[i] = r[i] + o.r[i];
  return TorusPoint(a, b);
}

TorusPoint TorusPoint::inverse() const {
  RatVector a(u.size()), b(u.size());
  for (size_t i = 0; i < u.size(); ++i) a[i] = -u[i], b[i] = -r[i];
  return TorusPoint(a, b);
}

TorusPoint TorusPoint::scale_split(const Rational& e) const {
  RatVector b = r;
  for (auto& x : b) x *= e;
  return TorusPoint(u, b);
}

bool TorusPoint::is_real() const {
  for (const auto& x : u)
    if (x != 0) return false;
  return true;
}

std::string TorusPoint::to_text() const { return "u=" + to_string(u) + " r=" + to_string(r); }

TorusPoint act(const WeylElement& w, const TorusPoint& t) {
  const int n = t.dim();
  RatVector a(n, Rational(0)), b(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Int m = w.inv_transpose(i, j);
      if (m == 0) continue;
      a[i] += rat(m) * t.u[j];
      b[i] += rat(m) * t.r[j];
    }
  return TorusPoint(a, b);
}

std::pair<TorusPoint, int> canonical_in_orbit(const std::vector<WeylElement>& W, const TorusPoint& t) {
  TorusPoint best = t;
  int idx = 0;
  for (size_t k = 0; k < W.size(); ++k) {
    TorusPoint s = act(W[k], t);
    if (s < best) best = std::move(s), idx = static_cast<int>(k);
  }
  return {best, idx};
}

std::vector<CycloValue> simple_values(const RootDatum& d, const TorusPoint& t) {
  std::vector<CycloValue> v;
  for (int i = 0; i < d.rank; ++i) v.push_back(t.eval(d.roots[i]));
  return v;
}

std::string values_text(const std::vector<CycloValue>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_text();
  return s + ")";
}

}  // namespace hpk
