#include "hpk/residue.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hpk/parallel.hpp"
#include "json.hpp"

namespace hpk {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Complex ipow(Complex z, Int e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  Complex r = 1.0;
  for (Int k = 0; k < e; ++k) r *= z;
  return r;
}

CycloValue cpow(const CycloValue& v, Int e) { return CycloValue(v.u * rat(e), v.r * rat(e)); }

Complex pairwise_sum(const Complex* v, size_t n) {
  if (n <= 8) {
    Complex s = 0.0;
    for (size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

Complex node(double logr, int k, int n) { return std::polar(std::exp(logr), kTwoPi * k / n); }

// Coordinates on a basis of X in which every root has an entry +-1 (rank 2),
// so that each pole hyperplane is a graph over the other coordinate.
struct Frame {
  IntMatrix U;     // columns: new basis in old coordinates
  IntMatrix Uinv;  // old coordinates of new basis duals
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
};

Frame make_frame(const RootDatum& d) {
  const int n = d.dim;
  auto build = [&](const IntMatrix& U) {
    Frame F;
    F.U = U;
    F.Uinv = inverse_unimodular(U);
    const IntMatrix Ut = U.transpose();
    for (int a = 0; a < d.nroots(); ++a) {
      F.roots.push_back(F.Uinv.apply(d.roots[a]));
      F.coroots.push_back(Ut.apply(d.coroots[a]));
    }
    return F;
  };
  if (n == 1) return build(IntMatrix::identity(1));
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      for (Int c = -2; c <= 2; ++c)
        for (Int e = -2; e <= 2; ++e) {
          if (std::abs(a * e - b * c) != 1) continue;
          IntMatrix U(2, 2);
          U(0, 0) = a, U(0, 1) = b, U(1, 0) = c, U(1, 1) = e;
          Frame F = build(U);
          bool ok = true;
          for (const auto& x : F.roots) ok = ok && (std::abs(x[0]) == 1 || std::abs(x[1]) == 1);
          if (ok) return F;
        }
  throw std::invalid_argument("contour shifts need a basis of X where every root has a coordinate +-1");
}

// old-coordinate point from exponents on the new basis
TorusPoint to_old(const Frame& F, const std::vector<CycloValue>& z) {
  const int n = static_cast<int>(z.size());
  RatVector u(n, Rational(0)), r(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Int m = F.Uinv(j, i);
      if (m == 0) continue;
      u[i] += rat(m) * z[j].u;
      r[i] += rat(m) * z[j].r;
    }
  return TorusPoint(u, r);
}

struct Kernel {
  const Frame* F = nullptr;
  DivisorSpec D;
  double qnum = 0;
  Complex constant;
  std::vector<Complex> pole_d, zero_d;

  Kernel(const Frame& frame, DivisorSpec spec, double q) : F(&frame), D(std::move(spec)), qnum(q) {
    constant = double(D.sign) * std::pow(q, D.q_exponent.get_d());
    for (const auto& f : D.poles) pole_d.push_back(1.0 / f.d.evaluate(q));
    for (const auto& f : D.zeros) zero_d.push_back(1.0 / f.d.evaluate(q));
  }

  Complex x_of(int root, const ComplexVector& z) const {
    Complex v = 1.0;
    const auto& x = F->roots[root];
    for (size_t j = 0; j < z.size(); ++j) v *= ipow(z[j], x[j]);
    return v;
  }

  // omega with pole factor `skip` removed
  Complex operator()(const ComplexVector& z, int skip = -1) const {
    Complex num = constant, den = 1.0;
    for (size_t k = 0; k < D.zeros.size(); ++k) num *= zero_d[k] * x_of(D.zeros[k].root, z) - 1.0;
    for (size_t k = 0; k < D.poles.size(); ++k)
      if (static_cast<int>(k) != skip) den *= pole_d[k] * x_of(D.poles[k].root, z) - 1.0;
    return num / den;
  }
};

struct PointMass {
  std::vector<CycloValue> z;  // exact, new coordinates
  Complex value;
};

// Function of one coordinate w along a slice; poles given exactly.
struct Slice {
  std::function<Complex(Complex)> f;
  std::vector<CycloValue> poles;
  std::function<std::vector<CycloValue>(const CycloValue&)> lift;  // full point from w
};

// roots w of c w^e = 1
void add_roots(std::vector<CycloValue>& out, const CycloValue& c, Int e) {
  if (e == 0) return;
  const Int m = std::abs(e);
  for (Int k = 0; k < m; ++k) {
    CycloValue w(Rational(-c.u + rat(k)) / rat(e), Rational(-c.r / rat(e)));
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
}

using Restricted = std::vector<std::pair<CycloValue, Int>>;  // factors c w^e - 1

// points where the pole factors outnumber the zero factors
std::vector<CycloValue> net_poles(const Restricted& poles, const Restricted& zeros) {
  std::vector<CycloValue> cand, out;
  for (const auto& [c, e] : poles) add_roots(cand, c, e);
  auto vanish = [](const Restricted& fs, const CycloValue& w) {
    int k = 0;
    for (const auto& [c, e] : fs)
      if ((c * cpow(w, e)).is_one()) ++k;
    return k;
  };
  for (const auto& w : cand)
    if (vanish(poles, w) > vanish(zeros, w)) out.push_back(w);
  return out;
}

// I(start) = I(end) + sum of the returned masses; the integral at `end` goes to *at_end.
std::vector<PointMass> shift_slice(const Slice& s, const Rational& start, const Rational& end, double qnum,
                                   int nodes, Complex* at_end) {
  const double lq = std::log(qnum);
  for (const auto& p : s.poles)
    if (p.r == end || p.r == start) throw std::domain_error("pole " + p.to_text() + " on the " + (p.r == end ? "final" : "initial") + " slice contour");
  {
    std::vector<Complex> v(nodes);
    // half-step offset keeps nodes off removable singularities at roots of unity
    for (int k = 0; k < nodes; ++k) v[k] = s.f(std::polar(std::exp(end.get_d() * lq), kTwoPi * (k + 0.5) / nodes));
    *at_end = pairwise_sum(v.data(), v.size()) / double(nodes);
  }
  std::vector<PointMass> out;
  if (start == end) return out;
  const Rational lo = std::min(start, end), hi = std::max(start, end);
  const double sigma = start < end ? -1.0 : 1.0;
  std::vector<Complex> all;
  for (const auto& p : s.poles) all.push_back(p.evaluate(qnum));
  for (size_t i = 0; i < s.poles.size(); ++i) {
    const auto& p = s.poles[i];
    if (!(lo < p.r && p.r < hi)) continue;
    const Complex c = all[i];
    double eps = 0.1 * std::abs(c);
    for (size_t j = 0; j < all.size(); ++j)
      if (j != i) eps = std::min(eps, 0.25 * std::abs(all[j] - c));
    for (const Rational& b : {lo, hi}) eps = std::min(eps, 0.25 * std::abs(std::abs(c) - std::exp(b.get_d() * lq)));
    const int m = 256;
    std::vector<Complex> v(m);
    for (int k = 0; k < m; ++k) {
      const Complex e = std::polar(eps, kTwoPi * k / m);
      v[k] = s.f(c + e) / (c + e) * e;
    }
    out.push_back({s.lift(p), sigma * pairwise_sum(v.data(), v.size()) / double(m)});
  }
  return out;
}

std::string rat_text(const RatVector& v) { return to_string(v); }

}  // namespace

DivisorSpec omega_divisor(const RootDatum& d, const LabelFunction& q) {
  DivisorSpec D;
  D.q_exponent = -q_of_longest(d, q);
  std::vector<DivisorFactor> poles, zeros;
  for (int a = 0; a < d.nroots(); ++a) {
    const int x = d.neg[a];  // theta_{-a}
    // each (1 - v y) becomes -(v y - 1); the count of flips is even per root
    if (!d.doubled[a]) {
      zeros.push_back({x, CycloValue(0, 0)});
      poles.push_back({x, CycloValue(0, q.f[a])});
      continue;
    }
    zeros.push_back({x, CycloValue(0, 0)});
    zeros.push_back({x, CycloValue(Rational(1, 2), 0)});
    poles.push_back({x, CycloValue(Rational(1, 2), q.g[a] / 2)});
    poles.push_back({x, CycloValue(0, q.g[a] / 2 + q.f[a])});
  }
  for (auto& p : poles) {
    auto it = std::find(zeros.begin(), zeros.end(), p);
    if (it != zeros.end()) {
      zeros.erase(it);
      continue;
    }
    D.poles.push_back(p);
  }
  D.zeros = zeros;
  return D;
}

Complex evaluate_divisor(const RootDatum& d, const DivisorSpec& D, const ComplexVector& z, double qnum) {
  Frame F;
  F.U = F.Uinv = IntMatrix::identity(d.dim);
  F.roots = d.roots;
  F.coroots = d.coroots;
  return Kernel(F, D, qnum)(z);
}

RatVector default_base_point(const RootDatum& d, const LabelFunction& q, int variant) {
  const int n = d.rank;
  std::vector<RatVector> rows;
  RatVector b;
  for (int i = 0; i < n; ++i) {
    rows.push_back(to_rat(d.roots[i]));
    const Rational g = d.doubled[i] ? q.g[i] / 2 : Rational(0);
    b.push_back(-(q.f[i] + g) - rat(3, 10) - rat(i + 1, 17) - rat(variant, 5));
  }
  const auto sol = solve_affine(RatMatrix::from_rows(rows, d.dim), b);
  if (sol.kind != AffineSolution::Kind::Unique) throw std::invalid_argument("base point needs a semisimple datum");
  return sol.point;
}

Complex torus_integral(const std::function<Complex(const ComplexVector&)>& f, const std::vector<double>& radii,
                       int resolution, int inner_resolution, int jobs) {
  if (radii.size() == 1) {
    std::vector<Complex> v(resolution);
    parallel_chunks(v.size(), resolve_jobs(jobs), [&](int, size_t b, size_t e) {
      for (size_t k = b; k < e; ++k) v[k] = f({node(std::log(radii[0]), static_cast<int>(k), resolution)});
    });
    return pairwise_sum(v.data(), v.size()) / double(resolution);
  }
  if (radii.size() != 2) throw std::invalid_argument("torus integrals are implemented in rank 1 and 2");
  const int inner = inner_resolution > 0 ? inner_resolution : resolution;
  std::vector<Complex> outer(resolution);
  parallel_chunks(outer.size(), resolve_jobs(jobs), [&](int, size_t b, size_t e) {
    std::vector<Complex> v(inner);
    ComplexVector z(2);
    for (size_t j = b; j < e; ++j) {
      z[1] = node(std::log(radii[1]), static_cast<int>(j), resolution);
      for (int k = 0; k < inner; ++k) {
        z[0] = node(std::log(radii[0]), k, inner);
        v[k] = f(z);
      }
      outer[j] = pairwise_sum(v.data(), v.size()) / double(inner);
    }
  });
  return pairwise_sum(outer.data(), outer.size()) / double(resolution);
}

double LocalMassReport::mass_total() const {
  double s = 0;
  for (const auto& m : masses) s += m.value.real();
  return s;
}

LocalMassReport shift_and_collect(const RootDatum& d, const LabelFunction& q, double qnum, const ContourSpec& contour,
                                  int jobs) {
  if (!d.semisimple() || d.rank > 2 || d.rank < 1) throw std::invalid_argument("contour shifts need rank 1 or 2");
  const int n = d.rank;
  const Frame F = make_frame(d);
  const Kernel K(F, omega_divisor(d, q), qnum);
  const auto& D = K.D;
  const double lq = std::log(qnum);

  LocalMassReport rep;
  rep.resolution = contour.resolution > 0 ? contour.resolution : (n == 1 ? 4096 : 512);
  rep.tolerance = n == 1 ? 1e-8 : 1e-6;
  const RatVector base0 = contour.base.empty() ? default_base_point(d, q) : contour.base;
  // log_q radii on the new basis
  RatVector R(n, Rational(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) R[j] += rat(F.U(i, j)) * base0[i];

  auto on_contour = [&](const RatVector& ell) {
    for (const auto& p : D.poles) {
      Rational v = 0;
      for (int j = 0; j < n; ++j) v += rat(F.roots[p.root][j]) * ell[j];
      if (v == p.d.r) return true;
    }
    return false;
  };
  auto radii = [&](const RatVector& ell) {
    std::vector<double> r;
    for (const auto& e : ell) r.push_back(std::exp(e.get_d() * lq));
    return r;
  };
  const RatVector zero(n, Rational(0));
  if (on_contour(R) || on_contour(zero)) throw std::domain_error("base point or unit torus meets a pole");

  auto omega = [&](const ComplexVector& z) { return K(z); };
  const int inner = n == 2 ? 2 * rep.resolution : rep.resolution;
  rep.global = torus_integral(omega, radii(R), rep.resolution, inner, jobs);
  rep.continuous = torus_integral(omega, radii(zero), rep.resolution, inner, jobs);

  const std::vector<WeylElement> W = weyl_elements(d);
  const CosetResult cr = residual_cosets(d, q, W, jobs);
  std::map<CosetKey, int> orbit_of;
  for (size_t k = 0; k < cr.cosets.size(); ++k) orbit_of[cr.cosets[k].key] = static_cast<int>(k);
  std::map<int, Complex> by_orbit;
  Complex unattributed = 0.0;
  const IntMatrix full = IntMatrix::identity(d.dim);

  auto attribute_point = [&](const PointMass& pm) {
    const auto key = canonical_coset_key(W, full, to_old(F, pm.z));
    auto it = orbit_of.find(key);
    if (it == orbit_of.end()) unattributed += pm.value;
    else by_orbit[it->second] += pm.value;
  };

  if (n == 1) {
    Slice s;
    s.f = [&](Complex w) { return K({w}); };
    Restricted rp, rz;
    for (const auto& p : D.poles) rp.push_back({p.d.inverse(), F.roots[p.root][0]});
    for (const auto& z : D.zeros) rz.push_back({z.d.inverse(), F.roots[z.root][0]});
    s.poles = net_poles(rp, rz);
    s.lift = [](const CycloValue& w) { return std::vector<CycloValue>{w}; };
    Complex end;
    for (const auto& pm : shift_slice(s, R[0], Rational(0), qnum, rep.resolution, &end)) attribute_point(pm);
  } else {
    // straight path in log radii from R to 0; crossing {x(t) = d} happens at (d.r / x.R) R
    struct Term {
      int factor;
      int param;  // coordinate kept as parameter on the hyperplane
      Rational start;
      Complex sign;
    };
    std::vector<Term> terms;
    for (size_t i = 0; i < D.poles.size(); ++i)
      for (size_t j = i + 1; j < D.poles.size(); ++j)
        if (D.poles[i].root == D.poles[j].root && D.poles[i].d == D.poles[j].d)
          throw std::domain_error("repeated pole hyperplane");
    for (size_t m = 0; m < D.poles.size(); ++m) {
      const auto& x = F.roots[D.poles[m].root];
      const Rational xr = rat(x[0]) * R[0] + rat(x[1]) * R[1];
      const Rational dr = D.poles[m].d.r;
      if (xr == 0 || sgn(dr) != sgn(xr) || !(abs(dr) < abs(xr))) continue;
      const int moving = std::abs(x[0]) == 1 ? 0 : 1;
      if (std::abs(x[moving]) != 1) throw std::invalid_argument("pole hyperplane is not a graph over a coordinate");
      const int param = 1 - moving;
      terms.push_back({static_cast<int>(m), param, dr / xr * R[param], Complex(sgn(xr), 0)});
    }

    for (const auto& t : terms) {
      const auto& fac = D.poles[t.factor];
      const IntVector& x = F.roots[fac.root];
      const int moving = 1 - t.param;
      const Int xm = x[moving], xp = x[t.param];
      // on the hyperplane: z_moving = d^{xm} w^{-xm xp}
      const CycloValue dm = cpow(fac.d, xm);
      const Complex dmn = dm.evaluate(qnum);
      Slice s;
      s.f = [&, dmn, xm, xp, t](Complex w) {
        ComplexVector z(2);
        z[t.param] = w;
        z[moving] = dmn * ipow(w, -xm * xp);
        return t.sign * K(z, t.factor);
      };
      auto restricted = [&](const DivisorFactor& g, CycloValue* c, Int* e) {
        const IntVector& y = F.roots[g.root];
        *c = g.d.inverse() * cpow(dm, y[moving]);
        *e = y[t.param] - y[moving] * xm * xp;
      };
      Restricted rp, rz;
      for (size_t m = 0; m < D.poles.size(); ++m) {
        if (static_cast<int>(m) == t.factor) continue;
        CycloValue c;
        Int e;
        restricted(D.poles[m], &c, &e);
        if (e == 0 && c.is_one()) throw std::domain_error("pole hyperplanes coincide");
        rp.push_back({c, e});
      }
      for (const auto& zf : D.zeros) {
        CycloValue c;
        Int e;
        restricted(zf, &c, &e);
        if (e == 0 && c.is_one()) throw std::domain_error("zero hyperplane contains a pole hyperplane");
        rz.push_back({c, e});
      }
      s.poles = net_poles(rp, rz);
      s.lift = [&, dm, xm, xp, t](const CycloValue& w) {
        std::vector<CycloValue> z(2);
        z[t.param] = w;
        z[moving] = dm * cpow(w, -xm * xp);
        return z;
      };
      // center of the hyperplane: (d.r / 2) times the coroot of x
      const Rational lambda = fac.d.r / 2;
      const Rational target = lambda * rat(F.coroots[fac.root][t.param]);
      Complex rest;
      for (const auto& pm : shift_slice(s, t.start, target, qnum, 4096, &rest)) attribute_point(pm);
      // the remaining integral belongs to the orbit of the hyperplane
      const IntMatrix lat = hermite_rows(saturate_rows(IntMatrix::from_rows({d.roots[fac.root]}, d.dim)));
      RatVector u(d.dim), r(d.dim);
      for (int i = 0; i < d.dim; ++i) {
        u[i] = fac.d.u / 2 * rat(d.coroots[fac.root][i]);
        r[i] = fac.d.r / 2 * rat(d.coroots[fac.root][i]);
      }
      auto it = orbit_of.find(canonical_coset_key(W, lat, TorusPoint(u, r)));
      if (it == orbit_of.end()) unattributed += rest;
      else by_orbit[it->second] += rest;
    }
  }

  Complex total = rep.continuous;
  for (const auto& [k, v] : by_orbit) {
    const auto& L = cr.cosets[k];
    LocalMass lm;
    lm.kind = L.dim == 0 ? "point" : "coset";
    lm.orbit = k;
    lm.center = rat_text(L.center());
    lm.label = values_text(L.key.second);
    lm.value = v;
    rep.masses.push_back(lm);
    total += v;
  }
  if (std::abs(unattributed) > rep.tolerance) {
    std::ostringstream os;
    os << "mass " << unattributed.real() << " at non-residual centers";
    rep.errors.push_back(os.str());
  }
  total += unattributed;
  rep.discrepancy = std::abs(rep.global - total);
  return rep;
}

VanishingReport vanishing_cycle_check(const RootDatum& d, const LabelFunction& q, double qnum, int root,
                                      const CycloValue& value, double tol) {
  if (!d.semisimple() || d.rank > 2) throw std::invalid_argument("vanishing check needs rank 1 or 2");
  const Frame F = make_frame(d);
  const Kernel K(F, omega_divisor(d, q), qnum);
  const IntVector& x = F.roots[root];
  VanishingReport rep;
  const int m = 256;
  const Complex val = value.evaluate(qnum);
  if (d.rank == 1) {
    // points with x(t) = value; x = e * coordinate
    std::vector<CycloValue> pts;
    add_roots(pts, value.inverse(), x[0]);
    for (const auto& p : pts) {
      const Complex c = p.evaluate(qnum);
      const double eps = 1e-3 * std::abs(c);
      std::vector<Complex> v(m);
      for (int k = 0; k < m; ++k) {
        const Complex e = std::polar(eps, kTwoPi * k / m);
        v[k] = K({c + e}) / (c + e) * e;
      }
      rep.max_abs = std::max(rep.max_abs, std::abs(pairwise_sum(v.data(), v.size()) / double(m)));
    }
  } else {
    const int moving = x[0] != 0 ? 0 : 1, param = 1 - moving;
    const Int xm = x[moving], xp = x[param];
    for (int j = 0; j < 16; ++j) {
      const Complex w = std::polar(1.0, kTwoPi * (j + 0.37) / 16);
      const Complex c = ipow(val, xm) * ipow(w, -xm * xp);
      const double eps = 1e-3 * std::abs(c);
      std::vector<Complex> v(m);
      for (int k = 0; k < m; ++k) {
        const Complex e = std::polar(eps, kTwoPi * k / m);
        ComplexVector z(2);
        z[param] = w;
        z[moving] = c + e;
        v[k] = K(z) / (c + e) * e;
      }
      rep.max_abs = std::max(rep.max_abs, std::abs(pairwise_sum(v.data(), v.size()) / double(m)));
    }
  }
  rep.vanishes = rep.max_abs < tol;
  return rep;
}

std::string mass_report_to_json(const LocalMassReport& r) {
  nlohmann::ordered_json j;
  auto cplx = [](Complex c) { return nlohmann::ordered_json::array({c.real(), c.imag()}); };
  j["global"] = cplx(r.global);
  j["continuous"] = cplx(r.continuous);
  j["masses"] = nlohmann::ordered_json::array();
  for (const auto& m : r.masses)
    j["masses"].push_back({{"kind", m.kind}, {"orbit", m.orbit}, {"center", m.center}, {"values", m.label},
                           {"mass", cplx(m.value)}});
  j["discrepancy"] = r.discrepancy;
  j["tolerance"] = r.tolerance;
  j["resolution"] = r.resolution;
  j["errors"] = r.errors;
  j["ok"] = r.ok();
  return j.dump(2);
}

}  // namespace hpk
