#include "hpk/plancherel.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>


namespace hpk {

namespace {

const Rational kHalf(1, 2);

std::vector<int> all_roots(const RootDatum& d) {
  std::vector<int> v(d.nroots());
  for (int a = 0; a < d.nroots(); ++a) v[a] = a;
  return v;
}

// Denominator factors of the density for root a, each as (w - 1) or (w + 1).
struct Linear {
  CycloValue w;
  bool plus = false;
};

std::vector<Linear> density_denominators(const RootDatum& d, const LabelFunction& q, int a, const CycloValue& v) {
  if (!d.doubled[a]) return {{v * CycloValue(0, q.f[a]), false}};
  const Rational g2 = q.g[a] / 2;
  return {{v * CycloValue(0, g2), true}, {v * CycloValue(0, g2 + q.f[a]), false}};
}

CycloValue r1_of(const RootDatum& d, int a, const CycloValue& v) { return d.doubled[a] ? v * v : v; }

bool vanishes(const Linear& l) { return l.plus ? l.w == CycloValue(kHalf, 0) : l.w.is_one(); }

std::complex<double> value_of(const Linear& l, double qnum) {
  return l.w.evaluate(qnum) + (l.plus ? 1.0 : -1.0);
}

double q_power(double qnum, const Rational& e) { return std::pow(qnum, e.get_d()); }

}  // namespace

std::string DensityValue::to_text() const {
  if (rational) return rational->to_text();
  std::string s = factors.constant.to_text();
  for (const auto& v : factors.num) s += "*(" + v.to_text() + " - 1)";
  if (!factors.den.empty()) {
    s += "/(";
    for (size_t i = 0; i < factors.den.size(); ++i) s += (i ? "*(" : "(") + factors.den[i].to_text() + " - 1)";
    s += ")";
  }
  return s;
}

DensityValue m_point(const RootDatum& d, const LabelFunction& q, const TorusPoint& r) {
  const int i = index_i(d, q, all_roots(d), r);
  if (i != d.dim)
    throw std::invalid_argument("not a residual point: index " + std::to_string(i) + " in rank " +
                                std::to_string(d.dim));
  DensityValue out;
  FactorRatio& F = out.factors;
  F.mul_monomial(CycloValue(0, q_of_longest(d, q)));
  for (int a = 0; a < d.nroots(); ++a) {
    const CycloValue v = r.eval(d.roots[a]);
    F.mul_num(r1_of(d, a, v));
    for (const auto& l : density_denominators(d, q, a, v)) {
      if (l.plus)
        F.mul_den_plus(l.w);
      else
        F.mul_den(l.w);
    }
  }
  out.rational = F.to_qrational();
  return out;
}

std::complex<double> m_L(const RootDatum& d, const LabelFunction& q, const ResidualCoset& L, const TorusPoint& t,
                         double qnum) {
  std::vector<bool> inL(d.nroots(), false);
  for (int a : L.roots) inL[a] = true;
  std::complex<double> m = q_power(qnum, q_of_longest(d, q));
  for (int a = 0; a < d.nroots(); ++a) {
    const CycloValue v = t.eval(d.roots[a]);
    const Linear numf{r1_of(d, a, v), false};
    if (!(inL[a] && vanishes(numf))) m *= value_of(numf, qnum);
    for (const auto& l : density_denominators(d, q, a, v))
      if (!(inL[a] && vanishes(l))) m /= value_of(l, qnum);
  }
  return m;
}

UpperDensity m_upperL(const RootDatum& d, const LabelFunction& q, const ResidualCoset& L, const TorusPoint& t,
                      double qnum) {
  UpperDensity out;
  std::vector<bool> inL(d.nroots(), false);
  for (int a : L.roots) inL[a] = true;
  const Rational wL = q_of_longest(d, q) - q_of_subsystem(d, q, L.roots);
  FactorRatio prod;
  for (int a = 0; a < d.nroots(); ++a)
    if (!inL[a]) prod *= c_alpha(d, q, a, t);
  if (prod.zero_order != 0) out.singular = true;
  out.value = q_power(qnum, -wL) / prod.evaluate(qnum);

  double mod = q_power(qnum, wL);
  for (int a = 0; a < d.npos; ++a) {
    if (inL[a]) continue;
    const CycloValue v = t.eval(d.roots[a]);
    const double num = std::norm(1.0 - r1_of(d, a, v).evaluate(qnum));
    double den = 1;
    for (const auto& l : density_denominators(d, q, a, v)) den *= std::norm(value_of(l, qnum));
    if (den < 1e-300 || num < 1e-300) out.singular = true;
    mod *= num / den;
  }
  out.modulus_form = mod;
  return out;
}

TorusPoint sample_tempered(const ResidualCoset& L, unsigned long long seed, long denominator) {
  const IntMatrix Y = integer_kernel(L.lattice.rows() ? L.lattice : IntMatrix(0, L.point.dim()));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(0, denominator - 1);
  RatVector u = L.point.u;
  if (L.lattice.rows() == 0) {
    for (auto& x : u) x += rat(pick(rng), denominator);
    return TorusPoint(u, L.point.r);
  }
  for (int j = 0; j < Y.rows(); ++j) {
    const Rational theta = rat(pick(rng), denominator);
    for (int i = 0; i < L.point.dim(); ++i) u[i] += theta * rat(Y(j, i));
  }
  return TorusPoint(u, L.point.r);
}

PoincareProduct poincare_product(const RootDatum& d, const LabelFunction& q) {
  PoincareProduct out;
  if (!d.semisimple()) {
    out.reason = "datum is not semisimple";
    return out;
  }
  for (int i = 0; i < d.rank; ++i) {
    const Rational e = q.f[i] + (d.doubled[i] ? Rational(q.g[i] / 2) : Rational(0));
    if (e <= 0) {
      out.reason = "Steinberg point not in the negative chamber: series diverges";
      return out;
    }
  }
  const DensityValue m = m_point(d, q, steinberg_point(d, q));
  if (!m.rational) {
    out.reason = "density at the Steinberg point is not rational";
    return out;
  }
  QRational v = QRational(Rational(d.index_over_root_lattice())) / *m.rational;
  if (d.dim % 2) v = -v;
  out.valid = true;
  out.value = v;
  return out;
}

PoincareSum poincare_truncated(const RootDatum& d, const LabelFunction& q, double qnum, int max_length) {
  if (!d.semisimple()) throw std::invalid_argument("truncated Poincare sum needs a semisimple datum");
  PoincareSum out;
  const auto W = weyl_elements(d);
  const int n = d.dim;
  const int radius = max_length + d.npos;
  // x is determined by its simple coroot pairings p; l(w) >= |p|_1 - l(w0)
  RatMatrix C(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) C(i, k) = rat(d.coroots[i][k]);
  const RatMatrix Ci = *inverse(C);
  std::vector<Int> p(n, -radius);
  for (;;) {
    Int l1 = 0;
    for (Int x : p) l1 += x < 0 ? -x : x;
    if (l1 <= radius) {
      IntVector x(n);
      bool integral = true;
      for (int i = 0; i < n && integral; ++i) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += Ci(i, k) * rat(p[k]);
        if (!is_integer(s)) integral = false;
        else x[i] = to_int64(s);
      }
      if (integral)
        for (const auto& u : W) {
          const AffineElement w{u, x};
          if (affine_length(d, w) > max_length) continue;
          out.value += q_power(qnum, -q_of_affine(d, q, w));
          ++out.elements;
        }
    }
    int k = 0;
    while (k < n && ++p[k] > radius) p[k++] = -radius;
    if (k == n) break;
  }
  // count(l) <= |W0| (2(l + N) + 1)^n and q(w) >= qmin^{l(w)}
  std::optional<Rational> low;
  for (int a = 0; a < d.npos; ++a) {
    Rational e = q.f[a];
    if (d.doubled[a]) e = std::min(e, q.odd(a));
    if (!low || e < *low) low = e;
  }
  const Rational emin = low.value_or(Rational(0));
  if (emin <= 0) {
    out.tail_bound = INFINITY;
    return out;
  }
  const double lq = std::log(qnum) * emin.get_d();
  const double lw = std::log(static_cast<double>(W.size()));
  double tail = 0;
  for (long l = max_length + 1; l < max_length + 200000; ++l) {
    const double lt = lw + n * std::log(2.0 * (l + d.npos) + 1) - lq * l;
    const double t = std::exp(lt);
    tail += t;
    if (l > max_length + 10 && t < 1e-18 * std::max(tail, 1e-300)) break;
  }
  out.tail_bound = tail;
  return out;
}

std::vector<int> weyl_exponents(const RootDatum& d) {
  std::map<int, int> at_height;
  int top = 0;
  for (int a = 0; a < d.npos; ++a) {
    const int h = d.height(a);
    ++at_height[h];
    top = std::max(top, h);
  }
  std::vector<int> m;
  for (int h = 1; h <= top; ++h) {
    const int k = at_height[h] - (at_height.count(h + 1) ? at_height[h + 1] : 0);
    for (int j = 0; j < k; ++j) m.push_back(h);
  }
  return m;
}

QRational equal_label_poincare(const RootDatum& d) {
  QRational v(Rational(1));
  const QPolynomial one(Rational(1));
  for (int m : weyl_exponents(d)) {
    const QPolynomial a = QPolynomial::monomial(m + 1) - one;
    const QPolynomial b = (QPolynomial::monomial(m) - one) * (QPolynomial::q() - one);
    v *= QRational(a, b);
  }
  return v;
}

QRational plancherel_point_mass(const RootDatum& d, const LabelFunction& q, const TorusPoint& r,
                                const std::vector<WeylElement>& W) {
  const TorusPoint st = steinberg_point(d, q);
  if (canonical_in_orbit(W, r).first != canonical_in_orbit(W, st).first)
    throw std::invalid_argument("point mass is only available on the Steinberg orbit");
  int stab = 0;
  for (const auto& w : W)
    if (act(w, r) == r) ++stab;
  if (stab != 1) throw std::invalid_argument("Steinberg point is not regular");
  const DensityValue m = m_point(d, q, r);
  if (!m.rational) throw std::logic_error("density at the Steinberg point is not rational");
  QRational v = *m.rational / QRational(Rational(d.index_over_root_lattice()));
  return d.dim % 2 ? -v : v;
}

QRational subregular_C_reference(int n) {
  const QPolynomial one(Rational(1));
  auto qm = [&](int e) { return QPolynomial::monomial(e) - one; };
  QPolynomial num = QPolynomial::monomial(1) * qm(1).pow(n + 2) * qm(n - 2);
  for (int i = 1; i <= n - 2; ++i) num *= qm(2 * i + 1);
  QPolynomial den = qm(2) * qm(n);
  for (int i = 1; i <= n - 1; ++i) den *= qm(2 * i);
  return QRational(num, den) * QRational(Rational(1, 4));
}

FormalDimensionReport fdim_subregular_C(int n, const Rational& numeric_q) {
  if (n < 3 || n > 5) throw std::invalid_argument("subregular formal dimension is tabulated for n = 3, 4, 5");
  FormalDimensionReport rep;
  rep.n = n;
  const RootDatum d = build_datum(CartanType{'C', n}, LatticeMode::Weight);
  const LabelFunction q = equal_labels(d);
  RatVector e(n, Rational(1));
  e[n - 2] = 0;
  rep.point = real_point_from_simple(d, e);
  const DensityValue m = m_point(d, q, rep.point);  // throws if the point is not residual
  if (!m.rational) throw std::logic_error("subregular density is not rational");
  rep.density = *m.rational;
  // orbit size times kappa is (-1)^n (n+2)/4 and the degree constant is 1/(n+2)
  rep.assembled = rep.density * QRational(Rational(n % 2 ? -1 : 1, 4));
  rep.reference = subregular_C_reference(n);
  if (rep.assembled == rep.reference) {
    rep.sign = 1, rep.match = true;
  } else if (rep.assembled == -rep.reference) {
    rep.sign = -1, rep.match = true;
  }
  rep.numeric_q = numeric_q;
  const auto a = rep.assembled.evaluate_exact(numeric_q);
  const auto b = rep.reference.evaluate_exact(numeric_q);
  if (a && b) {
    rep.assembled_at_q = *a;
    rep.reference_at_q = *b;
    rep.numeric_match = *a == Rational(rep.sign) * *b;
  }
  return rep;
}

std::string density_table(const RootDatum& d, const LabelFunction& q, const CosetResult& cr, double qnum,
                          TableFormat fmt) {
  Table t;
  t.header = datum_header(d, q);
  t.header.push_back({"q", number_text(qnum)});
  t.header.push_back({"i_L", "pole count minus zero count of the Plancherel kernel along L"});
  t.header.push_back({"m", "density of the residual point r_L of the parabolic quotient, vanishing factors omitted"});
  t.columns = {"orbit", "parabolic", "point", "i_L", "m", "m_at_q"};
  using K = Table::Kind;
  t.kinds = {K::Integer, K::Text, K::Text, K::Integer, K::Text, K::Number};
  for (size_t i = 0; i < cr.cosets.size(); ++i) {
    const auto& L = cr.cosets[i];
    const CosetResult::QuotientPoints* qp = nullptr;
    for (const auto& x : cr.quotients)
      if (x.parabolic == L.parabolic) qp = &x;
    if (!qp) throw std::logic_error("coset without quotient data");
    const DensityValue m = m_point(qp->qd.datum, qp->labels, L.quotient_point);
    std::string parabolic = "{";
    for (size_t k = 0; k < L.parabolic.size(); ++k) parabolic += (k ? "," : "") + std::to_string(L.parabolic[k] + 1);
    parabolic += "}";
    std::vector<CycloValue> vals;
    for (int p : L.parabolic) vals.push_back(L.point.eval(d.roots[p]));
    const std::string point = values_text(vals), sym = m.to_text(), num = number_text(m.evaluate(qnum).real());
    const std::string idx = std::to_string(L.index);
    t.add_row({std::to_string(i), parabolic, point, idx, sym, num},
              {std::to_string(i), "$\\{" + parabolic.substr(1, parabolic.size() - 2) + "\\}$", "\\verb|" + point + "|",
               idx, m.rational ? "$" + m.rational->to_tex() + "$" : "\\verb|" + sym + "|", num});
  }
  return t.render(fmt);
}

}  // namespace hpk
