#include "hpk/residual.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hpk/parallel.hpp"
#include "json.hpp"

namespace hpk {

namespace {

const Rational kHalf(1, 2);

// all k-subsets of {0..m-1} in lexicographic order
std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k > m || k < 0) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

IntVector r1_vector(const RootDatum& d, int a) { return d.doubled[a] ? scale(d.roots[a], 2) : d.roots[a]; }

bool is_unit(const Rational& x) { return is_integer(x); }

int rank_of_rows(const std::vector<IntVector>& rows, int cols) {
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(rows, cols));
}

RatVector reflect_split(const RootDatum& d, int a, const RatVector& r) {
  const Rational v = dot(d.roots[a], r);
  RatVector out = r;
  for (size_t i = 0; i < r.size(); ++i) out[i] -= v * rat(d.coroots[a][i]);
  return out;
}

// dominant representative of a split vector under the Weyl group of d
RatVector dominant_split(const RootDatum& d, RatVector r) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < d.rank; ++i)
      if (dot(d.roots[i], r) < 0) {
        r = reflect_split(d, i, r);
        moved = true;
      }
  }
  return r;
}

std::string point_text(const RootDatum& d, const TorusPoint& t) { return values_text(simple_values(d, t)); }

}  // namespace

std::vector<Rational> graded_labels(const RootDatum& d, const LabelFunction& q, const TorusPoint& s) {
  std::vector<Rational> k(d.nroots(), Rational(0));
  for (int a = 0; a < d.nroots(); ++a) {
    const Rational v = dot(d.roots[a], s.u);
    if (!d.doubled[a]) {
      if (is_unit(v)) k[a] = q.f[a];
    } else if (is_unit(v)) {
      k[a] = q.f[a] + q.g[a] / 2;
    } else if (is_unit(2 * v)) {
      k[a] = q.g[a] / 2;
    }
  }
  return k;
}

Subsystem subsystem(const RootDatum& d, const std::vector<int>& roots) {
  std::vector<int> pos;
  for (int a : roots)
    if (d.positive(a)) pos.push_back(a);
  std::sort(pos.begin(), pos.end());
  // a positive root of the subsystem is simple iff its reflection keeps the other positive roots positive
  std::vector<IntVector> sr, sc;
  for (int a : pos) {
    bool simple = true;
    for (int b : pos) {
      if (b == a) continue;
      const IntVector img = sub(d.roots[b], scale(d.roots[a], d.pair(d.roots[b], a)));
      const int c = d.find(img);
      if (c < 0 || !d.positive(c)) {
        simple = false;
        break;
      }
    }
    if (simple) {
      sr.push_back(d.roots[a]);
      sc.push_back(d.coroots[a]);
    }
  }
  Subsystem S;
  S.datum = make_datum(d.name + "_sub", d.dim, sr, sc);
  for (int a = 0; a < S.datum.nroots(); ++a) {
    const int b = d.find(S.datum.roots[a]);
    if (b < 0) throw std::logic_error("subsystem root missing from parent");
    S.parent.push_back(b);
  }
  return S;
}

UnitaryResult unitary_candidates(const RootDatum& d, const std::vector<WeylElement>& W, int jobs) {
  UnitaryResult res;
  const int n = d.dim;
  if (!d.semisimple()) {
    res.rank_deficient = true;
    return res;
  }
  if (n == 0) {
    res.candidates.push_back({TorusPoint::identity(0), {}});
    return res;
  }
  std::vector<IntVector> v;
  for (int a = 0; a < d.npos; ++a) v.push_back(r1_vector(d, a));
  const auto subs = subsets(d.npos, n);
  const int chunks = resolve_jobs(jobs);
  std::vector<std::set<RatVector>> found(chunks);
  parallel_chunks(subs.size(), chunks, [&](int c, size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) {
      std::vector<IntVector> rows;
      for (int a : subs[i]) rows.push_back(v[a]);
      const IntMatrix A = IntMatrix::from_rows(rows, n);
      if (determinant(A) == 0) continue;
      for (auto& u : solve_congruence(A, RatVector(n, Rational(0)))) {
        if (found[c].count(u)) continue;
        std::vector<IntVector> trivial;
        for (int a = 0; a < d.npos; ++a)
          if (is_unit(dot(v[a], u))) trivial.push_back(v[a]);
        if (rank_of_rows(trivial, n) == n) found[c].insert(std::move(u));
      }
    }
  });
  std::set<RatVector> all;
  for (auto& f : found) all.insert(f.begin(), f.end());
  std::set<TorusPoint> canon;
  for (const auto& u : all) canon.insert(canonical_in_orbit(W, TorusPoint(u, RatVector(n, Rational(0)))).first);
  for (const auto& s : canon) {
    UnitaryCandidate c;
    c.s = s;
    for (int a = 0; a < d.nroots(); ++a)
      if (is_unit(dot(r1_vector(d, a), s.u))) c.rs0.push_back(a);
    res.candidates.push_back(std::move(c));
  }
  return res;
}

GradedResult graded_residual_points(const RootDatum& R, const std::vector<Rational>& k, int jobs) {
  GradedResult res;
  const int n = R.dim;
  if (R.rank < n) return res;
  if (n == 0) {
    res.points.push_back({});
    return res;
  }
  mpz_class L = 1;
  for (const auto& x : k) L = lcm(L, x.get_den());
  std::vector<Int> K(R.nroots());
  for (int a = 0; a < R.nroots(); ++a) K[a] = to_int64(Rational(k[a] * Rational(L)));
  const Int Lint = to_int64(L);

  const auto subs = subsets(R.npos, n);
  const int chunks = resolve_jobs(jobs);
  std::vector<std::set<RatVector>> found(chunks);
  std::vector<std::set<std::string>> bad(chunks);
  parallel_chunks(subs.size(), chunks, [&](int c, size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) {
      std::vector<IntVector> rows;
      for (int a : subs[i]) rows.push_back(R.roots[a]);
      const IntMatrix A = IntMatrix::from_rows(rows, n);
      const Int det = to_int64(determinant(A));
      if (det == 0) continue;
      const IntMatrix adj = adjugate(A);
      // alpha . adj, so that alpha(gamma) = (alpha adj b) / (det L)
      std::vector<IntVector> aadj(R.nroots(), IntVector(n, 0));
      for (int a = 0; a < R.nroots(); ++a)
        for (int j = 0; j < n; ++j) {
          Int s = 0;
          for (int l = 0; l < n; ++l) s = checked_add(s, checked_mul(R.roots[a][l], adj(l, j)));
          aadj[a][j] = s;
        }
      IntVector rhs(n);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool redundant = false;
        for (int j = 0; j < n; ++j) {
          const Int kj = K[subs[i][j]];
          if (kj == 0 && (mask >> j & 1u)) redundant = true;
          rhs[j] = (mask >> j & 1u) ? -kj : kj;
        }
        if (redundant) continue;
        int index = 0;
        for (int a = 0; a < R.nroots(); ++a) {
          const Int num = dot(aadj[a], rhs);
          if (num == checked_mul(K[a], det)) ++index;
          if (num == 0) --index;
        }
        if (index < n) continue;
        RatVector gamma(n);
        const IntVector N = adj.apply(rhs);
        for (int l = 0; l < n; ++l) gamma[l] = rat(N[l], checked_mul(det, Lint));
        if (index > n) bad[c].insert("graded index " + std::to_string(index) + " exceeds rank at " + to_string(gamma));
        found[c].insert(dominant_split(R, gamma));
      }
    }
  });
  std::set<RatVector> all;
  for (auto& f : found) all.insert(f.begin(), f.end());
  res.points.assign(all.begin(), all.end());
  std::set<std::string> v;
  for (auto& b : bad) v.insert(b.begin(), b.end());
  res.violations.assign(v.begin(), v.end());
  return res;
}

PoleZero pole_zero_sets(const RootDatum& d, const LabelFunction& q, const std::vector<int>& roots_L,
                        const TorusPoint& t) {
  PoleZero pz;
  for (int a : roots_L) {
    const CycloValue v = t.eval(d.roots[a]);
    const Rational g2 = d.doubled[a] ? Rational(q.g[a] / 2) : Rational(0);
    const Rational f = q.f[a];
    // the non-doubled case is the doubled one with q_{alpha^v/2} = 1
    if ((v.u == kHalf && v.r == g2) || (v.u == 0 && v.r == g2 + f)) pz.poles.push_back(a);
    if (v.r == 0 && (v.u == 0 || v.u == kHalf)) pz.zeros.push_back(a);
  }
  return pz;
}

int index_i(const RootDatum& d, const LabelFunction& q, const std::vector<int>& roots_L, const TorusPoint& t) {
  return pole_zero_sets(d, q, roots_L, t).index();
}

ResidualPointsResult residual_points(const RootDatum& d, const LabelFunction& q, const std::vector<WeylElement>& W,
                                     int jobs) {
  ResidualPointsResult res;
  auto uc = unitary_candidates(d, W, jobs);
  if (uc.rank_deficient) {
    res.rank_deficient = true;
    return res;
  }
  res.candidates = uc.candidates;
  std::vector<int> all_roots(d.nroots());
  for (int a = 0; a < d.nroots(); ++a) all_roots[a] = a;
  std::map<TorusPoint, int> seen;
  for (int c = 0; c < static_cast<int>(res.candidates.size()); ++c) {
    const auto& cand = res.candidates[c];
    const Subsystem S = subsystem(d, cand.rs0);
    const auto k_all = graded_labels(d, q, cand.s);
    std::vector<Rational> k;
    for (int b : S.parent) k.push_back(k_all[b]);
    auto g = graded_residual_points(S.datum, k, jobs);
    for (auto& v : g.violations) res.violations.push_back("s=" + point_text(d, cand.s) + ": " + v);
    for (const auto& gamma : g.points) {
      const TorusPoint t(cand.s.u, gamma);
      const int i = index_i(d, q, all_roots, t);
      if (i != d.dim)
        res.violations.push_back("torus index " + std::to_string(i) + " at graded point " + point_text(d, t));
      const TorusPoint canon = canonical_in_orbit(W, t).first;
      seen.emplace(canon, c);
    }
  }
  for (const auto& [p, c] : seen) res.points.push_back({p, c});
  return res;
}

CosetKey coset_key(const IntMatrix& lattice, const TorusPoint& r) {
  CosetKey key{lattice, {}};
  for (int j = 0; j < lattice.rows(); ++j) key.second.push_back(r.eval(lattice.row(j)));
  return key;
}

namespace {

IntMatrix moved_lattice(const WeylElement& w, const IntMatrix& lattice) {
  if (lattice.rows() == 0) return lattice;
  std::vector<IntVector> rows;
  for (int j = 0; j < lattice.rows(); ++j) rows.push_back(w.mat.apply(lattice.row(j)));
  return hermite_rows(IntMatrix::from_rows(rows, lattice.cols()));
}

struct CosetImage {
  IntMatrix lattice;
  TorusPoint point;
  CosetKey key;
  int coset = -1;
};

std::vector<CosetImage> coset_images(const std::vector<WeylElement>& W, const ResidualCoset& L, int idx) {
  std::map<CosetKey, CosetImage> m;
  for (const auto& w : W) {
    CosetImage im;
    im.lattice = moved_lattice(w, L.lattice);
    im.point = act(w, L.point);
    im.key = coset_key(im.lattice, im.point);
    im.coset = idx;
    m.emplace(im.key, std::move(im));
  }
  std::vector<CosetImage> out;
  for (auto& [k, v] : m) out.push_back(std::move(v));
  return out;
}

}  // namespace

CosetKey canonical_coset_key(const std::vector<WeylElement>& W, const IntMatrix& lattice, const TorusPoint& r) {
  CosetKey best = coset_key(lattice, r);
  for (const auto& w : W) {
    CosetKey k = coset_key(moved_lattice(w, lattice), act(w, r));
    if (k < best) best = std::move(k);
  }
  return best;
}

CosetResult residual_cosets(const RootDatum& d, const LabelFunction& q, const std::vector<WeylElement>& W, int jobs) {
  CosetResult res;
  if (!d.semisimple()) throw std::invalid_argument("residual cosets need a semisimple datum");
  std::set<CosetKey> seen;
  for (const auto& cls : parabolic_classes(d, W)) {
    const auto& P = cls.simple;
    const int p = static_cast<int>(P.size());
    CosetResult::QuotientPoints qp;
    qp.parabolic = P;
    qp.qd = quotient_datum(d, P);
    qp.labels = restrict_labels(q, qp.qd.root_map);
    qp.W = weyl_elements(qp.qd.datum);
    qp.points = residual_points(qp.qd.datum, qp.labels, qp.W, jobs);
    for (auto& v : qp.points.violations) res.violations.push_back(qp.qd.datum.name + ": " + v);

    std::vector<IntVector> gens;
    for (int i : P) gens.push_back(d.roots[i]);
    const IntMatrix lattice = p ? saturate_rows(IntMatrix::from_rows(gens, d.dim)) : IntMatrix(0, d.dim);
    // K_L = T_L ∩ T^L, seen on the quotient torus
    std::vector<RatVector> kappa{RatVector(p, Rational(0))};
    Int kL = 1;
    if (p) {
      IntMatrix A(p, p);
      for (int j = 0; j < p; ++j) {
        const IntVector img = qp.qd.pullback.apply(lattice.row(j));
        for (int k = 0; k < p; ++k) A(j, k) = img[k];
      }
      kL = to_int64(mpz_class(abs(determinant(A))));
      kappa = solve_congruence(A, RatVector(p, Rational(0)));
    }
    const auto roots_L = parabolic_roots(d, P);
    for (const auto& rp : qp.points.points) {
      std::optional<TorusPoint> best;
      TorusPoint best_q;
      for (const auto& kp : kappa) {
        RatVector uq(p), u(d.dim, Rational(0)), r(d.dim, Rational(0));
        for (int k = 0; k < p; ++k) uq[k] = rp.point.u[k] + kp[k];
        for (int i = 0; i < d.dim; ++i)
          for (int k = 0; k < p; ++k) {
            const Int m = qp.qd.pullback(k, i);
            if (m == 0) continue;
            u[i] += rat(m) * uq[k];
            r[i] += rat(m) * rp.point.r[k];
          }
        TorusPoint t(u, r);
        if (!best || t < *best) best = t, best_q = TorusPoint(uq, rp.point.r);
      }
      ResidualCoset L;
      L.parabolic = P;
      L.roots = roots_L;
      L.lattice = lattice;
      L.point = *best;
      L.quotient_point = best_q;
      L.codim = p;
      L.dim = d.dim - p;
      L.kL = kL;
      const auto pz = pole_zero_sets(d, q, roots_L, L.point);
      L.poles = pz.poles;
      L.zeros = pz.zeros;
      L.index = pz.index();
      L.key = canonical_coset_key(W, lattice, L.point);
      if (!seen.insert(L.key).second) continue;
      res.cosets.push_back(std::move(L));
    }
    res.quotients.push_back(std::move(qp));
  }
  std::stable_sort(res.cosets.begin(), res.cosets.end(), [](const ResidualCoset& a, const ResidualCoset& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.key < b.key;
  });
  return res;
}

bool SuiteReport::all_pass() const { return failures() == 0; }

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& e : entries)
    if (!e.pass) ++n;
  return n;
}

namespace {

std::string coset_text(const RootDatum& d, const ResidualCoset& L) {
  std::string s = "P{";
  for (size_t i = 0; i < L.parabolic.size(); ++i) s += (i ? "," : "") + std::to_string(L.parabolic[i] + 1);
  s += "} ";
  std::vector<CycloValue> v;
  for (int i : L.parabolic) v.push_back(L.point.eval(d.roots[i]));
  return s + values_text(v);
}

// value group generated by q^{f/2}, q^{g/2}
Rational label_half_gcd(const LabelFunction& q) {
  Rational g = 0;
  for (size_t a = 0; a < q.f.size(); ++a) {
    g = rat_gcd(g, q.f[a] / 2);
    g = rat_gcd(g, q.g[a] / 2);
  }
  return g;
}

void point_checks(const RootDatum& d, const LabelFunction& q, const std::vector<ResidualPoint>& pts,
                  const std::string& where, SuiteReport& rep) {
  const Rational G = label_half_gcd(q);
  std::vector<int> doubled_comp(d.ncomponents, 0);
  for (int a = 0; a < d.nroots(); ++a)
    if (d.doubled[a]) doubled_comp[d.component[a]] = 1;
  for (const auto& rp : pts) {
    const TorusPoint& t = rp.point;
    const std::string obj = where + " " + point_text(d, t);
    // conjugate point (u, -r) lies in the W(R_{s,0})-orbit
    {
      std::vector<int> rs0;
      for (int a = 0; a < d.nroots(); ++a)
        if (is_unit(dot(r1_vector(d, a), t.u))) rs0.push_back(a);
      const Subsystem S = subsystem(d, rs0);
      RatVector neg = t.r;
      for (auto& x : neg) x = -x;
      const bool ok = dominant_split(S.datum, t.r) == dominant_split(S.datum, neg);
      rep.entries.push_back({"ster-ii", obj, ok, ok ? "" : "(u,-r) not conjugate under W(R_{s,0})"});
    }
    // split values of roots in the value group
    {
      bool ok = true;
      std::string w;
      for (int a = 0; a < d.npos && ok; ++a) {
        const Rational e = dot(d.roots[a], t.r);
        if (G == 0 ? e != 0 : !is_integer(Rational(e / G))) {
          ok = false;
          w = "root " + d.root_label(a) + " has exponent " + to_string(e);
        }
      }
      rep.entries.push_back({"ster-iii", obj, ok, w});
    }
    // order two on components with doubled roots
    {
      bool ok = true;
      std::string w;
      for (int a = 0; a < d.npos && ok; ++a) {
        if (!doubled_comp[d.component[a]]) continue;
        if (!is_integer(Rational(2 * dot(d.roots[a], t.u)))) {
          ok = false;
          w = "root " + d.root_label(a) + " has unitary part of order > 2";
        }
      }
      rep.entries.push_back({"order2", obj, ok, w});
    }
  }
}

}  // namespace

SuiteReport classification_suite(const RootDatum& d, const std::vector<WeylElement>& W,
                                 const CosetResult& cr, bool with_nonint) {
  SuiteReport rep;
  rep.datum = d.name;
  for (const auto& v : cr.violations) rep.entries.push_back({"equal", d.name, false, v});
  for (const auto& L : cr.cosets) {
    const bool ok = L.index == L.codim;
    rep.entries.push_back({"equal", coset_text(d, L), ok,
                           ok ? "" : "i_L=" + std::to_string(L.index) + " codim=" + std::to_string(L.codim)});
  }
  for (const auto& qp : cr.quotients)
    point_checks(qp.qd.datum, qp.labels, qp.points.points, qp.qd.datum.name, rep);

  // images of every coset, bucketed by center
  std::map<RatVector, std::vector<CosetImage>> by_center;
  for (int i = 0; i < static_cast<int>(cr.cosets.size()); ++i)
    for (auto& im : coset_images(W, cr.cosets[i], i)) by_center[im.point.r].push_back(std::move(im));

  for (const auto& L : cr.cosets) {
    const auto it = by_center.find(L.point.r);
    bool ok = true;
    std::string witness;
    if (it != by_center.end()) {
      const int rkL = L.lattice.rows();
      for (const auto& M : it->second) {
        if (M.lattice.rows() >= rkL) continue;  // need dim L < dim M
        std::vector<IntVector> rows = L.lattice.row_list();
        for (auto& x : M.lattice.row_list()) rows.push_back(x);
        if (rank_of_rows(rows, d.dim) != rkL) continue;
        bool contained = true;
        for (int j = 0; j < M.lattice.rows() && contained; ++j)
          contained = L.point.eval(M.lattice.row(j)) == M.key.second[j];
        if (contained) {
          ok = false;
          witness = "nested in an image of " + coset_text(d, cr.cosets[M.coset]) + " with the same center";
          break;
        }
      }
    }
    rep.entries.push_back({"nonnest", coset_text(d, L), ok, witness});
  }

  if (with_nonint) {
    for (int i = 0; i < static_cast<int>(cr.cosets.size()); ++i) {
      const auto& L1 = cr.cosets[i];
      const auto it = by_center.find(L1.point.r);
      bool ok = true;
      std::string witness;
      for (const auto& M : it == by_center.end() ? std::vector<CosetImage>{} : it->second) {
        if (M.coset == i) continue;
        // tempered forms meet iff the base points agree on X_{L1} ∩ X_{M}
        const int k1 = L1.lattice.rows(), k2 = M.lattice.rows();
        IntMatrix B(d.dim, k1 + k2);
        for (int j = 0; j < k1; ++j)
          for (int l = 0; l < d.dim; ++l) B(l, j) = L1.lattice(j, l);
        for (int j = 0; j < k2; ++j)
          for (int l = 0; l < d.dim; ++l) B(l, k1 + j) = -M.lattice(j, l);
        bool meet = true;
        if (k1 + k2 > 0) {
          const IntMatrix K = integer_kernel(B);
          for (int r = 0; r < K.rows() && meet; ++r) {
            IntVector x(d.dim, 0);
            for (int j = 0; j < k1; ++j) x = add(x, scale(L1.lattice.row(j), K(r, j)));
            meet = L1.point.eval(x) == M.point.eval(x);
          }
        }
        if (meet) {
          ok = false;
          witness = "tempered form meets an image of " + coset_text(d, cr.cosets[M.coset]);
          break;
        }
      }
      rep.entries.push_back({"nonint", coset_text(d, L1), ok, witness});
    }
  }
  return rep;
}

SuiteReport scaling_check(const RootDatum& d, const LabelFunction& q, const std::vector<WeylElement>& W,
                          const Rational& eps, int jobs) {
  SuiteReport rep;
  rep.datum = d.name;
  LabelFunction qe = q;
  for (auto& x : qe.f) x *= eps;
  for (auto& x : qe.g) x *= eps;
  const auto base = residual_cosets(d, q, W, jobs);
  const auto scaled = residual_cosets(d, qe, W, jobs);
  std::set<CosetKey> a, b;
  for (const auto& L : base.cosets) a.insert(canonical_coset_key(W, L.lattice, L.point.scale_split(eps)));
  for (const auto& L : scaled.cosets) b.insert(L.key);
  const bool ok = a == b;
  std::ostringstream w;
  if (!ok) w << "scaled enumeration has " << b.size() << " orbits, image of base has " << a.size();
  rep.entries.push_back({"scaling", d.name + " eps=" + to_string(eps), ok, w.str()});
  return rep;
}

TorusPoint real_point_from_simple(const RootDatum& d, const RatVector& simple_exponents) {
  if (!d.semisimple()) throw std::invalid_argument("real point needs a semisimple datum");
  std::vector<RatVector> rows;
  for (int i = 0; i < d.rank; ++i) rows.push_back(to_rat(d.roots[i]));
  const auto sol = solve_affine(RatMatrix::from_rows(rows, d.dim), simple_exponents);
  if (sol.kind != AffineSolution::Kind::Unique) throw std::logic_error("simple roots do not determine the point");
  return TorusPoint(RatVector(d.dim, Rational(0)), sol.point);
}

TorusPoint steinberg_point(const RootDatum& d, const LabelFunction& q) {
  RatVector e(d.rank);
  for (int i = 0; i < d.rank; ++i) e[i] = -(q.f[i] + (d.doubled[i] ? Rational(q.g[i] / 2) : Rational(0)));
  return real_point_from_simple(d, e);
}

TorusPoint trivial_point(const RootDatum& d, const LabelFunction& q) { return steinberg_point(d, q).inverse(); }

TorusPoint dominant_real(const RootDatum& d, const TorusPoint& t) {
  return TorusPoint(t.u, dominant_split(d, t.r));
}

KLReport kl_real_point_check(const RootDatum& d, const LabelFunction& q, const std::vector<WeylElement>& W, int jobs) {
  KLReport rep;
  const auto pts = residual_points(d, q, W, jobs);
  rep.violations = pts.violations;
  for (const auto& rp : pts.points) {
    if (!rp.point.is_real()) continue;
    const TorusPoint t = dominant_real(d, rp.point);
    std::vector<Rational> e;
    for (int i = 0; i < d.rank; ++i) {
      e.push_back(dot(d.roots[i], t.r));
      if (e.back() != 0 && e.back() != q.f[i])
        rep.violations.push_back("simple exponent " + to_string(e.back()) + " at " + point_text(d, t));
    }
    rep.real_points.emplace_back(t, e);
  }
  return rep;
}

namespace {

// cone X+ ⊗ R: center directions (both signs) and one preimage per fundamental weight
struct DominantCone {
  std::vector<RatVector> center;
  std::vector<RatVector> fundamental;
};

DominantCone dominant_cone(const RootDatum& d) {
  DominantCone c;
  IntMatrix C(d.rank, d.dim);
  for (int i = 0; i < d.rank; ++i)
    for (int k = 0; k < d.dim; ++k) C(i, k) = d.coroots[i][k];
  const IntMatrix Z = integer_kernel(C);
  for (int j = 0; j < Z.rows(); ++j) c.center.push_back(to_rat(Z.row(j)));
  const RatMatrix Cr = RatMatrix::from(C);
  for (int i = 0; i < d.rank; ++i) {
    RatVector e(d.rank, Rational(0));
    e[i] = 1;
    const auto s = solve_affine(Cr, e);
    c.fundamental.push_back(s.point);
  }
  return c;
}

Rational pairing(const RatVector& x, const RatVector& r) {
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * r[i];
  return s;
}

}  // namespace

bool casselman_tempered(const RootDatum& d, const WeightSet& weights) {
  const auto c = dominant_cone(d);
  for (const auto& t : weights) {
    for (const auto& z : c.center)
      if (pairing(z, t.r) != 0) return false;
    for (const auto& w : c.fundamental)
      if (pairing(w, t.r) > 0) return false;
  }
  return true;
}

bool casselman_discrete(const RootDatum& d, const WeightSet& weights) {
  const auto c = dominant_cone(d);
  if (!c.center.empty()) return false;
  for (const auto& t : weights)
    for (const auto& w : c.fundamental)
      if (pairing(w, t.r) >= 0) return false;
  return true;
}

namespace {

nlohmann::ordered_json rat_array(const RatVector& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

nlohmann::ordered_json root_list(const RootDatum& d, const std::vector<int>& roots) {
  auto a = nlohmann::ordered_json::array();
  for (int r : roots) a.push_back(d.root_coeffs[r]);
  return a;
}

}  // namespace

std::string cosets_to_json(const RootDatum& d, const std::vector<ResidualCoset>& cosets) {
  auto arr = nlohmann::ordered_json::array();
  for (size_t i = 0; i < cosets.size(); ++i) {
    const auto& L = cosets[i];
    nlohmann::ordered_json j;
    j["orbit"] = i;
    j["dim"] = L.dim;
    auto par = nlohmann::ordered_json::array();
    for (int p : L.parabolic) par.push_back(p + 1);
    j["parabolic"] = par;
    j["point"] = {{"u", rat_array(L.point.u)}, {"r", rat_array(L.point.r)}};
    auto vals = nlohmann::ordered_json::array();
    for (int p : L.parabolic) vals.push_back(L.point.eval(d.roots[p]).to_text());
    j["values"] = vals;
    j["index"] = L.index;
    j["codim"] = L.codim;
    j["center"] = rat_array(L.point.r);
    j["kL"] = L.kL;
    j["Rp"] = root_list(d, L.poles);
    j["Rz"] = root_list(d, L.zeros);
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string suite_to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["datum"] = r.datum;
  j["failures"] = r.failures();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json x;
    x["check"] = e.check;
    x["object"] = e.object;
    x["pass"] = e.pass;
    if (!e.witness.empty()) x["witness"] = e.witness;
    arr.push_back(std::move(x));
  }
  j["entries"] = arr;
  return j.dump(2);
}

}  // namespace hpk
