#include "hpk/root_datum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hpk {

std::string CartanType::to_string() const { return std::string(1, family) + std::to_string(n); }

CartanType CartanType::parse(const std::string& tag) {
  if (tag.size() < 2) throw std::invalid_argument("bad Cartan type '" + tag + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(tag[0])));
  try {
    size_t used = 0;
    t.n = std::stoi(tag.substr(1), &used);
    if (used != tag.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad Cartan type '" + tag + "'");
  }
  const std::string fam = "ABCDGF";
  if (fam.find(t.family) == std::string::npos) throw std::invalid_argument("unknown family in '" + tag + "'");
  if (t.n < 1 || t.n > 5) throw std::invalid_argument("rank out of range (1..5) in '" + tag + "'");
  if (t.family == 'G' && t.n != 2) throw std::invalid_argument("G requires rank 2");
  if (t.family == 'F' && t.n != 4) throw std::invalid_argument("F requires rank 4");
  if ((t.family == 'B' || t.family == 'C') && t.n < 2) throw std::invalid_argument("B/C require rank >= 2");
  if (t.family == 'D' && t.n < 3) throw std::invalid_argument("D requires rank >= 3");
  return t;
}

std::string to_string(LatticeMode m) {
  switch (m) {
    case LatticeMode::Root: return "Q";
    case LatticeMode::Weight: return "P";
    default: return "explicit";
  }
}

IntMatrix cartan_matrix(const CartanType& t) {
  const int n = t.n;
  IntMatrix A(n, n);
  for (int i = 0; i < n; ++i) A(i, i) = 2;
  auto link = [&](int i, int j) { A(i, j) = A(j, i) = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      A(n - 1, n - 2) = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      A(n - 2, n - 1) = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'G':
      link(0, 1);
      A(0, 1) = -3;
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      A(2, 1) = -2;
      break;
    default: throw std::invalid_argument("unknown family");
  }
  return A;
}

int RootDatum::find(const IntVector& x) const {
  auto it = index.find(x);
  return it == index.end() ? -1 : it->second;
}

IntMatrix RootDatum::reflection_matrix(int a) const {
  IntMatrix S = IntMatrix::identity(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) S(i, j) -= roots[a][i] * coroots[a][j];
  return S;
}

int RootDatum::height(int a) const {
  return static_cast<int>(std::accumulate(root_coeffs[a].begin(), root_coeffs[a].end(), Int(0)));
}

mpz_class RootDatum::index_over_root_lattice() const {
  if (!semisimple()) throw std::logic_error("index over root lattice needs a semisimple datum");
  IntMatrix S(dim, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < dim; ++i) S(i, j) = roots[j][i];
  return abs(determinant(S));
}

std::vector<int> RootDatum::highest_short_roots() const {
  std::vector<int> best(ncomponents, -1);
  std::vector<Int> besth(ncomponents, -1);
  for (int a = 0; a < npos; ++a) {
    const Int h = std::accumulate(coroot_coeffs[a].begin(), coroot_coeffs[a].end(), Int(0));
    const int c = component[a];
    if (h > besth[c]) besth[c] = h, best[c] = a;
  }
  return best;
}

std::string RootDatum::root_label(int a) const {
  std::string s;
  for (size_t i = 0; i < root_coeffs[a].size(); ++i) s += (i ? "," : "") + std::to_string(root_coeffs[a][i]);
  return s;
}

namespace {

int uf_find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

RootDatum make_datum(const std::string& name, int dim, const std::vector<IntVector>& simple_roots,
                     const std::vector<IntVector>& simple_coroots) {
  const int n = static_cast<int>(simple_roots.size());
  if (static_cast<int>(simple_coroots.size()) != n) throw std::invalid_argument("root/coroot count mismatch");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(simple_roots[i].size()) != dim || static_cast<int>(simple_coroots[i].size()) != dim)
      throw std::invalid_argument("simple root of wrong dimension");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Int aij = dot(simple_roots[j], simple_coroots[i]);
      const Int aji = dot(simple_roots[i], simple_coroots[j]);
      if (i == j && aij != 2) throw std::invalid_argument("<alpha, alpha^v> != 2");
      if (i != j && (aij > 0 || (aij == 0) != (aji == 0)))
        throw std::invalid_argument("simple roots do not form a Cartan matrix");
    }
  if (n > 0 && rank(IntMatrix::from_rows(simple_roots)) != n)
    throw std::invalid_argument("simple roots are linearly dependent");

  struct Rec {
    IntVector root, coroot, c, cc;
  };
  std::map<IntVector, Rec> found;
  std::vector<IntVector> frontier;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    found[simple_roots[i]] = {simple_roots[i], simple_coroots[i], e, e};
    frontier.push_back(simple_roots[i]);
  }
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& key : frontier) {
      const Rec r = found.at(key);
      for (int j = 0; j < n; ++j) {
        const Int p = dot(r.root, simple_coroots[j]);
        const Int pc = dot(simple_roots[j], r.coroot);
        Rec s{sub(r.root, scale(simple_roots[j], p)), sub(r.coroot, scale(simple_coroots[j], pc)), r.c, r.cc};
        s.c[j] -= p;
        s.cc[j] -= pc;
        if (found.count(s.root)) continue;
        found[s.root] = s;
        next.push_back(s.root);
        if (found.size() > 2000) throw std::invalid_argument("root system is not finite");
      }
    }
    frontier = std::move(next);
  }

  std::vector<Rec> pos;
  for (auto& [k, r] : found) {
    const bool p = std::all_of(r.c.begin(), r.c.end(), [](Int x) { return x >= 0; });
    const bool m = std::all_of(r.c.begin(), r.c.end(), [](Int x) { return x <= 0; });
    if (!p && !m) throw std::invalid_argument("root neither positive nor negative");
    if (p) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const Rec& a, const Rec& b) {
    const Int ha = std::accumulate(a.c.begin(), a.c.end(), Int(0));
    const Int hb = std::accumulate(b.c.begin(), b.c.end(), Int(0));
    if (ha != hb) return ha < hb;
    return a.c > b.c;
  });

  RootDatum d;
  d.name = name;
  d.dim = dim;
  d.rank = n;
  d.npos = static_cast<int>(pos.size());
  if (static_cast<int>(found.size()) != 2 * d.npos) throw std::invalid_argument("roots are not symmetric");
  for (const auto& r : pos) {
    d.roots.push_back(r.root);
    d.coroots.push_back(r.coroot);
    d.root_coeffs.push_back(r.c);
    d.coroot_coeffs.push_back(r.cc);
  }
  for (int k = 0; k < d.npos; ++k) {
    d.roots.push_back(negate(d.roots[k]));
    d.coroots.push_back(negate(d.coroots[k]));
    d.root_coeffs.push_back(negate(d.root_coeffs[k]));
    d.coroot_coeffs.push_back(negate(d.coroot_coeffs[k]));
  }
  const int N = d.nroots();
  for (int a = 0; a < N; ++a) d.index[d.roots[a]] = a;
  d.neg.resize(N);
  for (int a = 0; a < N; ++a) d.neg[a] = a < d.npos ? a + d.npos : a - d.npos;
  d.doubled.resize(N);
  for (int a = 0; a < N; ++a)
    d.doubled[a] = std::all_of(d.coroots[a].begin(), d.coroots[a].end(), [](Int x) { return x % 2 == 0; });

  d.simple_perm.assign(n, std::vector<int>(N));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < N; ++a) {
      const IntVector img = sub(d.roots[a], scale(d.roots[i], d.pair(d.roots[a], i)));
      d.simple_perm[i][a] = d.find(img);
      if (d.simple_perm[i][a] < 0) throw std::logic_error("reflection does not preserve roots");
    }

  // components
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && d.cartan(i, j) != 0) p[uf_find(p, i)] = uf_find(p, j);
  std::map<int, int> comp_id;
  std::vector<int> simple_comp(n);
  for (int i = 0; i < n; ++i) {
    const int r = uf_find(p, i);
    if (!comp_id.count(r)) comp_id[r] = static_cast<int>(comp_id.size());
    simple_comp[i] = comp_id[r];
  }
  d.ncomponents = static_cast<int>(comp_id.size());
  d.component.resize(N);
  for (int a = 0; a < N; ++a)
    for (int i = 0; i < n; ++i)
      if (d.root_coeffs[a][i] != 0) {
        d.component[a] = simple_comp[i];
        break;
      }

  // W0-orbits on roots
  std::vector<int> q(N);
  std::iota(q.begin(), q.end(), 0);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < N; ++a) q[uf_find(q, a)] = uf_find(q, d.simple_perm[i][a]);
  std::map<int, int> orb_id;
  d.orbit.resize(N);
  for (int a = 0; a < N; ++a) {
    const int r = uf_find(q, a);
    if (!orb_id.count(r)) orb_id[r] = static_cast<int>(orb_id.size());
    d.orbit[a] = orb_id[r];
  }
  d.norbits = static_cast<int>(orb_id.size());

  // squared lengths: long roots of each component have length 2
  std::vector<Rational> len(n, Rational(0));
  for (int c = 0; c < d.ncomponents; ++c) {
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (simple_comp[i] == c) {
        start = i;
        break;
      }
    len[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (j != i && d.cartan(i, j) != 0 && len[j] == 0) {
          // |a_j|^2 / |a_i|^2 = A_ij / A_ji
          len[j] = len[i] * rat(d.cartan(i, j)) / rat(d.cartan(j, i));
          stack.push_back(j);
        }
    }
    Rational mx = 0;
    for (int i = 0; i < n; ++i)
      if (simple_comp[i] == c) mx = std::max(mx, len[i]);
    for (int i = 0; i < n; ++i)
      if (simple_comp[i] == c) len[i] = len[i] * 2 / mx;
  }
  d.sq_length.resize(N);
  for (int a = 0; a < N; ++a)
    for (int i = 0; i < n; ++i)
      if (d.orbit[i] == d.orbit[a]) {
        d.sq_length[a] = len[i];
        break;
      }
  return d;
}

RootDatum build_datum(const CartanType& type, LatticeMode mode, const IntMatrix& lattice_basis) {
  const IntMatrix A = cartan_matrix(type);
  const int n = type.n;
  IntMatrix B;
  switch (mode) {
    case LatticeMode::Root: B = A; break;
    case LatticeMode::Weight: B = IntMatrix::identity(n); break;
    case LatticeMode::Explicit:
      if (lattice_basis.rows() != n || lattice_basis.cols() != n)
        throw std::invalid_argument("explicit lattice basis must be n x n");
      B = lattice_basis;
      break;
  }
  auto Binv = inverse(RatMatrix::from(B));
  if (!Binv) throw std::invalid_argument("lattice basis is singular");
  std::vector<IntVector> sr, sc;
  for (int j = 0; j < n; ++j) {
    RatVector col(n);
    for (int i = 0; i < n; ++i) col[i] = rat(A(i, j));
    const RatVector x = Binv->apply(col);
    IntVector xi(n);
    for (int i = 0; i < n; ++i) {
      if (!is_integer(x[i])) throw std::invalid_argument("lattice does not contain the root lattice");
      xi[i] = to_int64(x[i]);
    }
    sr.push_back(xi);
  }
  for (int i = 0; i < n; ++i) sc.push_back(B.row(i));
  RootDatum d = make_datum(type.to_string(), n, sr, sc);
  d.mode = mode;
  d.lattice_basis = B;
  return d;
}

WeylElement identity_element(const RootDatum& d) {
  WeylElement e;
  e.mat = IntMatrix::identity(d.dim);
  e.inv_transpose = IntMatrix::identity(d.dim);
  e.perm.resize(d.nroots());
  std::iota(e.perm.begin(), e.perm.end(), 0);
  return e;
}

int length_of(const RootDatum& d, const std::vector<int>& perm) {
  int l = 0;
  for (int a = 0; a < d.npos; ++a)
    if (!d.positive(perm[a])) ++l;
  return l;
}

WeylElement compose(const RootDatum& d, const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.mat = a.mat * b.mat;
  c.inv_transpose = a.inv_transpose * b.inv_transpose;
  c.perm.resize(d.nroots());
  for (int x = 0; x < d.nroots(); ++x) c.perm[x] = a.perm[b.perm[x]];
  c.length = length_of(d, c.perm);
  return c;
}

WeylElement inverse_element(const RootDatum& d, const WeylElement& a) {
  WeylElement c;
  c.mat = a.inv_transpose.transpose();
  c.inv_transpose = a.mat.transpose();
  c.perm.resize(d.nroots());
  for (int x = 0; x < d.nroots(); ++x) c.perm[a.perm[x]] = x;
  c.length = a.length;
  c.word.assign(a.word.rbegin(), a.word.rend());
  return c;
}

std::vector<WeylElement> weyl_elements(const RootDatum& d, int rank_cap) {
  if (d.rank > rank_cap) throw std::invalid_argument("Weyl group enumeration guard: rank exceeds cap");
  std::vector<IntMatrix> S, ST;
  for (int i = 0; i < d.rank; ++i) {
    S.push_back(d.reflection_matrix(i));
    ST.push_back(S.back().transpose());
  }
  std::vector<WeylElement> all{identity_element(d)};
  std::set<std::vector<int>> seen{all[0].perm};
  std::vector<size_t> level{0};
  while (!level.empty()) {
    std::vector<WeylElement> next;
    for (size_t idx : level) {
      for (int i = 0; i < d.rank; ++i) {
        const WeylElement& w = all[idx];
        if (!d.positive(w.perm[i])) continue;  // w s_i would be shorter
        WeylElement v;
        v.perm.resize(d.nroots());
        for (int a = 0; a < d.nroots(); ++a) v.perm[a] = w.perm[d.simple_perm[i][a]];
        if (seen.count(v.perm)) continue;
        seen.insert(v.perm);
        v.mat = w.mat * S[i];
        v.inv_transpose = w.inv_transpose * ST[i];
        v.word = w.word;
        v.word.push_back(i);
        v.length = w.length + 1;
        next.push_back(std::move(v));
      }
    }
    std::sort(next.begin(), next.end(), [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
    level.clear();
    for (auto& v : next) {
      level.push_back(all.size());
      all.push_back(std::move(v));
    }
  }
  return all;
}

int longest_index(const std::vector<WeylElement>& W) {
  int best = 0;
  for (size_t i = 0; i < W.size(); ++i)
    if (W[i].length > W[best].length) best = static_cast<int>(i);
  return best;
}

AffineElement affine_compose(const RootDatum& d, const AffineElement& a, const AffineElement& b) {
  return {compose(d, a.u, b.u), add(a.x, a.u.mat.apply(b.x))};
}

namespace {

// affine roots (alpha^v, k) with k in [kmin, kmax] inverted by t_x u
template <typename F>
void for_each_inversion_range(const RootDatum& d, const AffineElement& w, F&& f) {
  for (int a = 0; a < d.nroots(); ++a) {
    const int b = w.u.perm[a];
    const Int m = dot(w.x, d.coroots[b]);
    const Int kmin = d.positive(a) ? 0 : 1;
    const Int kmax = d.positive(b) ? m - 1 : m;
    if (kmax >= kmin) f(a, kmin, kmax);
  }
}

Int count_even(Int lo, Int hi) {
  // number of even integers in [lo, hi]
  auto fl = [](Int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
  return fl(hi) - fl(lo - 1);
}

}  // namespace

Int affine_length(const RootDatum& d, const AffineElement& w) {
  Int l = 0;
  for_each_inversion_range(d, w, [&](int, Int lo, Int hi) { l += hi - lo + 1; });
  return l;
}

Rational q_of_affine(const RootDatum& d, const LabelFunction& q, const AffineElement& w) {
  Rational e = 0;
  for_each_inversion_range(d, w, [&](int a, Int lo, Int hi) {
    const Int total = hi - lo + 1;
    if (!d.doubled[a]) {
      e += q.f[a] * rat(total);
      return;
    }
    // label of (alpha^v, k + 1): even class f, odd class f + g
    const Int even = count_even(lo + 1, hi + 1);
    e += q.f[a] * rat(even) + q.odd(a) * rat(total - even);
  });
  return e;
}

Rational inner_product(const RootDatum& d, const IntVector& x, const IntVector& y) {
  const int n = d.rank;
  RatMatrix C(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) C(j, i) = rat(d.cartan(j, i));
  auto Cinv = inverse(C);
  auto split = [&](const IntVector& v, RatVector& coeff, RatVector& central) {
    RatVector p(n);
    for (int j = 0; j < n; ++j) p[j] = rat(d.pair(v, j));
    coeff = n ? Cinv->apply(p) : RatVector{};
    central = to_rat(v);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d.dim; ++k) central[k] -= coeff[i] * rat(d.roots[i][k]);
  };
  RatVector cx, zx, cy, zy;
  split(x, cx, zx);
  split(y, cy, zy);
  Rational s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // (a_i, a_j) = A_ij |a_i|^2 / 2
      const Rational g = rat(d.cartan(i, j)) * d.sq_length[i] / 2;
      s += cx[i] * g * cy[j];
    }
  for (int k = 0; k < d.dim; ++k) s += zx[k] * zy[k];
  return s;
}

double NormValue::value() const { return static_cast<double>(length) + std::sqrt(central_sq.get_d()); }

NormValue norm_N(const RootDatum& d, const AffineElement& w) {
  NormValue v;
  v.length = affine_length(d, w);
  const int n = d.rank;
  if (d.dim > n) {
    // central component of x: subtract the part in Q tensor Q with the same coroot pairings
    RatMatrix C(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) C(j, i) = rat(d.cartan(j, i));
    RatVector p(n);
    for (int j = 0; j < n; ++j) p[j] = rat(d.pair(w.x, j));
    const RatVector c = n ? inverse(C)->apply(p) : RatVector{};
    RatVector z = to_rat(w.x);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d.dim; ++k) z[k] -= c[i] * rat(d.roots[i][k]);
    for (const auto& zk : z) v.central_sq += zk * zk;
  }
  return v;
}

std::vector<AffineNode> affine_nodes(const RootDatum& d) {
  std::vector<AffineNode> nodes;
  const auto hs = d.highest_short_roots();
  for (int c = 0; c < d.ncomponents; ++c) {
    AffineNode a;
    a.id = d.ncomponents == 1 ? "0" : "0." + std::to_string(c);
    a.orbit = d.orbit[hs[c]];
    a.even = true;  // q(s_0) is the label of (-theta^v, 2)
    a.root = hs[c];
    nodes.push_back(a);
  }
  for (int i = 0; i < d.rank; ++i) {
    AffineNode a;
    a.id = std::to_string(i + 1);
    a.orbit = d.orbit[i];
    a.even = false;
    a.simple = i;
    a.root = i;
    nodes.push_back(a);
  }
  return nodes;
}

namespace {

std::pair<int, int> class_key(const RootDatum& d, const AffineNode& a) {
  const bool dbl = d.doubled[a.root];
  return {a.orbit, dbl ? (a.even ? 0 : 1) : -1};
}

}  // namespace

std::vector<std::vector<std::string>> node_classes(const RootDatum& d) {
  std::map<std::pair<int, int>, std::vector<std::string>> m;
  for (const auto& a : affine_nodes(d)) m[class_key(d, a)].push_back(a.id);
  std::vector<std::vector<std::string>> out;
  for (auto& [k, v] : m) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

LabelFunction labels_from_nodes(const RootDatum& d, const std::map<std::string, Rational>& node_f) {
  std::map<std::pair<int, int>, std::pair<Rational, std::string>> cls;
  for (const auto& a : affine_nodes(d)) {
    auto it = node_f.find(a.id);
    if (it == node_f.end()) throw std::invalid_argument("missing label for affine node " + a.id);
    const auto key = class_key(d, a);
    auto c = cls.find(key);
    if (c == cls.end())
      cls[key] = {it->second, a.id};
    else if (c->second.first != it->second)
      throw std::invalid_argument("labels of W-conjugate affine nodes " + c->second.second + " and " + a.id +
                                  " differ");
  }
  for (const auto& [id, v] : node_f) {
    bool known = false;
    for (const auto& a : affine_nodes(d)) known = known || a.id == id;
    if (!known) throw std::invalid_argument("unknown affine node id " + id);
  }
  LabelFunction q;
  q.f.resize(d.nroots());
  q.g.resize(d.nroots());
  for (int a = 0; a < d.nroots(); ++a) {
    const int o = d.orbit[a];
    if (!d.doubled[a]) {
      q.f[a] = cls.at({o, -1}).first;
      q.g[a] = 0;
    } else {
      if (!cls.count({o, 0}) || !cls.count({o, 1})) throw std::logic_error("doubled orbit without both label classes");
      q.f[a] = cls.at({o, 0}).first;
      q.g[a] = cls.at({o, 1}).first - q.f[a];
    }
  }
  return q;
}

LabelFunction equal_labels(const RootDatum& d, const Rational& f) {
  std::map<std::string, Rational> m;
  for (const auto& a : affine_nodes(d)) m[a.id] = f;
  return labels_from_nodes(d, m);
}

std::map<std::string, Rational> node_labels(const RootDatum& d, const LabelFunction& q) {
  std::map<std::string, Rational> m;
  for (const auto& a : affine_nodes(d)) m[a.id] = (d.doubled[a.root] && !a.even) ? q.odd(a.root) : q.f[a.root];
  return m;
}

Rational q_of_w(const RootDatum& d, const LabelFunction& q, const WeylElement& w) {
  Rational e = 0;
  for (int a = 0; a < d.npos; ++a)
    if (!d.positive(w.perm[a])) e += q.odd(a);
  return e;
}

Rational q_of_longest(const RootDatum& d, const LabelFunction& q) {
  Rational e = 0;
  for (int a = 0; a < d.npos; ++a) e += q.odd(a);
  return e;
}

Rational q_of_subsystem(const RootDatum& d, const LabelFunction& q, const std::vector<int>& roots) {
  Rational e = 0;
  for (int a : roots)
    if (d.positive(a)) e += q.odd(a);
  return e;
}

std::vector<int> parabolic_roots(const RootDatum& d, const std::vector<int>& simple) {
  std::vector<bool> in(d.rank, false);
  for (int i : simple) in[i] = true;
  std::vector<int> out;
  for (int a = 0; a < d.nroots(); ++a) {
    bool ok = true;
    for (int i = 0; i < d.rank && ok; ++i)
      if (!in[i] && d.root_coeffs[a][i] != 0) ok = false;
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<ParabolicClass> parabolic_classes(const RootDatum& d, const std::vector<WeylElement>& W) {
  const int n = d.rank;
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<std::vector<int>, int> by_roots;
  std::vector<std::vector<int>> rootsets;
  for (size_t k = 0; k < subsets.size(); ++k) {
    rootsets.push_back(parabolic_roots(d, subsets[k]));
    by_roots[rootsets.back()] = static_cast<int>(k);
  }
  std::vector<int> cls(subsets.size(), -1);
  std::vector<ParabolicClass> out;
  for (size_t k = 0; k < subsets.size(); ++k) {
    if (cls[k] >= 0) continue;
    const int id = static_cast<int>(out.size());
    ParabolicClass pc;
    pc.simple = subsets[k];
    pc.roots = rootsets[k];
    cls[k] = id;
    for (const auto& w : W) {
      std::vector<int> img;
      for (int a : rootsets[k]) img.push_back(w.perm[a]);
      std::sort(img.begin(), img.end());
      auto it = by_roots.find(img);
      if (it != by_roots.end()) cls[it->second] = id;
    }
    out.push_back(pc);
  }
  for (size_t k = 0; k < subsets.size(); ++k) out[cls[k]].members.push_back(subsets[k]);
  return out;
}

QuotientDatum quotient_datum(const RootDatum& d, const std::vector<int>& simple) {
  const int p = static_cast<int>(simple.size());
  QuotientDatum qd;
  IntMatrix Phi(p, d.dim);
  for (int r = 0; r < p; ++r)
    for (int k = 0; k < d.dim; ++k) Phi(r, k) = d.coroots[simple[r]][k];
  if (p > 0) {
    const IntMatrix H = hermite_rows(Phi.transpose());  // rows: basis of the image lattice
    if (H.rows() != p) throw std::logic_error("parabolic coroots are dependent");
    qd.basis = H.transpose();
    const auto Minv = inverse(RatMatrix::from(qd.basis));
    qd.pullback = IntMatrix(p, d.dim);
    const RatMatrix PB = *Minv * RatMatrix::from(Phi);
    for (int i = 0; i < p; ++i)
      for (int k = 0; k < d.dim; ++k) qd.pullback(i, k) = to_int64(PB(i, k));
  } else {
    qd.basis = IntMatrix(0, 0);
    qd.pullback = IntMatrix(0, d.dim);
  }
  std::vector<IntVector> sr, sc;
  for (int r = 0; r < p; ++r) {
    sr.push_back(qd.pullback.apply(d.roots[simple[r]]));
    sc.push_back(qd.basis.row(r));
  }
  std::string name = d.name + "_P{";
  for (int r = 0; r < p; ++r) name += (r ? "," : "") + std::to_string(simple[r] + 1);
  name += "}";
  qd.datum = make_datum(name, p, sr, sc);
  for (int a = 0; a < qd.datum.nroots(); ++a) {
    IntVector x(d.dim, 0);
    for (int r = 0; r < p; ++r) x = add(x, scale(d.roots[simple[r]], qd.datum.root_coeffs[a][r]));
    const int b = d.find(x);
    if (b < 0) throw std::logic_error("quotient root has no parent");
    qd.root_map.push_back(b);
    if (qd.datum.doubled[a] != d.doubled[b]) throw std::logic_error("doubling not preserved by quotient");
  }
  return qd;
}

RootDatum full_subdatum(const RootDatum& d, const std::vector<int>& simple) {
  std::vector<IntVector> sr, sc;
  for (int i : simple) {
    sr.push_back(d.roots[i]);
    sc.push_back(d.coroots[i]);
  }
  return make_datum(d.name + "^P", d.dim, sr, sc);
}

LabelFunction restrict_labels(const LabelFunction& q, const std::vector<int>& root_map) {
  LabelFunction r;
  for (int b : root_map) {
    r.f.push_back(q.f[b]);
    r.g.push_back(q.g[b]);
  }
  return r;
}

std::string datum_to_json(const RootDatum& d, const LabelFunction* q) {
  nlohmann::ordered_json j;
  j["type"] = d.name;
  j["lattice"] = to_string(d.mode);
  nlohmann::json basis = nlohmann::json::array();
  for (int c = 0; c < d.lattice_basis.cols(); ++c) basis.push_back(d.lattice_basis.col(c));
  j["basis"] = basis;
  if (q) {
    nlohmann::ordered_json labels;
    for (const auto& [id, v] : node_labels(d, *q)) labels[id] = v.get_str();
    j["labels"] = labels;
  }
  return j.dump(2);
}

DatumSpec datum_spec_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  DatumSpec s;
  s.type = CartanType::parse(j.at("type").get<std::string>());
  const std::string lat = j.value("lattice", std::string("Q"));
  if (lat == "Q")
    s.mode = LatticeMode::Root;
  else if (lat == "P")
    s.mode = LatticeMode::Weight;
  else if (lat == "explicit") {
    s.mode = LatticeMode::Explicit;
    std::vector<IntVector> cols = j.at("basis").get<std::vector<IntVector>>();
    s.basis = IntMatrix::from_cols(cols);
  } else
    throw std::invalid_argument("unknown lattice mode '" + lat + "'");
  if (j.contains("labels"))
    for (const auto& [k, v] : j.at("labels").items())
      s.node_f[k] = v.is_string() ? parse_rational(v.get<std::string>()) : parse_rational(v.dump());
  return s;
}

}  // namespace hpk
