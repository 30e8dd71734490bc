#include "hpk/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hpk {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

IntVector scale(const IntVector& a, Int k) {
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

IntVector negate(const IntVector& a) { return scale(a, -1); }

bool is_zero(const IntVector& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, int cols) {
  const int c = rows.empty() ? std::max(cols, 0) : static_cast<int>(rows[0].size());
  IntMatrix m(static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVector>& cols, int rows) {
  return from_rows(cols, rows).transpose();
}

IntVector IntMatrix::row(int i) const {
  IntVector r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntVector IntMatrix::col(int j) const {
  IntVector c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("dimension mismatch in apply");
  IntVector r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] = checked_add(r[i], checked_mul((*this)(i, j), x[j]));
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
    }
  return c;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(int dst, int src, Int k) {
  if (k == 0) return;
  for (int j = 0; j < cols_; ++j) (*this)(dst, j) = checked_add((*this)(dst, j), checked_mul(k, (*this)(src, j)));
}

void IntMatrix::add_col_multiple(int dst, int src, Int k) {
  if (k == 0) return;
  for (int i = 0; i < rows_; ++i) (*this)(i, dst) = checked_add((*this)(i, dst), checked_mul(k, (*this)(i, src)));
}

void IntMatrix::negate_row(int i) {
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) os << (i ? "," : "") << hpk::to_string(row(i));
  os << "]";
  return os.str();
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// floor division toward -inf is not needed; truncation keeps remainders smaller in absolute value
Int quot(Int a, Int b) { return a / b; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  const int m = M.rows(), n = M.cols();
  IntMatrix A = M;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);
  int t = 0;
  for (; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero absolute value in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (A(i, j) != 0 && (pi < 0 || std::llabs(A(i, j)) < std::llabs(A(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    A.swap_rows(t, pi);
    U.swap_rows(t, pi);
    A.swap_cols(t, pj);
    V.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        const Int k = quot(A(i, t), A(t, t));
        A.add_row_multiple(i, t, -k);
        U.add_row_multiple(i, t, -k);
        if (A(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        const Int k = quot(A(t, j), A(t, t));
        A.add_col_multiple(j, t, -k);
        V.add_col_multiple(j, t, -k);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        int bi = t, bj = t;
        for (int i = t + 1; i < m; ++i)
          if (A(i, t) != 0 && std::llabs(A(i, t)) < std::llabs(A(bi, bj))) bi = i, bj = t;
        for (int j = t + 1; j < n; ++j)
          if (A(t, j) != 0 && std::llabs(A(t, j)) < std::llabs(A(bi, bj))) bi = t, bj = j;
        A.swap_rows(t, bi);
        U.swap_rows(t, bi);
        A.swap_cols(t, bj);
        V.swap_cols(t, bj);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      A.add_row_multiple(t, bad, 1);
      U.add_row_multiple(t, bad, 1);
    }
    if (A(t, t) < 0) {
      A.negate_row(t);
      U.negate_row(t);
    }
  }
  SmithForm s{A, U, V, 0};
  for (int i = 0; i < std::min(m, n); ++i)
    if (A(i, i) != 0) s.rank = i + 1;
  return s;
}

IntMatrix hermite_rows(const IntMatrix& generators) {
  IntMatrix A = generators;
  const int m = A.rows(), n = A.cols();
  int r = 0;
  std::vector<int> pivcols;
  for (int c = 0; c < n && r < m; ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < m; ++i)
        if (A(i, c) != 0 && (best < 0 || std::llabs(A(i, c)) < std::llabs(A(best, c)))) best = i;
      if (best < 0) break;
      A.swap_rows(r, best);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (A(i, c) == 0) continue;
        A.add_row_multiple(i, r, -quot(A(i, c), A(r, c)));
        if (A(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (A(r, c) == 0) continue;
    if (A(r, c) < 0) A.negate_row(r);
    for (int i = 0; i < r; ++i) {
      // reduce into [0, pivot)
      Int k = A(i, c) / A(r, c);
      if (A(i, c) - k * A(r, c) < 0) --k;
      A.add_row_multiple(i, r, -k);
    }
    pivcols.push_back(c);
    ++r;
  }
  IntMatrix H(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) H(i, j) = A(i, j);
  return H;
}

IntMatrix inverse_unimodular(const IntMatrix& M) {
  auto inv = inverse(RatMatrix::from(M));
  if (!inv) throw std::invalid_argument("matrix is singular");
  IntMatrix R(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) R(i, j) = to_int64((*inv)(i, j));
  return R;
}

IntMatrix saturate_rows(const IntMatrix& generators) {
  const int n = generators.cols();
  if (generators.rows() == 0) return IntMatrix(0, n);
  const SmithForm s = smith_normal_form(generators);
  const IntMatrix Vinv = inverse_unimodular(s.V);
  IntMatrix B(s.rank, n);
  for (int i = 0; i < s.rank; ++i)
    for (int j = 0; j < n; ++j) B(i, j) = Vinv(i, j);
  return hermite_rows(B);
}

IntMatrix integer_kernel(const IntMatrix& M) {
  const int n = M.cols();
  if (M.rows() == 0) return IntMatrix::identity(n);
  const SmithForm s = smith_normal_form(M);
  IntMatrix K(n - s.rank, n);
  for (int j = s.rank; j < n; ++j)
    for (int i = 0; i < n; ++i) K(j - s.rank, i) = s.V(i, j);
  return hermite_rows(K);
}

mpz_class determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = M.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = zint(M(i, j));
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i * n + k] != 0) {
          sw = i;
          break;
        }
      if (sw < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[sw * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = v;
      }
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

int rank(const IntMatrix& M) { return rank(RatMatrix::from(M)); }

IntMatrix adjugate(const IntMatrix& M) {
  const int n = M.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = M(r, c);
        }
        ++rr;
      }
      const Int d = to_int64(determinant(minor));
      adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

TorsionOrder torsion_order(const IntMatrix& generators, int ambient_rank) {
  if (generators.rows() != ambient_rank && !(generators.cols() == 0))
    throw std::invalid_argument("generator columns must live in Z^ambient_rank");
  TorsionOrder t;
  if (generators.cols() == 0) {
    t.finite = ambient_rank == 0;
    return t;
  }
  const SmithForm s = smith_normal_form(generators);
  t.finite = s.rank == ambient_rank;
  for (int i = 0; i < s.rank; ++i) t.order *= zint(s.D(i, i));
  return t;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = rat(m(i, j));
  return r;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, int cols) {
  const int c = rows.empty() ? std::max(cols, 0) : static_cast<int>(rows[0].size());
  RatMatrix m(static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  return m;
}

RatVector RatMatrix::row(int i) const {
  RatVector r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  RatVector r(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix rref(const RatMatrix& A, std::vector<int>* pivots) {
  RatMatrix R = A;
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < R.cols() && r < R.rows(); ++c) {
    int p = -1;
    for (int i = r; i < R.rows(); ++i)
      if (R(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < R.cols(); ++j) std::swap(R(p, j), R(r, j));
    const Rational inv = 1 / R(r, c);
    for (int j = 0; j < R.cols(); ++j) R(r, j) *= inv;
    for (int i = 0; i < R.rows(); ++i) {
      if (i == r || R(i, c) == 0) continue;
      const Rational f = R(i, c);
      for (int j = 0; j < R.cols(); ++j) R(i, j) -= f * R(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return R;
}

int rank(const RatMatrix& A) {
  std::vector<int> piv;
  rref(A, &piv);
  return static_cast<int>(piv.size());
}

std::optional<RatMatrix> inverse(const RatMatrix& A) {
  const int n = A.rows();
  if (A.cols() != n) return std::nullopt;
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv;
  RatMatrix R = rref(aug, &piv);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = R(i, n + j);
  return inv;
}

AffineSolution solve_affine(const RatMatrix& A, const RatVector& b) {
  const int m = A.rows(), n = A.cols();
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve_affine: size mismatch");
  RatMatrix aug(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n) = b[i];
  }
  std::vector<int> piv;
  const RatMatrix R = rref(aug, &piv);
  AffineSolution sol;
  if (!piv.empty() && piv.back() == n) {
    sol.kind = AffineSolution::Kind::Empty;
    return sol;
  }
  sol.point.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (size_t r = 0; r < piv.size(); ++r) {
    sol.point[piv[r]] = R(static_cast<int>(r), n);
    is_pivot[piv[r]] = true;
  }
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector d(n, Rational(0));
    d[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) d[piv[r]] = -R(static_cast<int>(r), f);
    sol.directions.push_back(d);
  }
  sol.kind = sol.directions.empty() ? AffineSolution::Kind::Unique : AffineSolution::Kind::Affine;
  return sol;
}

std::vector<RatVector> solve_congruence(const IntMatrix& A, const RatVector& c) {
  const int n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("solve_congruence needs a square matrix");
  const SmithForm s = smith_normal_form(A);
  if (s.rank < n) throw std::invalid_argument("solve_congruence needs a nonsingular matrix");
  // U A V = D, w = V^{-1} u: d_i w_i ≡ (U c)_i
  RatVector Uc(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Uc[i] += rat(s.U(i, j)) * c[j];
  std::vector<RatVector> out;
  std::vector<Int> z(n, 0);
  for (;;) {
    RatVector w(n);
    for (int i = 0; i < n; ++i) w[i] = (Uc[i] + rat(z[i])) / rat(s.D(i, i));
    RatVector u(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) u[i] += rat(s.V(i, j)) * w[j];
      u[i] = frac_part(u[i]);
    }
    out.push_back(u);
    int k = 0;
    while (k < n && ++z[k] == s.D(k, k)) z[k++] = 0;
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RatVector to_rat(const IntVector& v) {
  RatVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = rat(v[i]);
  return r;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += rat(a[i]) * b[i];
  return s;
}

}  // namespace hpk
