#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpk/rational.hpp"

namespace hpk {

using Int = long long;
using IntVector = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, Int k);
IntVector negate(const IntVector& a);
bool is_zero(const IntVector& a);
std::string to_string(const IntVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, int cols = -1);
  static IntMatrix from_cols(const std::vector<IntVector>& cols, int rows = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Int operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntVector row(int i) const;
  IntVector col(int j) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;

  IntVector apply(const IntVector& x) const;  // M x
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int dst, int src, Int k);  // row dst += k * row src
  void add_col_multiple(int dst, int src, Int k);
  void negate_row(int i);

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

struct SmithForm {
  IntMatrix D, U, V;  // U * M * V = D
  int rank = 0;
  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& M);

// Canonical row-style Hermite basis of the lattice spanned by the rows.
IntMatrix hermite_rows(const IntMatrix& generators);
// Z-basis (Hermite form) of the saturation Q<rows> ∩ Z^d.
IntMatrix saturate_rows(const IntMatrix& generators);
// Hermite basis (rows) of {x in Z^n : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& M);

mpz_class determinant(const IntMatrix& M);
int rank(const IntMatrix& M);
IntMatrix inverse_unimodular(const IntMatrix& M);
// adjugate, so that M * adj = det * I
IntMatrix adjugate(const IntMatrix& M);

struct TorsionOrder {
  bool finite = true;  // false when the generators do not span Q^d
  mpz_class order = 1; // order of the torsion subgroup of the quotient
};
// Generators are the columns of the matrix, living in Z^ambient_rank.
TorsionOrder torsion_order(const IntMatrix& generators, int ambient_rank);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}
  static RatMatrix identity(int n);
  static RatMatrix from(const IntMatrix& m);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  RatVector row(int i) const;
  RatVector apply(const RatVector& x) const;
  RatMatrix transpose() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// Reduced row echelon form; pivot columns returned through the second argument.
RatMatrix rref(const RatMatrix& A, std::vector<int>* pivots = nullptr);
int rank(const RatMatrix& A);
std::optional<RatMatrix> inverse(const RatMatrix& A);

struct AffineSolution {
  enum class Kind { Unique, Affine, Empty };
  Kind kind = Kind::Empty;
  RatVector point;                   // particular solution (free variables zero)
  std::vector<RatVector> directions; // basis of the homogeneous solutions, RREF-derived
};

AffineSolution solve_affine(const RatMatrix& A, const RatVector& b);

// All u in [0,1)^d with A u ≡ c (mod Z^d); A square and nonsingular.
std::vector<RatVector> solve_congruence(const IntMatrix& A, const RatVector& c);

RatVector to_rat(const IntVector& v);
Rational dot(const IntVector& a, const RatVector& b);

}  // namespace hpk
