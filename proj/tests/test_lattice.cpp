#include "doctest.h"

#include <random>

#include "hpk/lattice.hpp"

using namespace hpk;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix M(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M(i, j) = dist(rng);
  return M;
}

}  // namespace

TEST_CASE("parse rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -0.25 ") == Rational(-1, 4));
  CHECK(parse_rational("1e2") == Rational(100));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(frac_part(Rational(-1, 3)) == Rational(2, 3));
  CHECK(rat_gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
}

TEST_CASE("smith form reconstructs and divides") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const IntMatrix M = random_matrix(rng, r, c);
    const SmithForm s = smith_normal_form(M);
    CHECK(s.U * M * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    const auto diag = s.diagonal();
    for (size_t i = 0; i + 1 < diag.size(); ++i)
      if (diag[i + 1] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    CHECK(s.rank == rank(M));
  }
}

TEST_CASE("hermite form is canonical") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix M = random_matrix(rng, 3, 3);
    IntMatrix G = random_matrix(rng, 3, 3, -1, 1);
    if (abs(determinant(G)) != 1) continue;
    CHECK(hermite_rows(G * M) == hermite_rows(M));
  }
}

TEST_CASE("kernel and saturation") {
  const IntMatrix M = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  const IntMatrix K = integer_kernel(M);
  CHECK(K.rows() == 2);
  for (int i = 0; i < K.rows(); ++i) CHECK(is_zero(M.apply(K.row(i))));
  const IntMatrix S = saturate_rows(IntMatrix::from_rows({{2, 0}, {0, 2}}));
  CHECK(S == IntMatrix::identity(2));
  CHECK(saturate_rows(IntMatrix::from_rows({{2, 4}})) == IntMatrix::from_rows({{1, 2}}));
}

TEST_CASE("torsion order of quotients") {
  const auto t = torsion_order(IntMatrix::from_rows({{2, -1}, {-1, 2}}), 2);
  CHECK(t.finite);
  CHECK(t.order == 3);
  CHECK_FALSE(torsion_order(IntMatrix::from_rows({{1}, {1}}), 2).finite);
}

TEST_CASE("adjugate and determinant agree") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix M = random_matrix(rng, 4, 4);
    const Int det = to_int64(determinant(M));
    const IntMatrix P = M * adjugate(M);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(P(i, j) == (i == j ? det : 0));
  }
}

TEST_CASE("congruence solutions") {
  const IntMatrix A = IntMatrix::from_rows({{2, -1}, {-1, 2}});
  const auto sols = solve_congruence(A, {Rational(0), Rational(0)});
  CHECK(sols.size() == 3);
  for (const auto& u : sols) {
    const RatVector v{2 * u[0] - u[1], -u[0] + 2 * u[1]};
    CHECK(is_integer(v[0]));
    CHECK(is_integer(v[1]));
  }
  const auto half = solve_congruence(IntMatrix::from_rows({{2}}), {Rational(1, 2)});
  REQUIRE(half.size() == 2);
  CHECK(half[0][0] == Rational(1, 4));
  CHECK(half[1][0] == Rational(3, 4));
}

TEST_CASE("affine solve") {
  const RatMatrix A = RatMatrix::from(IntMatrix::from_rows({{1, 1}, {2, 2}}));
  const auto s = solve_affine(A, {Rational(1), Rational(2)});
  CHECK(s.kind == AffineSolution::Kind::Affine);
  CHECK(s.directions.size() == 1);
  CHECK(solve_affine(A, {Rational(1), Rational(3)}).kind == AffineSolution::Kind::Empty);
}

TEST_CASE("overflow is detected") {
  CHECK_THROWS_AS(checked_mul(Int(1) << 62, 4), std::overflow_error);
}
