#include "doctest.h"

#include <cmath>

#include "hpk/plancherel.hpp"
#include "hpk/residue.hpp"

using namespace hpk;

namespace {

RootDatum datum(const std::string& tag, LatticeMode mode = LatticeMode::Root) {
  return build_datum(CartanType::parse(tag), mode);
}

double point_mass(const LocalMassReport& r, const CosetResult& cr, const TorusPoint& p,
                  const std::vector<WeylElement>& W, int dim) {
  const auto key = canonical_coset_key(W, IntMatrix::identity(dim), p);
  for (const auto& m : r.masses)
    if (cr.cosets[m.orbit].key == key) return m.value.real();
  return 0;
}

}  // namespace

TEST_CASE("divisor form agrees with the kernel") {
  for (const char* tag : {"A1", "B2", "G2", "A2"}) {
    const auto d = datum(tag);
    const auto q = equal_labels(d);
    const auto D = omega_divisor(d, q);
    const TorusPoint t(RatVector(d.dim, Rational(2, 7)), RatVector(d.dim, Rational(-1, 3)));
    ComplexVector z;
    for (int i = 0; i < d.dim; ++i) {
      IntVector e(d.dim, 0);
      e[i] = 1;
      z.push_back(t.eval(e).evaluate(2.5));
    }
    const Complex kernel = omega_kernel(d, q, t).evaluate(2.5) * std::pow(2.5, -q_of_longest(d, q).get_d());
    const Complex mine = evaluate_divisor(d, D, z, 2.5);
    CHECK_MESSAGE(std::abs(kernel - mine) < 1e-10 * std::abs(kernel), tag);
  }
}

TEST_CASE("trapezoidal rule on monomials") {
  for (int k = -3; k <= 3; ++k) {
    const Complex v = torus_integral([k](const ComplexVector& z) { return std::pow(z[0], k); }, {1.7}, 64);
    CHECK(std::abs(v - (k == 0 ? 1.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("A1 masses") {
  const auto d = datum("A1");
  const auto q = equal_labels(d);
  for (double qn : {2.0, 3.0}) {
    const auto r = shift_and_collect(d, q, qn);
    CHECK(r.ok());
    CHECK(std::abs(r.global - 1.0) < 1e-8);
    CHECK(std::abs(r.continuous - 2 / (qn + 1)) < 1e-8);
    REQUIRE(r.masses.size() == 1);
    CHECK(std::abs(r.masses[0].value - (qn - 1) / (qn + 1)) < 1e-8);
  }
}

TEST_CASE("B2 masses add up and the Steinberg mass matches") {
  const auto d = datum("B2");
  const auto q = equal_labels(d);
  const auto W = weyl_elements(d);
  const auto cr = residual_cosets(d, q, W);
  const auto r = shift_and_collect(d, q, 2.0);
  CHECK(r.ok());
  CHECK(std::abs(r.global - 1.0) < 1e-6);
  int points = 0;
  for (const auto& m : r.masses) {
    CHECK(m.value.real() > 0);
    points += m.kind == "point";
  }
  CHECK(points == 2);
  const TorusPoint st = steinberg_point(d, q);
  const double exact = plancherel_point_mass(d, q, st, W).evaluate(2.0);
  CHECK(point_mass(r, cr, st, W, d.dim) == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("A2 Steinberg mass") {
  const auto d = datum("A2");
  const auto q = equal_labels(d);
  const auto W = weyl_elements(d);
  const auto r = shift_and_collect(d, q, 2.0);
  CHECK(r.ok());
  CHECK(point_mass(r, residual_cosets(d, q, W), steinberg_point(d, q), W, d.dim) ==
        doctest::Approx(1.0 / 7).epsilon(1e-9));
}

TEST_CASE("A2 with the weight lattice splits the Steinberg mass over the center") {
  const auto d = datum("A2", LatticeMode::Weight);
  const auto r = shift_and_collect(d, equal_labels(d), 2.0);
  CHECK(r.ok());
  int points = 0;
  for (const auto& m : r.masses)
    if (m.kind == "point") {
      ++points;
      CHECK(m.value.real() == doctest::Approx(1.0 / 21).epsilon(1e-9));
    }
  CHECK(points == 3);
}

TEST_CASE("masses do not depend on the base point or the resolution") {
  for (const char* tag : {"A1", "B2"}) {
    const auto d = datum(tag);
    const auto q = equal_labels(d);
    const auto a = shift_and_collect(d, q, 2.0);
    const auto b = shift_and_collect(d, q, 2.0, {default_base_point(d, q, 1), 0});
    ContourSpec fine;
    fine.resolution = d.rank == 1 ? 8192 : 1024;
    const auto c = shift_and_collect(d, q, 2.0, fine);
    REQUIRE(a.masses.size() == b.masses.size());
    REQUIRE(a.masses.size() == c.masses.size());
    for (size_t k = 0; k < a.masses.size(); ++k) {
      CHECK(std::abs(a.masses[k].value - b.masses[k].value) < 1e-8);
      CHECK(std::abs(a.masses[k].value - c.masses[k].value) < 10 * a.tolerance);
    }
  }
}

TEST_CASE("worker count does not change the bits") {
  const auto d = datum("B2");
  const auto q = equal_labels(d);
  const auto a = shift_and_collect(d, q, 2.0, {}, 1);
  const auto b = shift_and_collect(d, q, 2.0, {}, 3);
  CHECK(mass_report_to_json(a) == mass_report_to_json(b));
}

TEST_CASE("inner residues vanish away from residual cosets") {
  {
    const auto d = datum("A1");
    const auto q = equal_labels(d);
    CHECK(vanishing_cycle_check(d, q, 2.0, 0, CycloValue(0, 2)).vanishes);
    CHECK_FALSE(vanishing_cycle_check(d, q, 2.0, 0, CycloValue(0, -1)).vanishes);
  }
  {
    const auto d = datum("B2");
    const auto q = equal_labels(d);
    // {alpha(t) = 1} carries only zeros; {alpha(t) = q^{-1}} is a residual line
    CHECK(vanishing_cycle_check(d, q, 2.0, 0, CycloValue(0, 0)).vanishes);
    CHECK_FALSE(vanishing_cycle_check(d, q, 2.0, 0, CycloValue(0, -1)).vanishes);
  }
}

TEST_CASE("unsupported data are refused") {
  CHECK_THROWS(shift_and_collect(datum("A3"), equal_labels(datum("A3")), 2.0));
}
