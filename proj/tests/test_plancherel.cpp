#include "doctest.h"

#include <cmath>

#include "hpk/plancherel.hpp"

using namespace hpk;

namespace {

RootDatum datum(const std::string& tag, LatticeMode mode = LatticeMode::Root) {
  return build_datum(CartanType::parse(tag), mode);
}

QRational qpoly(std::initializer_list<std::pair<int, int>> terms) {
  QPolynomial p;
  for (auto [e, c] : terms) p += QPolynomial::monomial(e, c);
  return QRational(p);
}

}  // namespace

TEST_CASE("Steinberg density on A1") {
  const auto d = datum("A1");
  const auto q = equal_labels(d);
  const auto m = m_point(d, q, steinberg_point(d, q));
  REQUIRE(m.rational);
  // -(q - 1)/(q + 1)
  CHECK(*m.rational == -(qpoly({{1, 1}, {0, -1}}) / qpoly({{1, 1}, {0, 1}})));
  CHECK(m.evaluate(2).real() == doctest::Approx(-1.0 / 3));
}

TEST_CASE("non-residual input is rejected") {
  const auto d = datum("A1");
  CHECK_THROWS_AS(m_point(d, equal_labels(d), TorusPoint::identity(1)), std::invalid_argument);
}

TEST_CASE("Poincare product against the exponent formula") {
  for (const char* tag : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    const auto d = datum(tag);
    const auto p = poincare_product(d, equal_labels(d));
    REQUIRE(p.valid);
    CHECK_MESSAGE(p.value == equal_label_poincare(d), tag);
  }
  // exponents 1, 2 of A2, written out by hand
  const auto a2 = poincare_product(datum("A2"), equal_labels(datum("A2"))).value;
  const QRational qm1 = qpoly({{1, 1}, {0, -1}});
  CHECK(a2 == qpoly({{3, 1}, {0, -1}}) / (qm1 * qm1 * qm1));
  CHECK(weyl_exponents(datum("G2")) == std::vector<int>{1, 5});
  CHECK(weyl_exponents(datum("B3")) == std::vector<int>{1, 3, 5});
}

TEST_CASE("vanishing labels make the series diverge") {
  const auto d = datum("B2");
  CHECK_FALSE(poincare_product(d, equal_labels(d, 0)).valid);
}

TEST_CASE("truncated affine sums approach the product") {
  for (const char* tag : {"A1", "A2", "B2", "G2"}) {
    const auto d = datum(tag);
    const auto q = equal_labels(d);
    const double prod = poincare_product(d, q).value.evaluate(2.0);
    const auto s = poincare_truncated(d, q, 2.0, 40);
    CHECK_MESSAGE(std::abs(prod - s.value) <= s.tail_bound, tag);
    CHECK_MESSAGE(std::abs(prod - s.value) <= 1e-6, tag);
  }
  for (const char* tag : {"A3", "B3", "C3"})
    for (double qn : {2.0, 3.0}) {
      const auto d = datum(tag);
      const auto q = equal_labels(d);
      const double prod = poincare_product(d, q).value.evaluate(qn);
      const auto s = poincare_truncated(d, q, qn, 8);
      CHECK_MESSAGE(prod - s.value >= 0, tag);
      CHECK_MESSAGE(prod - s.value <= s.tail_bound, tag);
    }
}

TEST_CASE("unequal labels: product against the affine sum") {
  const auto d = datum("B2");
  const auto q = labels_from_nodes(d, {{"0", Rational(1)}, {"1", Rational(2)}, {"2", Rational(3, 2)}});
  const auto p = poincare_product(d, q);
  REQUIRE(p.valid);
  const auto s = poincare_truncated(d, q, 2.0, 30);
  CHECK(std::abs(p.value.evaluate(2.0) - s.value) <= s.tail_bound);
}

TEST_CASE("Steinberg point masses") {
  {
    const auto d = datum("A1");
    const auto q = equal_labels(d);
    const auto W = weyl_elements(d);
    const auto m = plancherel_point_mass(d, q, steinberg_point(d, q), W);
    CHECK(m == qpoly({{1, 1}, {0, -1}}) / qpoly({{1, 1}, {0, 1}}));
  }
  {
    const auto d = datum("A2");
    const auto q = equal_labels(d);
    const auto W = weyl_elements(d);
    const auto m = plancherel_point_mass(d, q, steinberg_point(d, q), W);
    const auto s = poincare_truncated(d, q, 2.0, 40);
    CHECK(m.evaluate(2.0) == doctest::Approx(1.0 / s.value).epsilon(1e-9));
    CHECK(*m.evaluate_exact(2) == Rational(1, 7));
  }
  // the other residual orbit of B2 is not Steinberg
  const auto d = datum("B2");
  const auto q = equal_labels(d);
  const auto W = weyl_elements(d);
  const TorusPoint st = canonical_in_orbit(W, steinberg_point(d, q)).first;
  int rejected = 0;
  for (const auto& rp : residual_points(d, q, W).points)
    if (rp.point != st) {
      CHECK_THROWS_AS(plancherel_point_mass(d, q, rp.point, W), std::invalid_argument);
      ++rejected;
    }
  CHECK(rejected == 1);
}

TEST_CASE("density is constant on Weyl orbits of residual points") {
  for (const char* tag : {"B2", "G2", "A3"}) {
    const auto d = datum(tag, LatticeMode::Weight);
    const auto q = equal_labels(d);
    const auto W = weyl_elements(d);
    for (const auto& rp : residual_points(d, q, W).points) {
      const auto base = m_point(d, q, rp.point);
      for (size_t k = 0; k < W.size(); k += 3) {
        const auto other = m_point(d, q, act(W[k], rp.point));
        CHECK(std::abs(base.evaluate(2.5) - other.evaluate(2.5)) < 1e-9 * std::abs(base.evaluate(2.5)));
      }
    }
  }
}

TEST_CASE("even labels give integral exponents at real points") {
  const auto d = datum("B3");
  const auto q = equal_labels(d, 2);
  const auto W = weyl_elements(d);
  for (const auto& rp : residual_points(d, q, W).points) {
    if (!rp.point.is_real()) continue;
    const auto m = m_point(d, q, rp.point);
    REQUIRE(m.rational);
    CHECK(m.rational->has_integer_exponents());
  }
}

TEST_CASE("inverting the labels preserves the modulus of the density") {
  for (const char* tag : {"A1", "B2"}) {
    const auto d = datum(tag);
    const auto q = equal_labels(d);
    const auto qi = equal_labels(d, -1);
    const auto W = weyl_elements(d);
    for (const auto& rp : residual_points(d, q, W).points) {
      const TorusPoint mirror = rp.point.scale_split(-1);
      const double a = std::abs(m_point(d, q, rp.point).evaluate(2.0));
      const double b = std::abs(m_point(d, qi, mirror).evaluate(2.0));
      CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
  }
}

TEST_CASE("subregular formal dimension of C_n") {
  for (int n = 3; n <= 5; ++n) {
    const auto rep = fdim_subregular_C(n);
    CHECK_MESSAGE(rep.match, n);
    CHECK_MESSAGE(rep.numeric_match, n);
  }
}

TEST_CASE("upper density is real and positive on tempered forms") {
  for (const char* tag : {"A2", "B2", "G2", "B3"}) {
    const auto d = datum(tag);
    const auto q = equal_labels(d);
    const auto W = weyl_elements(d);
    const auto cr = residual_cosets(d, q, W);
    for (const auto& L : cr.cosets) {
      if (L.dim == 0) continue;
      for (int s = 0; s < 200; ++s) {
        const TorusPoint t = sample_tempered(L, 1000 * s + 17);
        const auto v = m_upperL(d, q, L, t, 2.0);
        if (v.singular) continue;
        CHECK(std::abs(v.value.imag()) < 1e-9 * std::abs(v.value));
        CHECK(v.value.real() > 0);
        CHECK(v.value.real() == doctest::Approx(v.modulus_form).epsilon(1e-9));
      }
    }
  }
}
