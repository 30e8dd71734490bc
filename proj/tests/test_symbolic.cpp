#include "doctest.h"

#include <random>

#include "hpk/cfunction.hpp"

using namespace hpk;

namespace {

QRational mono(const Rational& e, const Rational& c = 1) { return QRational::monomial(e, c); }
const QRational one(Rational(1));

QRational random_qrational(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-4, 4);
  QPolynomial n, d;
  for (int k = 0; k < 3; ++k) {
    n += QPolynomial::monomial(rat(ex(rng), 2), coef(rng));
    d += QPolynomial::monomial(rat(ex(rng), 2), coef(rng));
  }
  if (d.is_zero()) d = QPolynomial(Rational(1));
  return QRational(n, d);
}

}  // namespace

TEST_CASE("canonical form of rational functions") {
  const QRational a = (mono(2) - one) / (mono(1) - one);
  CHECK(a == mono(1) + one);
  CHECK(a.is_polynomial());
  const QRational b = (mono(1) - one) / (mono(Rational(1, 2)) - one);
  CHECK(b == mono(Rational(1, 2)) + one);
  const QRational c = (mono(-1) - one) / (mono(3) - mono(2));
  CHECK(c.den().min_exponent() == 0);
  CHECK(c.den().leading_coeff() == 1);
  CHECK(QRational(c.num(), c.den()) == c);
  CHECK((mono(2) - one) / (mono(1) - one) * (mono(1) - one) == mono(2) - one);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(5);
  for (int k = 0; k < 60; ++k) {
    const QRational x = random_qrational(rng), y = random_qrational(rng), z = random_qrational(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == QRational());
    if (!x.is_zero()) CHECK(x * x.inverse() == one);
    CHECK(x.substitute_power(2).substitute_power(Rational(1, 2)) == x);
  }
}

TEST_CASE("evaluation") {
  const QRational a = (mono(1) - one) / (mono(1) + one);
  CHECK(a.evaluate_exact(Rational(2)) == Rational(1, 3));
  CHECK(mono(Rational(1, 2)).evaluate_exact(Rational(4)) == Rational(2));
  CHECK_FALSE(mono(Rational(1, 2)).evaluate_exact(Rational(2)).has_value());
  CHECK(a.evaluate(3.0) == doctest::Approx(0.5));
  CHECK(a.to_text() == "(q - 1)/(q + 1)");
  CHECK(a.to_tex() == "\\frac{q-1}{q+1}");
  CHECK(mono(Rational(-1, 2), Rational(3, 2)).to_text() == "3/2*q^(-1/2)");
}

TEST_CASE("cyclotomic arithmetic") {
  const Cyclo z3 = Cyclo::root_of_unity(Rational(1, 3));
  CHECK(z3 + z3 * z3 == Cyclo(Rational(-1)));
  CHECK(z3 * z3 * z3 == Cyclo(Rational(1)));
  const Cyclo i = Cyclo::root_of_unity(Rational(1, 4));
  CHECK(i * i == Cyclo(Rational(-1)));
  CHECK((i + i.conj()).rational_value() == Rational(0));
  const Cyclo z6 = Cyclo::root_of_unity(Rational(1, 6));
  CHECK(z6 * z6 == z3);
  CHECK((z3 + z3.conj()).rational_value() == Rational(-1));
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("rank one c-function") {
  const RootDatum d = build_datum(CartanType::parse("A1"), LatticeMode::Weight);  // alpha = 2 omega
  const LabelFunction q = equal_labels(d);
  auto at = [](const Rational& u, const Rational& r) { return TorusPoint({u / 2}, {r / 2}); };
  // alpha(t) = q
  const auto c = c_alpha(d, q, 0, at(0, 1));
  CHECK(c.zero_order == 0);
  CHECK(*c.to_qrational() == one + mono(-1));
  // alpha(t) = q^{-1}: zero
  CHECK(c_alpha(d, q, 0, at(0, -1)).zero_order == 1);
  // alpha(t) = 1: pole
  CHECK(c_alpha(d, q, 0, at(0, 0)).zero_order == -1);
  const auto D = weyl_denominator(d, at(0, 1));
  CHECK(*D.to_qrational() == one - mono(-1));
  CHECK(weyl_denominator(d, at(0, 0)).zero_order == 1);
}

TEST_CASE("doubled c-function reduces to the single factor form for equal labels") {
  const RootDatum d = build_datum(CartanType::parse("A1"), LatticeMode::Root);  // doubled
  const LabelFunction q = equal_labels(d);
  REQUIRE(d.doubled[0]);
  for (int k = -3; k <= 3; ++k)
    for (const Rational u : {Rational(0), Rational(1, 3), Rational(1, 2)}) {
      const TorusPoint t({u}, {rat(k, 2)});
      const FactorRatio c = c_alpha(d, q, 0, t);
      const CycloValue x = t.eval(d.roots[0]);
      if (x.is_one() || x == CycloValue(Rational(1, 2), 0) || c.zero_order != 0) continue;
      // (1 - q^{-1} x^{-1}) / (1 - x^{-1}) with x = alpha(t) for the reduced root
      const auto lhs = c.evaluate(2.0);
      const auto xv = x.evaluate(2.0);
      const auto rhs = (1.0 - 0.5 / xv) / (1.0 - 1.0 / xv);
      CAPTURE(x.to_text());
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("omega kernel is W0-invariant and real on the unitary torus") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(0, 11), rr(-6, 6);
  for (const char* type : {"A2", "B2", "G2", "B3", "C3"}) {
    CAPTURE(type);
    for (auto mode : {LatticeMode::Root, LatticeMode::Weight}) {
      const RootDatum d = build_datum(CartanType::parse(type), mode);
      const LabelFunction q = equal_labels(d, Rational(3, 2));
      const auto W = weyl_elements(d);
      for (int s = 0; s < 10; ++s) {
        RatVector u(d.dim), r(d.dim);
        for (int i = 0; i < d.dim; ++i) u[i] = rat(num(rng), 12), r[i] = rat(rr(rng), 5);
        const TorusPoint t(u, r);
        const FactorRatio w = omega_kernel(d, q, t);
        const auto v = w.evaluate(2.0);
        for (size_t k = 0; k < W.size(); k += 3) {
          const FactorRatio ww = omega_kernel(d, q, act(W[k], t));
          CHECK(ww.zero_order == w.zero_order);
          if (w.zero_order == 0) CHECK(std::abs(ww.evaluate(2.0) - v) <= 1e-9 * std::abs(v));
        }
        const TorusPoint tu = t.unitary_part();
        const FactorRatio wu = omega_kernel(d, q, tu);
        if (wu.zero_order == 0) {
          const auto val = wu.evaluate(2.0);
          CHECK(std::abs(val.imag()) <= 1e-9 * std::abs(val));
          CHECK(val.real() >= 0);
        }
      }
    }
  }
}

TEST_CASE("omega kernel at the Steinberg point of A1 has a simple pole") {
  const RootDatum d = build_datum(CartanType::parse("A1"), LatticeMode::Weight);
  const LabelFunction q = equal_labels(d);
  const TorusPoint st({Rational(0)}, {Rational(-1, 2)});  // alpha = q^{-1}
  CHECK(omega_kernel(d, q, st).zero_order == -1);
}
