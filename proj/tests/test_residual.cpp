#include "doctest.h"

#include <set>

#include "hpk/residual.hpp"

using namespace hpk;

namespace {

struct Fixture {
  RootDatum d;
  LabelFunction q;
  std::vector<WeylElement> W;
};

Fixture make(const std::string& tag, LatticeMode mode) {
  Fixture f;
  f.d = build_datum(CartanType::parse(tag), mode);
  f.q = equal_labels(f.d);
  f.W = weyl_elements(f.d);
  return f;
}

// point with prescribed values (e^{2 pi i u} q^r) on a unimodular basis of X given by rows
TorusPoint point_on_basis(const std::vector<IntVector>& rows, const std::vector<CycloValue>& vals) {
  std::vector<RatVector> rr;
  for (const auto& x : rows) rr.push_back(to_rat(x));
  const RatMatrix A = RatMatrix::from_rows(rr, static_cast<int>(rows.size()));
  RatVector bu, br;
  for (const auto& v : vals) bu.push_back(v.u), br.push_back(v.r);
  return TorusPoint(solve_affine(A, bu).point, solve_affine(A, br).point);
}

std::set<TorusPoint> point_orbits(const std::vector<ResidualPoint>& pts) {
  std::set<TorusPoint> s;
  for (const auto& p : pts) s.insert(p.point);
  return s;
}

std::vector<int> all_roots(const RootDatum& d) {
  std::vector<int> v(d.nroots());
  for (int a = 0; a < d.nroots(); ++a) v[a] = a;
  return v;
}

const CycloValue q1(0, 1), minus1(Rational(1, 2), 0), qhalf(0, Rational(1, 2)), mqhalf(Rational(1, 2), Rational(1, 2));

}  // namespace

TEST_CASE("index of points on A1") {
  auto f = make("A1", LatticeMode::Root);
  REQUIRE(f.d.doubled[0]);
  const auto roots = all_roots(f.d);
  CHECK(index_i(f.d, f.q, roots, point_on_basis({f.d.roots[0]}, {q1})) == 1);
  CHECK(index_i(f.d, f.q, roots, TorusPoint::identity(1)) == -2);
  CHECK(index_i(f.d, f.q, roots, point_on_basis({f.d.roots[0]}, {minus1})) == 0);
}

TEST_CASE("B2 with the root lattice") {
  auto f = make("B2", LatticeMode::Root);
  const auto pts = residual_points(f.d, f.q, f.W);
  CHECK(pts.violations.empty());
  std::set<TorusPoint> expected;
  for (auto v : {std::vector<CycloValue>{q1, q1}, std::vector<CycloValue>{q1, minus1}})
    expected.insert(canonical_in_orbit(f.W, point_on_basis({f.d.roots[0], f.d.roots[1]}, v)).first);
  CHECK(point_orbits(pts.points) == expected);

  const auto cr = residual_cosets(f.d, f.q, f.W);
  CHECK(cr.violations.empty());
  REQUIRE(cr.cosets.size() == 5);
  std::multiset<std::pair<int, Int>> lines;
  for (const auto& L : cr.cosets) {
    CHECK(L.index == L.codim);
    if (L.dim == 1) lines.insert({L.parabolic[0], L.kL});
  }
  CHECK(lines == std::multiset<std::pair<int, Int>>{{0, 2}, {1, 1}});
  CHECK(cr.cosets.back().dim == 2);
}

TEST_CASE("B2 with the weight lattice") {
  auto f = make("B2", LatticeMode::Weight);
  // basis (alpha_1 / 2, alpha_2) of X
  const IntVector half_a1 = {1, -1};
  const std::vector<IntVector> basis{half_a1, f.d.roots[1]};
  const auto pts = residual_points(f.d, f.q, f.W);
  CHECK(pts.violations.empty());
  std::set<TorusPoint> expected;
  for (auto v : {std::vector<CycloValue>{qhalf, q1}, std::vector<CycloValue>{qhalf, minus1},
                 std::vector<CycloValue>{mqhalf, q1}})
    expected.insert(canonical_in_orbit(f.W, point_on_basis(basis, v)).first);
  CHECK(point_orbits(pts.points) == expected);

  const auto cr = residual_cosets(f.d, f.q, f.W);
  int by_dim[3] = {0, 0, 0};
  for (const auto& L : cr.cosets) ++by_dim[L.dim];
  CHECK(by_dim[0] == 3);
  CHECK(by_dim[1] == 3);
  CHECK(by_dim[2] == 1);
}

TEST_CASE("vanishing labels leave only the torus") {
  auto f = make("B2", LatticeMode::Root);
  const auto cr = residual_cosets(f.d, equal_labels(f.d, 0), f.W);
  REQUIRE(cr.cosets.size() == 1);
  CHECK(cr.cosets[0].dim == 2);
}

TEST_CASE("unitary candidates of B2") {
  auto f = make("B2", LatticeMode::Root);
  const auto uc = unitary_candidates(f.d, f.W);
  // (1,1), (1,-1), (-1,1) on the simple roots
  CHECK(uc.candidates.size() == 3);
  for (const auto& c : uc.candidates) {
    const Subsystem S = subsystem(f.d, c.rs0);
    CHECK(S.datum.rank == 2);
  }
}

TEST_CASE("graded points of A1 with label 1") {
  const RootDatum d = build_datum(CartanType::parse("A1"), LatticeMode::Weight);
  const auto g = graded_residual_points(d, {Rational(1), Rational(1)});
  REQUIRE(g.points.size() == 1);
  CHECK(dot(d.roots[0], g.points[0]) == 1);
}

TEST_CASE("suite is clean on small data") {
  for (const char* tag : {"A2", "B2", "G2", "B3", "C3"})
    for (auto mode : {LatticeMode::Root, LatticeMode::Weight}) {
      auto f = make(tag, mode);
      const auto cr = residual_cosets(f.d, f.q, f.W);
      const auto rep = classification_suite(f.d, f.W, cr);
      for (const auto& e : rep.entries)
        if (!e.pass) FAIL_CHECK(tag << " " << e.check << " " << e.object << " " << e.witness);
    }
}

TEST_CASE("scaling commutes with enumeration") {
  auto f = make("B2", LatticeMode::Root);
  for (auto eps : {Rational(1, 2), Rational(2), Rational(3)}) CHECK(scaling_check(f.d, f.q, f.W, eps).all_pass());
}

TEST_CASE("real points of C3 with the weight lattice") {
  auto f = make("C3", LatticeMode::Weight);
  const auto kl = kl_real_point_check(f.d, f.q, f.W);
  CHECK(kl.pass());
  bool subregular = false;
  for (const auto& [t, e] : kl.real_points)
    if (e == std::vector<Rational>{1, 0, 1}) subregular = true;
  CHECK(subregular);
}

TEST_CASE("growth tests") {
  auto f = make("B2", LatticeMode::Root);
  const TorusPoint st = steinberg_point(f.d, f.q);
  CHECK(casselman_discrete(f.d, {st}));
  CHECK(casselman_tempered(f.d, {st}));
  CHECK_FALSE(casselman_tempered(f.d, {trivial_point(f.d, f.q)}));
  const TorusPoint unit(RatVector{Rational(1, 3), Rational(0)}, RatVector{0, 0});
  CHECK(casselman_tempered(f.d, {unit}));
  CHECK_FALSE(casselman_discrete(f.d, {unit}));
}
