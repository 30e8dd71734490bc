#include "doctest.h"

#include <algorithm>

#include "hpk/root_datum.hpp"

using namespace hpk;

namespace {

struct Expect {
  const char* type;
  int roots;
  int weyl;
  int index;
};

const Expect kTable[] = {{"A1", 2, 2, 2},   {"A2", 6, 6, 3},     {"A3", 12, 24, 4},   {"B2", 8, 8, 2},
                         {"B3", 18, 48, 2}, {"C3", 18, 48, 2},   {"D4", 24, 192, 4},  {"G2", 12, 12, 1},
                         {"F4", 48, 1152, 1}, {"C4", 32, 384, 2}, {"A4", 20, 120, 5}};

}  // namespace

TEST_CASE("root systems and Weyl groups of simple types") {
  for (const auto& e : kTable) {
    CAPTURE(e.type);
    for (auto mode : {LatticeMode::Root, LatticeMode::Weight}) {
      const RootDatum d = build_datum(CartanType::parse(e.type), mode);
      CHECK(d.nroots() == e.roots);
      const auto W = weyl_elements(d);
      CHECK(static_cast<int>(W.size()) == e.weyl);
      CHECK(W[longest_index(W)].length == d.npos);
      CHECK(d.index_over_root_lattice() == (mode == LatticeMode::Root ? 1 : e.index));
      for (int i = 0; i < d.rank; ++i) CHECK(d.height(i) == 1);
      for (int a = 0; a < d.nroots(); ++a) CHECK(d.pair(d.roots[a], a) == 2);
    }
  }
}

TEST_CASE("doubling of roots") {
  const RootDatum b2q = build_datum(CartanType::parse("B2"), LatticeMode::Root);
  int nd = 0;
  for (int a = 0; a < b2q.nroots(); ++a) nd += b2q.doubled[a];
  CHECK(nd == 4);  // short roots
  const RootDatum b2p = build_datum(CartanType::parse("B2"), LatticeMode::Weight);
  for (int a = 0; a < b2p.nroots(); ++a) CHECK_FALSE(b2p.doubled[a]);
  const RootDatum c3q = build_datum(CartanType::parse("C3"), LatticeMode::Root);
  for (int a = 0; a < c3q.nroots(); ++a) CHECK_FALSE(c3q.doubled[a]);
  const RootDatum a1q = build_datum(CartanType::parse("A1"), LatticeMode::Root);
  CHECK(a1q.doubled[0]);
  CHECK_FALSE(build_datum(CartanType::parse("A1"), LatticeMode::Weight).doubled[0]);
}

TEST_CASE("explicit lattices") {
  const IntMatrix A = cartan_matrix(CartanType::parse("A3"));
  // 2w1, w2, 2w3 does not contain alpha_1
  CHECK_THROWS(build_datum(CartanType::parse("A3"), LatticeMode::Explicit,
                           IntMatrix::from_cols({{2, 0, 0}, {0, 1, 0}, {0, 0, 2}})));
  // Q + Z w2 has index 2 over Q
  const RootDatum d =
      build_datum(CartanType::parse("A3"), LatticeMode::Explicit, IntMatrix::from_cols({A.col(0), A.col(1), {0, 1, 0}}));
  CHECK(d.index_over_root_lattice() == 2);
  CHECK(weyl_elements(d).size() == 24);
}

TEST_CASE("invariant form") {
  for (const char* t : {"B3", "G2", "F4", "C3"}) {
    CAPTURE(t);
    const RootDatum d = build_datum(CartanType::parse(t), LatticeMode::Weight);
    const auto W = weyl_elements(d);
    for (int a = 0; a < d.nroots(); ++a) CHECK(inner_product(d, d.roots[a], d.roots[a]) == d.sq_length[a]);
    Rational mx = 0;
    for (int a = 0; a < d.nroots(); ++a) mx = std::max(mx, d.sq_length[a]);
    CHECK(mx == 2);
    const IntVector x{1, 2, 0, 1}, y{0, 1, 3, -1};
    const IntVector xs(x.begin(), x.begin() + d.dim), ys(y.begin(), y.begin() + d.dim);
    for (size_t k = 0; k < W.size(); k += 7)
      CHECK(inner_product(d, W[k].mat.apply(xs), W[k].mat.apply(ys)) == inner_product(d, xs, ys));
  }
}

TEST_CASE("affine length of translations") {
  const RootDatum d = build_datum(CartanType::parse("C3"), LatticeMode::Weight);
  const LabelFunction q = equal_labels(d);
  const IntVector xs[] = {{1, 0, 0}, {0, 2, -1}, {-3, 1, 1}};
  for (const auto& x : xs) {
    AffineElement w{identity_element(d), x};
    Int expect = 0;
    for (int a = 0; a < d.npos; ++a) expect += std::abs(d.pair(x, a));
    CHECK(affine_length(d, w) == expect);
    CHECK(q_of_affine(d, q, w) == Rational(static_cast<long>(expect)));
  }
  // finite part: length of u
  const auto W = weyl_elements(d);
  for (const auto& u : W) CHECK(affine_length(d, {u, IntVector(3, 0)}) == u.length);
}

TEST_CASE("affine length is a length function") {
  const RootDatum d = build_datum(CartanType::parse("B2"), LatticeMode::Root);
  const auto W = weyl_elements(d);
  // l(w s) = l(w) +- 1 for finite simple reflections
  for (const auto& u : W)
    for (const IntVector x : {IntVector{1, 0}, IntVector{0, 1}, IntVector{2, -1}}) {
      AffineElement w{u, x};
      for (int i = 0; i < d.rank; ++i) {
        AffineElement s{W[1 + i], IntVector(2, 0)};
        REQUIRE(W[1 + i].length == 1);
        const Int a = affine_length(d, w), b = affine_length(d, affine_compose(d, w, s));
        CHECK(std::abs(a - b) == 1);
      }
    }
}

TEST_CASE("labels respect conjugacy") {
  const RootDatum b2q = build_datum(CartanType::parse("B2"), LatticeMode::Root);
  const auto q = labels_from_nodes(b2q, {{"0", 2}, {"1", 1}, {"2", 3}});
  CHECK(q.f[1] == 2);
  CHECK(q.g[1] == 1);
  CHECK(q.f[0] == 1);
  const RootDatum b2p = build_datum(CartanType::parse("B2"), LatticeMode::Weight);
  CHECK_THROWS(labels_from_nodes(b2p, {{"0", 2}, {"1", 1}, {"2", 3}}));
  CHECK_NOTHROW(labels_from_nodes(b2p, {{"0", 3}, {"1", 2}, {"2", 3}}));
  CHECK(node_classes(b2p).size() == 2);
  CHECK(node_classes(b2q).size() == 3);
  const auto round = node_labels(b2q, q);
  CHECK(round.at("0") == 2);
  CHECK(round.at("2") == 3);
  CHECK(labels_from_nodes(b2q, round) == q);
}

TEST_CASE("parabolic classes") {
  auto count = [](const char* t) {
    const RootDatum d = build_datum(CartanType::parse(t), LatticeMode::Root);
    return parabolic_classes(d, weyl_elements(d)).size();
  };
  CHECK(count("A2") == 3);
  CHECK(count("B2") == 4);
  CHECK(count("A3") == 5);
  CHECK(count("D4") == 11);  // triality is not in W
}

TEST_CASE("quotient data") {
  const RootDatum b2p = build_datum(CartanType::parse("B2"), LatticeMode::Weight);
  for (int i = 0; i < 2; ++i) {
    const auto qd = quotient_datum(b2p, {i});
    CHECK(qd.datum.nroots() == 2);
    CHECK(qd.root_map[0] == i);
  }
  const RootDatum b2q = build_datum(CartanType::parse("B2"), LatticeMode::Root);
  const auto q2 = quotient_datum(b2q, {1});
  CHECK(q2.datum.doubled[0]);
  const auto q1 = quotient_datum(b2q, {0});
  CHECK_FALSE(q1.datum.doubled[0]);
  const auto full = quotient_datum(b2q, {0, 1});
  CHECK(full.datum.nroots() == 8);
}

TEST_CASE("json round trip") {
  const RootDatum d = build_datum(CartanType::parse("B2"), LatticeMode::Root);
  const auto q = labels_from_nodes(d, {{"0", 2}, {"1", 1}, {"2", Rational(1, 2)}});
  const DatumSpec s = datum_spec_from_json(datum_to_json(d, &q));
  CHECK(s.type == CartanType::parse("B2"));
  CHECK(s.node_f.at("2") == Rational(1, 2));
}
