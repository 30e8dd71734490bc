// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "hpk/plancherel.hpp"
#include "hpk/residue.hpp"

using namespace hpk;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

RootDatum datum(const std::string& tag, LatticeMode mode) { return build_datum(CartanType::parse(tag), mode); }

TorusPoint point_on_basis(const std::vector<IntVector>& rows, const std::vector<CycloValue>& vals) {
  std::vector<RatVector> rr;
  for (const auto& x : rows) rr.push_back(to_rat(x));
  const RatMatrix A = RatMatrix::from_rows(rr, static_cast<int>(rows.size()));
  RatVector bu, br;
  for (const auto& v : vals) bu.push_back(v.u), br.push_back(v.r);
  return TorusPoint(solve_affine(A, bu).point, solve_affine(A, br).point);
}

const CycloValue q1(0, 1), minus1(Rational(1, 2), 0), qhalf(0, Rational(1, 2)), mqhalf(Rational(1, 2), Rational(1, 2));

Verdict b2_reproduction() {
  Verdict v;
  std::ostringstream os;
  for (auto mode : {LatticeMode::Root, LatticeMode::Weight}) {
    const auto d = datum("B2", mode);
    const auto q = equal_labels(d);
    const auto W = weyl_elements(d);
    const auto cr = residual_cosets(d, q, W);
    std::set<TorusPoint> got, want;
    for (const auto& p : residual_points(d, q, W).points) got.insert(p.point);
    std::multiset<Int> lines;
    int tori = 0;
    for (const auto& L : cr.cosets) {
      if (L.dim == 1) lines.insert(L.kL);
      if (L.dim == 2) ++tori;
    }
    std::vector<std::vector<CycloValue>> pts;
    std::vector<IntVector> basis;
    if (mode == LatticeMode::Root) {
      basis = {d.roots[0], d.roots[1]};
      pts = {{q1, q1}, {q1, minus1}};
    } else {
      basis = {IntVector{1, -1}, d.roots[1]};  // alpha_1 / 2, alpha_2
      pts = {{qhalf, q1}, {qhalf, minus1}, {mqhalf, q1}};
    }
    for (const auto& p : pts) want.insert(canonical_in_orbit(W, point_on_basis(basis, p)).first);
    const bool ok = got == want && tori == 1 && cr.violations.empty() &&
                    (mode == LatticeMode::Root ? lines == std::multiset<Int>{1, 2} : lines.size() == 3);
    os << to_string(mode) << ": " << got.size() << " points, " << lines.size() << " lines, " << tori << " torus; ";
    v.pass = v.pass && ok;
  }
  v.detail = os.str();
  return v;
}

// one random positive label per class of affine nodes, from {1/2, 1, 3/2, 2, 5/2, 3, 1/3, 2/3}
LabelFunction random_labels(const RootDatum& d, std::mt19937& rng) {
  static const Rational pool[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                  Rational(5, 2), Rational(3), Rational(1, 3), Rational(2, 3)};
  std::map<std::string, Rational> f;
  for (const auto& cls : node_classes(d)) {
    const Rational v = pool[rng() % 8];
    for (const auto& id : cls) f[id] = v;
  }
  return labels_from_nodes(d, f);
}

Verdict classification() {
  Verdict v;
  std::mt19937 rng(20240611);
  int data = 0, checks = 0, failed = 0;
  std::string first;
  for (const char* tag : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "B4", "C4", "F4"})
    for (auto mode : {LatticeMode::Root, LatticeMode::Weight}) {
      const auto d = datum(tag, mode);
      if (mode == LatticeMode::Weight && d.index_over_root_lattice() == 1) continue;  // X = P = Q
      const auto W = weyl_elements(d);
      std::vector<LabelFunction> labels{equal_labels(d)};
      for (int k = 0; k < 3; ++k) labels.push_back(random_labels(d, rng));
      for (const auto& q : labels) {
        ++data;
        const auto cr = residual_cosets(d, q, W);
        const auto rep = classification_suite(d, W, cr, false);
        checks += static_cast<int>(rep.entries.size());
        for (const auto& e : rep.entries)
          if (!e.pass) {
            ++failed;
            if (first.empty()) first = d.name + "/" + to_string(mode) + " " + e.check + " " + e.object;
          }
        for (const auto& s : cr.violations) {
          ++failed;
          if (first.empty()) first = d.name + " " + s;
        }
      }
    }
  v.pass = failed == 0;
  v.detail = std::to_string(data) + " data, " + std::to_string(checks) + " checks, " + std::to_string(failed) +
             " violations" + (first.empty() ? "" : " (first: " + first + ")");
  return v;
}

Verdict poincare() {
  Verdict v;
  std::ostringstream os;
  os.precision(3);
  for (const char* tag : {"A1", "A2", "B2", "G2"}) {
    const auto d = datum(tag, LatticeMode::Root);
    const auto q = equal_labels(d);
    const double prod = poincare_product(d, q).value.evaluate(2.0);
    const auto s = poincare_truncated(d, q, 2.0, 40);
    const double diff = std::abs(prod - s.value);
    v.pass = v.pass && diff <= s.tail_bound && diff <= 1e-6;
    os << tag << " |diff|=" << diff << " bound=" << s.tail_bound << "; ";
  }
  v.detail = os.str();
  return v;
}

Verdict formal_dimension() {
  Verdict v;
  std::ostringstream os;
  for (int n = 3; n <= 5; ++n) {
    const auto r = fdim_subregular_C(n, 4);
    v.pass = v.pass && r.match && r.numeric_match;
    os << "C" << n << (r.match ? " match" : " MISMATCH") << " sign " << r.sign << " at q=4 " << to_string(r.assembled_at_q)
       << "; ";
  }
  v.detail = os.str();
  return v;
}

Verdict residue() {
  Verdict v;
  std::ostringstream os;
  os.precision(3);
  const auto a1 = datum("A1", LatticeMode::Root);
  for (double qn : {2.0, 3.0}) {
    const auto r = shift_and_collect(a1, equal_labels(a1), qn);
    const double eg = std::abs(r.global - 1.0);
    const double ec = std::abs(r.continuous - 2 / (qn + 1));
    const double es = r.masses.size() == 1 ? std::abs(r.masses[0].value - (qn - 1) / (qn + 1)) : 1.0;
    v.pass = v.pass && r.ok() && eg < 1e-8 && ec < 1e-8 && es < 1e-8;
    os << "A1 q=" << qn << " errors " << eg << "/" << es << "/" << ec << "; ";
  }
  const auto b2 = datum("B2", LatticeMode::Root);
  const auto r = shift_and_collect(b2, equal_labels(b2), 2.0);
  double total = r.continuous.real();
  int positive_points = 0, points = 0;
  for (const auto& m : r.masses) {
    total += m.value.real();
    if (m.kind == "point") ++points, positive_points += m.value.real() > 0;
  }
  v.pass = v.pass && r.ok() && std::abs(total - 1) < 1e-6 && std::abs(r.global - 1.0) < 1e-6 && points == 2 &&
           positive_points == 2;
  os << "B2 q=2 total " << total << ", " << positive_points << "/" << points << " point masses positive";
  v.detail = os.str();
  return v;
}

Verdict scaling() {
  Verdict v;
  int runs = 0, failed = 0;
  for (const char* tag : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"})
    for (auto mode : {LatticeMode::Root, LatticeMode::Weight}) {
      const auto d = datum(tag, mode);
      const auto W = weyl_elements(d);
      for (const auto& eps : {Rational(1, 2), Rational(2), Rational(3)}) {
        ++runs;
        if (!scaling_check(d, equal_labels(d), W, eps).all_pass()) ++failed;
      }
    }
  v.pass = failed == 0;
  v.detail = std::to_string(runs) + " runs, " + std::to_string(failed) + " failures";
  return v;
}

Verdict kl() {
  Verdict v;
  int points = 0;
  bool subregular = false;
  for (const char* tag : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    const auto d = datum(tag, LatticeMode::Weight);
    const auto rep = kl_real_point_check(d, equal_labels(d), weyl_elements(d));
    v.pass = v.pass && rep.pass();
    points += static_cast<int>(rep.real_points.size());
    if (std::string(tag) == "C3")
      for (const auto& [t, e] : rep.real_points)
        if (e == std::vector<Rational>{1, 0, 1}) subregular = true;
  }
  v.pass = v.pass && subregular;
  v.detail = std::to_string(points) + " real points" + (subregular ? ", C3 has (q,1,q)" : ", C3 lacks (q,1,q)");
  return v;
}

Verdict casselman() {
  Verdict v;
  int cases = 0;
  std::mt19937 rng(7);
  for (const char* tag : {"A1", "A2", "B2", "G2", "B3", "C3"})
    for (auto mode : {LatticeMode::Root, LatticeMode::Weight}) {
      const auto d = datum(tag, mode);
      const auto q = equal_labels(d);
      const TorusPoint st = steinberg_point(d, q);
      bool ok = casselman_discrete(d, {st}) && casselman_tempered(d, {st});
      ok = ok && !casselman_tempered(d, {trivial_point(d, q)});
      for (int k = 0; k < 4; ++k) {
        RatVector u;
        for (int i = 0; i < d.dim; ++i) u.push_back(Rational(static_cast<long>(rng() % 11), 11));
        const TorusPoint t(u, RatVector(d.dim, Rational(0)));
        ok = ok && casselman_tempered(d, {t}) && !casselman_discrete(d, {t});
      }
      cases += 6;
      v.pass = v.pass && ok;
    }
  v.detail = std::to_string(cases) + " classifications";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"B2 residual cosets for X=Q and X=P", b2_reproduction},
      {"classification suite over the type sweep", classification},
      {"Poincare product against the truncated affine sum", poincare},
      {"subregular C_n formal dimension", formal_dimension},
      {"residue masses in rank 1 and 2", residue},
      {"scaling of labels against split exponents", scaling},
      {"real residual points have values in {1,q}", kl},
      {"growth tests on Steinberg, trivial and unitary weights", casselman},
  };
  const double limits[] = {1, 300, 30, 10, 120, 300, 300, 60};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < limits[i];
    const bool pass = v.pass && in_time;
    failed += !pass;
    std::printf("criterion %zu: %s  %s: %s [%.2f s%s]\n", i + 1, pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.detail.c_str(), s, in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
