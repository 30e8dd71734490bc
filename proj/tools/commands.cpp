#include <cmath>
#include <tuple>

#include "cli.hpp"
#include "json.hpp"

namespace hpk::cli {

namespace {

using K = Table::Kind;

std::string datum_tag(const RootDatum& d) { return d.name + "/" + to_string(d.mode); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// p/q with q <= 1000 within 1e-9, else empty
std::string rational_guess(double x) {
  double a = x;
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 20; ++it) {
    const double fl = std::floor(a);
    const long long c = static_cast<long long>(fl);
    const long long h2 = c * h1 + h0, k2 = c * k1 + k0;
    if (k2 > 1000) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(x - double(h1) / double(k1)) < 1e-9) return k1 == 1 ? std::to_string(h1) : std::to_string(h1) + "/" + std::to_string(k1);
    if (a - fl < 1e-15) break;
    a = 1 / (a - fl);
  }
  return "";
}

std::string parabolic_text(const std::vector<int>& P) {
  std::string s = "{";
  for (size_t k = 0; k < P.size(); ++k) s += (k ? "," : "") + std::to_string(P[k] + 1);
  return s + "}";
}

// representative of r_L in the quotient with dominant split part, lex-minimal on the simple roots;
// returns its values on the simple roots and on the basis of the quotient lattice
std::pair<std::string, std::string> display_point(const CosetResult& cr, const ResidualCoset& L) {
  for (const auto& qp : cr.quotients) {
    if (qp.parabolic != L.parabolic) continue;
    std::optional<std::pair<std::vector<CycloValue>, std::vector<CycloValue>>> best;
    for (const auto& w : qp.W) {
      const TorusPoint t = act(w, L.quotient_point);
      const auto v = simple_values(qp.qd.datum, t);
      bool dominant = true;
      for (const auto& x : v) dominant = dominant && x.r >= 0;
      std::vector<CycloValue> b;
      for (int i = 0; i < t.dim(); ++i) b.push_back(CycloValue(t.u[i], t.r[i]));
      if (dominant && (!best || std::tie(v, b) < std::tie(best->first, best->second))) best = {v, b};
    }
    if (best) return {values_text(best->first), values_text(best->second)};
  }
  return {values_text({}), values_text({})};
}

Table suite_table(const std::vector<std::pair<std::string, SuiteReport>>& reports, const RootDatum* single,
                  const LabelFunction* q, const std::string& suite) {
  Table t;
  if (single) t.header = datum_header(*single, *q);
  else t.header = {{"datum", "sweep"}, {"version", kVersion}};
  t.header.push_back({"suite", suite});
  t.columns = {"datum", "labels", "check", "object", "pass", "witness"};
  t.kinds = {K::Text, K::Text, K::Text, K::Text, K::Boolean, K::Text};
  for (const auto& [labels, r] : reports)
    for (const auto& e : r.entries) t.add_row({r.datum, labels, e.check, e.object, yes_no(e.pass), e.witness});
  return t;
}

int failures(const std::vector<std::pair<std::string, SuiteReport>>& reports) {
  int n = 0;
  for (const auto& [l, r] : reports) n += static_cast<int>(r.failures());
  return n;
}

SuiteReport density_suite(const Problem& p, double qnum, int jobs) {
  SuiteReport rep;
  rep.datum = datum_tag(p.d);
  const auto W = weyl_elements(p.d);
  const auto cr = residual_cosets(p.d, p.q, W, jobs);
  for (size_t i = 0; i < cr.cosets.size(); ++i) {
    const auto& L = cr.cosets[i];
    const std::string obj = "orbit " + std::to_string(i);
    if (L.dim == 0) {
      const Complex base = m_point(p.d, p.q, L.point).evaluate(qnum);
      double spread = 0;
      for (size_t k = 0; k < W.size(); k += std::max<size_t>(1, W.size() / 16))
        spread = std::max(spread, std::abs(m_point(p.d, p.q, act(W[k], L.point)).evaluate(qnum) - base));
      const bool ok = std::isfinite(std::abs(base)) && std::abs(base) > 0 && spread <= 1e-9 * std::abs(base);
      rep.entries.push_back({"point-density", obj, ok, "m=" + number_text(base.real()) + " spread=" + number_text(spread)});
      continue;
    }
    bool ok = true;
    std::string witness;
    for (int s = 0; s < 24 && ok; ++s) {
      const TorusPoint t = sample_tempered(L, 7919ULL * (s + 1));
      const auto v = m_upperL(p.d, p.q, L, t, qnum);
      if (v.singular) continue;
      const bool good = std::abs(v.value.imag()) <= 1e-9 * std::abs(v.value) && v.value.real() > 0 &&
                        std::abs(v.value.real() - v.modulus_form) <= 1e-9 * v.modulus_form;
      if (!good) ok = false, witness = t.to_text();
    }
    rep.entries.push_back({"upper-density-positive", obj, ok, witness});
  }
  return rep;
}

}  // namespace

Outcome cmd_enumerate(RunConfig cfg) {
  const auto problems = resolve_problems(cfg, false);
  const Problem& p = problems.front();
  const auto fmt = parse_table_format(cfg.format);
  const auto W = weyl_elements(p.d);
  const auto cr = residual_cosets(p.d, p.q, W, cfg.jobs);
  Outcome o;
  for (const auto& L : cr.cosets)
    if (L.index != L.codim) o.code = 1;
  if (!cr.violations.empty()) o.code = 1;
  Table t;
  t.header = datum_header(p.d, p.q);
  t.header.push_back({"point", "simple-root values of r_L in the parabolic quotient, split part dominant"});
  t.header.push_back({"basis_values", "values of the same representative on the basis of the quotient lattice"});
  t.header.push_back({"center", "split exponents of r_L on the basis of X"});
  t.header.push_back({"i_L", "pole count minus zero count of the Plancherel kernel along L"});
  t.header.push_back({"kL", "order of the finite group T_L meet T^L"});
  if (fmt == TableFormat::Json) {
    nlohmann::ordered_json j;
    j["header"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.header) j["header"][k] = v;
    j["cosets"] = nlohmann::ordered_json::parse(cosets_to_json(p.d, cr.cosets));
    j["violations"] = cr.violations;
    o.text = j.dump(2) + "\n";
    return o;
  }
  t.columns = {"orbit", "dim", "parabolic", "point", "basis_values", "center", "i_L", "codim", "kL"};
  for (size_t i = 0; i < cr.cosets.size(); ++i) {
    const auto& L = cr.cosets[i];
    const auto [pt, bv] = display_point(cr, L);
    t.add_row({std::to_string(i), std::to_string(L.dim), parabolic_text(L.parabolic), pt, bv, to_string(L.center()),
               std::to_string(L.index), std::to_string(L.codim), std::to_string(L.kL)});
  }
  for (const auto& v : cr.violations) t.header.push_back({"violation", v});
  o.text = t.render(fmt);
  return o;
}

Outcome cmd_check(RunConfig cfg) {
  const std::string suite = cfg.suite.empty() ? "classification" : cfg.suite;
  if (suite != "classification" && suite != "scaling" && suite != "kl" && suite != "density" && suite != "residue")
    throw UsageError("unknown suite " + suite);
  const auto fmt = parse_table_format(cfg.format);
  if (suite == "residue" && !cfg.type && cfg.config.empty()) cfg.type = "A1";
  const auto problems = resolve_problems(cfg, true);
  const double qnum = parse_q(*cfg.q).get_d();
  const bool single = problems.size() == 1;
  Outcome o;

  if (suite == "residue") {
    Table t;
    t.header = datum_header(problems[0].d, problems[0].q);
    t.header.push_back({"q", number_text(qnum)});
    t.header.push_back({"mass", "W0-symmetrized residue mass of the normalized kernel at the residual orbit"});
    t.header.push_back({"continuous", "integral over the compact torus"});
    t.columns = {"datum", "kind", "orbit", "center", "values", "mass", "rational"};
    t.kinds = {K::Text, K::Text, K::Integer, K::Text, K::Text, K::Number, K::Text};
    for (const auto& p : problems) {
      LocalMassReport r;
      try {
        r = shift_and_collect(p.d, p.q, qnum, {}, cfg.jobs);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (cfg.tol) r.tolerance = *cfg.tol;
      const std::string tag = datum_tag(p.d);
      t.add_row({tag, "global", "-1", "", "", number_text(r.global.real()), rational_guess(r.global.real())});
      t.add_row({tag, "continuous", "-1", "", "", number_text(r.continuous.real()),
                 rational_guess(r.continuous.real())});
      for (const auto& m : r.masses)
        t.add_row({tag, m.kind, std::to_string(m.orbit), m.center, m.label, number_text(m.value.real()),
                   rational_guess(m.value.real())});
      t.header.push_back({tag + " discrepancy", number_text(r.discrepancy) + " (tolerance " + number_text(r.tolerance) + ")"});
      for (const auto& e : r.errors) t.header.push_back({tag + " error", e});
      if (!r.ok()) o.code = 1;
    }
    o.text = t.render(fmt);
    return o;
  }

  std::vector<std::pair<std::string, SuiteReport>> reports;
  for (const auto& p : problems) {
    const auto W = weyl_elements(p.d);
    const std::string labels = labels_text(p.d, p.q);
    if (suite == "classification") {
      const auto cr = residual_cosets(p.d, p.q, W, cfg.jobs);
      SuiteReport r = classification_suite(p.d, W, cr);
      for (const auto& v : cr.violations) r.entries.push_back({"enumeration", "", false, v});
      r.datum = datum_tag(p.d);
      reports.push_back({labels, std::move(r)});
    } else if (suite == "scaling") {
      std::vector<Rational> eps;
      if (cfg.eps.empty()) eps = {Rational(1, 2), Rational(2), Rational(3)};
      for (const auto& e : cfg.eps) {
        try {
          eps.push_back(parse_rational(e));
        } catch (const std::exception&) {
          throw UsageError("bad --eps value '" + e + "'");
        }
        if (eps.back() <= 0) throw UsageError("--eps must be positive");
      }
      for (const auto& e : eps) {
        SuiteReport r = scaling_check(p.d, p.q, W, e, cfg.jobs);
        r.datum = datum_tag(p.d);
        for (auto& en : r.entries) en.check += " eps=" + to_string(e);
        reports.push_back({labels, std::move(r)});
      }
    } else if (suite == "kl") {
      const auto kl = kl_real_point_check(p.d, p.q, W, cfg.jobs);
      SuiteReport r;
      r.datum = datum_tag(p.d);
      for (const auto& [pt, ex] : kl.real_points) {
        std::string s;
        for (const auto& e : ex) s += (s.empty() ? "" : ",") + to_string(e);
        r.entries.push_back({"real-point", pt.to_text(), true, "simple exponents " + s});
      }
      for (const auto& v : kl.violations) r.entries.push_back({"real-point", "", false, v});
      reports.push_back({labels, std::move(r)});
    } else {
      reports.push_back({labels, density_suite(p, qnum, cfg.jobs)});
    }
  }
  o.code = failures(reports) ? 1 : 0;
  o.text = suite_table(reports, single ? &problems[0].d : nullptr, single ? &problems[0].q : nullptr, suite).render(fmt);
  return o;
}

Outcome cmd_tables(RunConfig cfg) {
  const std::string which = cfg.which.empty() ? "poincare" : cfg.which;
  const auto fmt = parse_table_format(cfg.format);
  Outcome o;
  if (which == "fdim") {
    if (cfg.family != "subregular-C") throw UsageError("only the subregular-C family is tabulated");
    if (cfg.n < 3 || cfg.n > 8) throw UsageError("--n must lie in 3..8");
    const Rational qv = cfg.q ? parse_q(*cfg.q) : Rational(4);
    const auto rep = fdim_subregular_C(cfg.n, qv);
    Table t;
    t.header = {{"datum", "C" + std::to_string(cfg.n) + "/P"}, {"labels", "equal"}, {"version", kVersion}};
    t.header.push_back({"density", "point density at the subregular real residual point"});
    t.header.push_back({"assembled", "formal dimension assembled from the density and the Poincare series"});
    t.header.push_back({"reference", "closed product formula for the subregular formal dimension"});
    t.columns = {"n", "point", "density", "assembled", "reference", "sign", "match", "q", "assembled_at_q",
                 "reference_at_q", "numeric_match"};
    t.kinds = {K::Integer, K::Text, K::Text, K::Text, K::Text, K::Integer, K::Boolean, K::Text, K::Text, K::Text,
               K::Boolean};
    t.add_row({std::to_string(rep.n), rep.point.to_text(), rep.density.to_text(), rep.assembled.to_text(),
               rep.reference.to_text(), std::to_string(rep.sign), yes_no(rep.match), to_string(rep.numeric_q),
               to_string(rep.assembled_at_q), to_string(rep.reference_at_q), yes_no(rep.numeric_match)},
              {std::to_string(rep.n), "\\verb|" + rep.point.to_text() + "|", "$" + rep.density.to_tex() + "$",
               "$" + rep.assembled.to_tex() + "$", "$" + rep.reference.to_tex() + "$", std::to_string(rep.sign),
               yes_no(rep.match), to_string(rep.numeric_q), to_string(rep.assembled_at_q),
               to_string(rep.reference_at_q), yes_no(rep.numeric_match)});
    o.code = rep.match && rep.numeric_match ? 0 : 1;
    o.text = t.render(fmt);
    return o;
  }
  if (which == "density") {
    const auto problems = resolve_problems(cfg, false);
    const auto& p = problems.front();
    const auto W = weyl_elements(p.d);
    const auto cr = residual_cosets(p.d, p.q, W, cfg.jobs);
    o.text = density_table(p.d, p.q, cr, parse_q(*cfg.q).get_d(), fmt);
    o.code = cr.violations.empty() ? 0 : 1;
    return o;
  }
  if (which != "poincare") throw UsageError("unknown table " + which);

  std::vector<Problem> problems;
  if (cfg.type || !cfg.config.empty()) problems = resolve_problems(cfg, false);
  else
    for (const char* tag : {"A1", "A2", "B2", "G2"}) {
      RunConfig c = cfg;
      c.type = tag;
      if (!c.lattice) c.lattice = "Q";
      problems.push_back(resolve_problems(c, false).front());
      cfg.q = c.q;
    }
  const double qnum = parse_q(*cfg.q).get_d();
  if (cfg.truncate < 1 || cfg.truncate > 200) throw UsageError("--truncate must lie in 1..200");
  Table t;
  t.header = {{"version", kVersion}, {"q", number_text(qnum)}, {"truncation", std::to_string(cfg.truncate)}};
  t.header.push_back({"product", "closed product of the Poincare series over the extended affine Weyl group"});
  t.header.push_back({"truncated", "sum of q(w)^-1 over elements of length at most the truncation"});
  t.header.push_back({"tail_bound", "bound on the omitted terms from the growth of length spheres"});
  t.columns = {"datum", "labels", "product", "product_at_q", "truncated", "tail_bound", "difference", "agree"};
  t.kinds = {K::Text, K::Text, K::Text, K::Number, K::Number, K::Number, K::Number, K::Boolean};
  for (const auto& p : problems) {
    const auto prod = poincare_product(p.d, p.q);
    const std::string labels = labels_text(p.d, p.q);
    if (!prod.valid) {
      t.add_row({datum_tag(p.d), labels, "diverges: " + prod.reason, "nan", "nan", "nan", "nan", "no"});
      o.code = 1;
      continue;
    }
    const double pv = prod.value.evaluate(qnum);
    const auto s = poincare_truncated(p.d, p.q, qnum, cfg.truncate);
    const double diff = std::abs(pv - s.value);
    const bool agree = diff <= s.tail_bound;
    if (!agree) o.code = 1;
    t.add_row({datum_tag(p.d), labels, prod.value.to_text(), number_text(pv), number_text(s.value),
               number_text(s.tail_bound), number_text(diff), yes_no(agree)},
              {datum_tag(p.d), "\\verb|" + labels + "|", "$" + prod.value.to_tex() + "$", number_text(pv),
               number_text(s.value), number_text(s.tail_bound), number_text(diff), yes_no(agree)});
  }
  o.text = t.render(fmt);
  return o;
}

}  // namespace hpk::cli
