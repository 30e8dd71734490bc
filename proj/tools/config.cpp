#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace hpk::cli {

const std::vector<std::string>& sweep_types() {
  static const std::vector<std::string> types{"A1", "A2", "A3", "B2", "B3", "C3", "G2", "B4", "C4", "F4"};
  return types;
}

Rational parse_q(const std::string& text) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("bad --q value '" + text + "'");
  }
  if (q <= 1) throw UsageError("--q must exceed 1");
  return q;
}

LabelFunction parse_labels(const RootDatum& d, const std::string& text) {
  try {
    if (text == "equal") return equal_labels(d);
    if (text.find(',') == std::string::npos && text.find('=') == std::string::npos)
      return equal_labels(d, parse_rational(text));
    std::map<std::string, Rational> node_f;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    const auto nodes = affine_nodes(d);
    if (text.find('=') != std::string::npos) {
      for (const auto& p : parts) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw UsageError("mixed label syntax in '" + text + "'");
        node_f[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
      }
    } else {
      if (parts.size() != nodes.size())
        throw UsageError(d.name + " has " + std::to_string(nodes.size()) + " affine nodes, got " +
                         std::to_string(parts.size()) + " labels");
      for (size_t k = 0; k < parts.size(); ++k) node_f[nodes[k].id] = parse_rational(parts[k]);
    }
    return labels_from_nodes(d, node_f);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --labels: ") + e.what());
  }
}

namespace {

LatticeMode lattice_mode(const std::string& s) {
  if (s == "Q") return LatticeMode::Root;
  if (s == "P") return LatticeMode::Weight;
  throw UsageError("--lattice must be Q or P");
}

CartanType cartan(const std::string& tag) {
  try {
    return CartanType::parse(tag);
  } catch (const std::exception& e) {
    throw UsageError("bad --type '" + tag + "'");
  }
}

}  // namespace

std::vector<Problem> resolve_problems(RunConfig& cfg, bool allow_sweep) {
  std::optional<DatumSpec> spec;
  if (!cfg.config.empty()) {
    std::ifstream in(cfg.config);
    if (!in) throw UsageError("cannot read config " + cfg.config);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      spec = datum_spec_from_json(buf.str());
    } catch (const std::exception& e) {
      throw UsageError("bad config: " + std::string(e.what()));
    }
  }
  if (!cfg.q) cfg.q = "2";
  parse_q(*cfg.q);

  std::vector<std::pair<CartanType, LatticeMode>> data;
  IntMatrix basis;
  if (cfg.type) {
    const CartanType t = cartan(*cfg.type);
    LatticeMode m = LatticeMode::Root;
    if (cfg.lattice) m = lattice_mode(*cfg.lattice);
    else if (spec && spec->type == t) m = spec->mode, basis = spec->basis;
    data.push_back({t, m});
  } else if (spec) {
    LatticeMode m = cfg.lattice ? lattice_mode(*cfg.lattice) : spec->mode;
    if (!cfg.lattice) basis = spec->basis;
    data.push_back({spec->type, m});
  } else {
    if (!allow_sweep) throw UsageError("--type is required");
    for (const auto& tag : sweep_types()) {
      const CartanType t = CartanType::parse(tag);
      if (t.n > cfg.max_rank) continue;
      if (cfg.lattice) data.push_back({t, lattice_mode(*cfg.lattice)});
      else {
        data.push_back({t, LatticeMode::Root});
        data.push_back({t, LatticeMode::Weight});
      }
    }
  }

  std::vector<Problem> out;
  for (const auto& [t, m] : data) {
    Problem p;
    try {
      p.d = build_datum(t, m, basis);
    } catch (const std::exception& e) {
      throw UsageError("cannot build datum: " + std::string(e.what()));
    }
    if (cfg.labels) p.q = parse_labels(p.d, *cfg.labels);
    else if (spec && !spec->node_f.empty() && data.size() == 1) {
      try {
        p.q = labels_from_nodes(p.d, spec->node_f);
      } catch (const std::exception& e) {
        throw UsageError("bad config labels: " + std::string(e.what()));
      }
    } else p.q = equal_labels(p.d);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hpk::cli
