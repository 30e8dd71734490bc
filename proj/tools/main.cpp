#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

using namespace hpk::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--type", cfg.type, "Cartan type, e.g. B2, G2, F4");
  sub->add_option("--lattice", cfg.lattice, "X = Q (root lattice) or P (weight lattice)");
  sub->add_option("--labels", cfg.labels, "equal | f | f0,f1,... by affine node | id=f,...");
  sub->add_option("--q", cfg.q, "numeric q as a rational or decimal");
  sub->add_option("--max-rank", cfg.max_rank, "rank cap for sweeps")->check(CLI::Range(1, 8));
  sub->add_option("--truncate", cfg.truncate, "length bound for truncated sums");
  sub->add_option("--eps", cfg.eps, "label scaling factors")->delimiter(',');
  sub->add_option("--format", cfg.format, "text | csv | tex | json")
      ->check(CLI::IsMember({"text", "csv", "tex", "json"}));
  sub->add_option("--out", cfg.out, "write to this file instead of stdout");
  sub->add_option("--jobs", cfg.jobs, "worker threads (default HPK_JOBS or all cores)")->check(CLI::NonNegativeNumber);
  sub->add_option("--tol", cfg.tol, "numeric tolerance override");
  sub->add_option("--config", cfg.config, "JSON datum file; flags take precedence");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residual cosets and Plancherel densities of affine Hecke algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hpk::kVersion));
  RunConfig cfg;
  auto* en = app.add_subcommand("enumerate", "list residual cosets up to W0");
  auto* ch = app.add_subcommand("check", "run an invariant suite");
  auto* tb = app.add_subcommand("tables", "print a formula table");
  for (auto* s : {en, ch, tb}) add_common(s, cfg);
  ch->add_option("--suite", cfg.suite, "classification | scaling | kl | density | residue")
      ->check(CLI::IsMember({"classification", "scaling", "kl", "density", "residue"}));
  tb->add_option("--which", cfg.which, "poincare | density | fdim")
      ->check(CLI::IsMember({"poincare", "density", "fdim"}));
  tb->add_option("--family", cfg.family, "family for fdim tables");
  tb->add_option("--n", cfg.n, "rank for fdim tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Outcome o;
    if (*en) o = cmd_enumerate(cfg);
    else if (*ch) o = cmd_check(cfg);
    else o = cmd_tables(cfg);
    if (cfg.out.empty()) {
      std::cout << o.text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) {
        std::cerr << "hpk: cannot write " << cfg.out << "\n";
        return 2;
      }
      f << o.text;
    }
    return o.code;
  } catch (const UsageError& e) {
    std::cerr << "hpk: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hpk: internal failure: " << e.what() << "\n";
    return 1;
  }
}
