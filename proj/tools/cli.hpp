#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpk/plancherel.hpp"
#include "hpk/residue.hpp"

namespace hpk::cli {

// bad flags, unknown types, inconsistent labels
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<std::string> type, lattice, labels, q;
  int max_rank = 3;
  int truncate = 40;
  std::vector<std::string> eps;
  std::string format = "text";
  std::string out;
  int jobs = 0;
  std::optional<double> tol;
  std::string suite, which, family = "subregular-C";
  int n = 3;
  std::string config;  // JSON file with type, lattice, basis, labels
};

struct Problem {
  RootDatum d;
  LabelFunction q;
};

struct Outcome {
  int code = 0;  // 0 success, 1 invariant failure
  std::string text;
};

// sweep used when no type is given
const std::vector<std::string>& sweep_types();

LabelFunction parse_labels(const RootDatum& d, const std::string& text);
Rational parse_q(const std::string& text);
// merges the config file under the flags and builds the data to run on
std::vector<Problem> resolve_problems(RunConfig& cfg, bool allow_sweep);

Outcome cmd_enumerate(RunConfig cfg);
Outcome cmd_check(RunConfig cfg);
Outcome cmd_tables(RunConfig cfg);

}  // namespace hpk::cli
