#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "greymap/cogmap.hpp"
#include "greymap/dynamics.hpp"

namespace greymap::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,        // bad arguments or unparsable model file
  kValidation = 3,   // model violates its invariants
  kInapplicable = 4, // convergence criterion cannot be evaluated (mixed-sign interval)
};

struct SimulateOptions {
  std::string model_path;
  std::optional<double> lambda;
  std::size_t steps = kDefaultSteps;
  std::string out_path;
};

struct CheckOptions {
  std::string model_path;
  std::optional<double> lambda;
  std::size_t steps = kDefaultSteps;
  double epsilon = kDefaultEpsilon;
  std::size_t max_period = kDefaultMaxPeriod;
};

struct SweepOptions {
  std::string model_path;
  std::vector<double> lambdas;
  std::size_t steps = kDefaultSteps;
  double epsilon = kDefaultEpsilon;
  std::size_t max_period = kDefaultMaxPeriod;
  std::string out_dir;
};

// Writes the trajectory CSV to out_path.
int cmd_simulate(const SimulateOptions& opts, std::ostream& err);

// Prints the JSON convergence report to out.
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);

// Runs every lambda independently and writes per-lambda CSV/JSON files and
// summary.csv into out_dir. The exit code is the worst per-lambda code.
int cmd_sweep(const SweepOptions& opts, std::ostream& err);

// Exports a built-in model.
int cmd_corpus(const std::string& variant_id, const std::string& out_path, std::ostream& err);

// "0.5,1,2" -> {0.5, 1, 2}; throws InvalidParameter on empty or bad entries.
std::vector<double> parse_lambda_list(const std::string& text);

}  // namespace greymap::cli
