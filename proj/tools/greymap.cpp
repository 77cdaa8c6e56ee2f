#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "greymap/commands.hpp"
#include "greymap/corpus.hpp"
#include "greymap/error.hpp"

using namespace greymap;

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy, grey and general grey cognitive map simulator and convergence checker"};
  app.require_subcommand(1);

  cli::SimulateOptions sim;
  std::optional<double> sim_lambda;
  auto* simulate = app.add_subcommand("simulate", "Run a model and write its trajectory CSV");
  simulate->add_option("--model", sim.model_path, "Model file (JSON)")->required();
  simulate->add_option("--lambda", sim_lambda, "Override the model's sigmoid steepness");
  simulate->add_option("--steps", sim.steps, "Number of synchronous updates")->capture_default_str();
  simulate->add_option("--out", sim.out_path, "Trajectory CSV path")->required();

  cli::CheckOptions chk;
  std::optional<double> chk_lambda;
  auto* check = app.add_subcommand("check", "Print the convergence report as JSON");
  check->add_option("--model", chk.model_path, "Model file (JSON)")->required();
  check->add_option("--lambda", chk_lambda, "Override the model's sigmoid steepness");
  check->add_option("--steps", chk.steps, "Simulation horizon")->capture_default_str();
  check->add_option("--eps", chk.epsilon, "Classification tolerance")->capture_default_str();
  check->add_option("--max-period", chk.max_period, "Longest cycle searched")->capture_default_str();

  cli::SweepOptions swp;
  std::string lambda_list;
  auto* sweep = app.add_subcommand("sweep", "Run a model over several lambdas");
  sweep->add_option("--model", swp.model_path, "Model file (JSON)")->required();
  sweep->add_option("--lambdas", lambda_list, "Comma separated lambda values")->required();
  sweep->add_option("--steps", swp.steps, "Simulation horizon")->capture_default_str();
  sweep->add_option("--eps", swp.epsilon, "Classification tolerance")->capture_default_str();
  sweep->add_option("--max-period", swp.max_period, "Longest cycle searched")->capture_default_str();
  sweep->add_option("--out-dir", swp.out_dir, "Output directory")->required();

  std::string variant;
  std::string corpus_out;
  auto* corpus_cmd = app.add_subcommand("corpus", "Export a built-in model file");
  std::string ids;
  for (auto v : corpus::kAllVariants) ids += std::string(ids.empty() ? "" : ", ") + std::string(corpus::to_string(v));
  corpus_cmd->add_option("variant", variant, "One of: " + ids)->required();
  corpus_cmd->add_option("--out", corpus_out, "Model file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  if (*simulate) {
    sim.lambda = sim_lambda;
    return cli::cmd_simulate(sim, std::cerr);
  }
  if (*check) {
    chk.lambda = chk_lambda;
    return cli::cmd_check(chk, std::cout, std::cerr);
  }
  if (*sweep) {
    try {
      swp.lambdas = cli::parse_lambda_list(lambda_list);
    } catch (const Error& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return cli::kUsage;
    }
    return cli::cmd_sweep(swp, std::cerr);
  }
  return cli::cmd_corpus(variant, corpus_out, std::cerr);
}
