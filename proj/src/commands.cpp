#include "greymap/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "greymap/corpus.hpp"
#include "greymap/error.hpp"
#include "greymap/model_io.hpp"

namespace greymap::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Maps library exceptions onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const MixedSignWeight& e) {
    err << "error: " << e.what() << '\n';
    return kInapplicable;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const MalformedInput& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParameter& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InsufficientData& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
}

Model load_with_lambda(const std::string& path, std::optional<double> lambda) {
  if (path.empty()) throw InvalidParameter("--model is required");
  Model m = io::load_model(path);
  if (lambda) {
    if (!(*lambda > 0.0)) throw InvalidParameter("--lambda must be positive");
    m = m.with_lambda(*lambda);
  }
  return m;
}

void require_steps(std::size_t steps) {
  if (steps == 0) throw InvalidParameter("--steps must be at least 1");
}

json mixed_sign_report(const Model& m, const MixedSignWeight& e) {
  return {{"model", m.id()},
          {"family", std::string(to_string(m.family()))},
          {"lambda", m.lambda()},
          {"error", "MixedSignWeight"},
          {"row", e.row()},
          {"col", e.col()},
          {"message", std::string(e.what()) +
                          "; the W* criterion for interval maps does not apply. Convert the "
                          "model to the fggcm form and check that instead."}};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace

int cmd_simulate(const SimulateOptions& opts, std::ostream& err) {
  return guarded(err, [&] {
    require_steps(opts.steps);
    if (opts.out_path.empty()) throw InvalidParameter("--out is required");
    const Model m = load_with_lambda(opts.model_path, opts.lambda);
    const Trajectory traj = simulate(m, opts.steps);
    std::ofstream out(opts.out_path);
    if (!out) throw Error("cannot write '" + opts.out_path + "'");
    io::write_trajectory_csv(out, traj);
    return int{kOk};
  });
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_steps(opts.steps);
    const Model m = load_with_lambda(opts.model_path, opts.lambda);
    try {
      const auto run = io::run_model(m, {opts.steps, opts.epsilon, opts.max_period});
      out << run.report.dump(2) << '\n';
      return int{kOk};
    } catch (const MixedSignWeight& e) {
      out << mixed_sign_report(m, e).dump(2) << '\n';
      err << "error: " << e.what() << '\n';
      return int{kInapplicable};
    }
  });
}

namespace {

struct SweepRow {
  double lambda = 0.0;
  int code = kOk;
  std::string criterion_kernel;
  std::string criterion_greyness;
  std::string classification;
  std::string period;
  std::string status = "ok";
};

SweepRow sweep_one(const Model& base, double lambda, const SweepOptions& opts) {
  SweepRow row;
  row.lambda = lambda;
  const std::string tag = "lambda_" + io::format_double(lambda);
  std::ostringstream err;
  row.code = guarded(err, [&] {
    const Model m = base.with_lambda(lambda);
    const io::ReportOptions ro{opts.steps, opts.epsilon, opts.max_period};
    io::RunResult run = io::simulate_and_classify(m, ro);
    {
      std::ofstream csv(fs::path(opts.out_dir) / ("trajectory_" + tag + ".csv"));
      io::write_trajectory_csv(csv, run.trajectory);
    }
    const Classification& cls = run.classification;
    row.classification = std::string(to_string(cls.verdict));
    if (cls.verdict == Behavior::LimitCycle) row.period = std::to_string(cls.period);
    try {
      io::attach_report(m, ro, run);
      row.criterion_kernel = io::format_double(run.criterion_kernel);
      if (run.criterion_greyness) row.criterion_greyness = io::format_double(*run.criterion_greyness);
      write_text(fs::path(opts.out_dir) / ("report_" + tag + ".json"), run.report.dump(2) + "\n");
    } catch (const MixedSignWeight& e) {
      write_text(fs::path(opts.out_dir) / ("report_" + tag + ".json"),
                 mixed_sign_report(m, e).dump(2) + "\n");
      throw;
    }
    return int{kOk};
  });
  if (row.code != kOk) {
    std::string msg = err.str();
    while (!msg.empty() && msg.back() == '\n') msg.pop_back();
    std::replace(msg.begin(), msg.end(), ',', ';');
    row.status = msg;
  }
  return row;
}

}  // namespace

int cmd_sweep(const SweepOptions& opts, std::ostream& err) {
  return guarded(err, [&] {
    require_steps(opts.steps);
    if (opts.lambdas.empty()) throw InvalidParameter("--lambdas needs at least one value");
    for (double l : opts.lambdas)
      if (!(l > 0.0) || !std::isfinite(l)) throw InvalidParameter("every lambda must be positive");
    if (opts.out_dir.empty()) throw InvalidParameter("--out-dir is required");
    const Model base = load_with_lambda(opts.model_path, std::nullopt);
    fs::create_directories(opts.out_dir);

    std::vector<std::future<SweepRow>> jobs;
    for (double l : opts.lambdas)
      jobs.push_back(std::async(std::launch::async, sweep_one, std::cref(base), l, std::cref(opts)));

    std::ostringstream summary;
    summary << "lambda,criterion_kernel,criterion_greyness,classification,period,status\n";
    int worst = kOk;
    for (auto& job : jobs) {
      const SweepRow r = job.get();
      summary << io::format_double(r.lambda) << ',' << r.criterion_kernel << ','
              << r.criterion_greyness << ',' << r.classification << ',' << r.period << ','
              << r.status << '\n';
      if (r.code != kOk) err << "lambda " << io::format_double(r.lambda) << ": " << r.status << '\n';
      worst = std::max(worst, r.code);
    }
    write_text(fs::path(opts.out_dir) / "summary.csv", summary.str());
    return worst;
  });
}

int cmd_corpus(const std::string& variant_id, const std::string& out_path, std::ostream& err) {
  const auto v = corpus::variant_from_string(variant_id);
  if (!v) {
    err << "unknown variant '" << variant_id << "'; valid ids:";
    for (auto id : corpus::kAllVariants) err << ' ' << corpus::to_string(id);
    err << '\n';
    return kUsage;
  }
  return guarded(err, [&] {
    if (out_path.empty()) throw InvalidParameter("--out is required");
    io::save_model(corpus::build(*v, 1.0), out_path);
    return int{kOk};
  });
}

std::vector<double> parse_lambda_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) throw InvalidParameter("empty entry in lambda list");
    const auto e = item.find_last_not_of(" \t");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidParameter("bad lambda value '" + item + "'");
    }
    if (used != item.size()) throw InvalidParameter("bad lambda value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidParameter("lambda list is empty");
  return out;
}

}  // namespace greymap::cli
