#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "greymap/cogmap.hpp"
#include "greymap/convergence.hpp"
#include "greymap/dynamics.hpp"

namespace greymap::io {

/// Model file layout:
///
///   { "family": "fcm" | "fgcm" | "fggcm", "lambda": 1.0,
///     "nodes": ["C1", ...], "weights": [[cell, ...], ...], "initial": [cell, ...],
///     "id": "optional label" }
///
/// A cell is a number, {"interval": [lo, hi]}, {"kernel": k, "greyness": g}
/// or {"union": [[lo, hi], ...]}. Numbers lift to [x, x] or x_{0} for the
/// grey families; intervals and unions lift to grey numbers through the union
/// reduction. Structural problems raise MalformedInput, model invariants
/// raise ValidationError.
Model model_from_json(const nlohmann::json& doc, std::string default_id = "model");
nlohmann::json model_to_json(const Model& m);

Model load_model(const std::filesystem::path& path);
void save_model(const Model& m, const std::filesystem::path& path);

// Shortest text that parses back to the same double.
std::string format_double(double x);
// Four decimals, matching tabulated criterion values.
std::string format_4dp(double x);

/// Long-format CSV with header t,node,field,value. Nodes are 1-based.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

nlohmann::json classification_json(const Classification& c);
nlohmann::json verdict_json(const Verdict& v);

struct ReportOptions {
  std::size_t steps = kDefaultSteps;
  double epsilon = kDefaultEpsilon;
  std::size_t max_period = kDefaultMaxPeriod;
};

/// Everything produced for one model at its lambda: the trajectory, its
/// classification and the convergence report. Throws MixedSignWeight for
/// interval maps whose W* is undefined.
struct RunResult {
  Trajectory trajectory;
  Classification classification;
  nlohmann::json report;
  double criterion_kernel = 0.0;
  std::optional<double> criterion_greyness;
};

// Simulation and classification only; report fields stay empty.
RunResult simulate_and_classify(const Model& m, const ReportOptions& opts);
// Fills report and criteria for a result produced from m.
void attach_report(const Model& m, const ReportOptions& opts, RunResult& r);
RunResult run_model(const Model& m, const ReportOptions& opts);

}  // namespace greymap::io
