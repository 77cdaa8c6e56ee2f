#include "greymap/model_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "greymap/error.hpp"

namespace greymap::io {

using nlohmann::json;

namespace {

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw MalformedInput(what + " must be a number");
  return j.get<double>();
}

Interval pair_of(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw MalformedInput(what + " must be [lo, hi]");
  return {number(j[0], what), number(j[1], what)};
}

// One parsed cell in its most general form.
struct RawCell {
  enum class Kind { crisp, interval, grey, grey_union } kind;
  double x = 0.0;
  Ign ign;
  Ggn ggn;
  GreyUnion uni;
};

RawCell parse_cell(const json& j, const std::string& where) {
  RawCell c{};
  if (j.is_number()) {
    c.kind = RawCell::Kind::crisp;
    c.x = j.get<double>();
    return c;
  }
  if (!j.is_object() || j.size() == 0) throw MalformedInput(where + ": unrecognised cell encoding");
  if (j.contains("interval")) {
    if (j.size() != 1) throw MalformedInput(where + ": interval cell has extra keys");
    const Interval p = pair_of(j["interval"], where + ".interval");
    c.kind = RawCell::Kind::interval;
    c.ign = {p.lo, p.hi};
    return c;
  }
  if (j.contains("union")) {
    if (j.size() != 1) throw MalformedInput(where + ": union cell has extra keys");
    const json& u = j["union"];
    if (!u.is_array()) throw MalformedInput(where + ".union must be a list of [lo, hi]");
    std::vector<Interval> pieces;
    for (const auto& p : u) pieces.push_back(pair_of(p, where + ".union"));
    c.kind = RawCell::Kind::grey_union;
    c.uni = GreyUnion(std::move(pieces));
    c.ggn = ggn_from_union(c.uni);
    return c;
  }
  if (j.contains("kernel") && j.contains("greyness") && j.size() == 2) {
    c.kind = RawCell::Kind::grey;
    c.ggn = {number(j["kernel"], where + ".kernel"), number(j["greyness"], where + ".greyness")};
    return c;
  }
  throw MalformedInput(where + ": unrecognised cell encoding");
}

double as_crisp(const RawCell& c, const std::string& where) {
  if (c.kind != RawCell::Kind::crisp) throw MalformedInput(where + ": fcm cells must be numbers");
  return c.x;
}

Ign as_interval(const RawCell& c, const std::string& where) {
  switch (c.kind) {
    case RawCell::Kind::crisp: return {c.x, c.x};
    case RawCell::Kind::interval: return c.ign;
    default: throw MalformedInput(where + ": fgcm cells must be numbers or intervals");
  }
}

// Returns the grey value and, for interval/union cells, the union behind it.
std::pair<Ggn, std::optional<GreyUnion>> as_grey(const RawCell& c) {
  switch (c.kind) {
    case RawCell::Kind::crisp: return {{c.x, 0.0}, std::nullopt};
    case RawCell::Kind::grey: return {c.ggn, std::nullopt};
    case RawCell::Kind::interval: {
      GreyUnion u({{c.ign.lo, c.ign.hi}});
      return {ggn_from_union(u), u};
    }
    case RawCell::Kind::grey_union: return {c.ggn, c.uni};
  }
  return {};
}

std::string cell_name(const char* what, std::size_t i, std::size_t j) {
  return std::string(what) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw MalformedInput(std::string("model file lacks '") + key + "'");
  return doc[key];
}

}  // namespace

Model model_from_json(const json& doc, std::string default_id) {
  if (!doc.is_object()) throw MalformedInput("model file must be a JSON object");
  const json& fam = require(doc, "family");
  if (!fam.is_string()) throw MalformedInput("'family' must be a string");
  const Family family = family_from_string(fam.get<std::string>());
  const double lambda = number(require(doc, "lambda"), "'lambda'");

  const json& nodes = require(doc, "nodes");
  if (!nodes.is_array()) throw MalformedInput("'nodes' must be a list of strings");
  std::vector<std::string> names;
  for (const auto& n : nodes) {
    if (!n.is_string()) throw MalformedInput("'nodes' must be a list of strings");
    names.push_back(n.get<std::string>());
  }

  const json& wj = require(doc, "weights");
  const json& aj = require(doc, "initial");
  if (!wj.is_array() || !aj.is_array()) throw MalformedInput("'weights' and 'initial' must be lists");
  const std::size_t rows = wj.size();
  const std::size_t cols = rows == 0 ? 0 : (wj[0].is_array() ? wj[0].size() : 0);
  std::vector<std::vector<RawCell>> raw_w(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!wj[i].is_array()) throw MalformedInput("'weights' must be a list of rows");
    if (wj[i].size() != cols) throw ValidationError("weight rows differ in length");
    for (std::size_t j = 0; j < cols; ++j)
      raw_w[i].push_back(parse_cell(wj[i][j], cell_name("weights", i, j)));
  }
  std::vector<RawCell> raw_a;
  for (std::size_t i = 0; i < aj.size(); ++i)
    raw_a.push_back(parse_cell(aj[i], "initial[" + std::to_string(i + 1) + "]"));

  std::string id = default_id;
  if (doc.contains("id")) {
    if (!doc["id"].is_string()) throw MalformedInput("'id' must be a string");
    id = doc["id"].get<std::string>();
  }

  auto build_map = [&](auto convert) {
    using Cell = decltype(convert(raw_a.front(), std::string{}));
    MapSpec<Cell> m{Matrix<Cell>(rows, cols), {}};
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.weights(i, j) = convert(raw_w[i][j], cell_name("weights", i, j));
    for (std::size_t i = 0; i < raw_a.size(); ++i)
      m.initial.push_back(convert(raw_a[i], "initial[" + std::to_string(i + 1) + "]"));
    return m;
  };

  switch (family) {
    case Family::fcm:
      if (raw_a.empty()) throw ValidationError("initial state is empty");
      return Model(id, names, build_map(as_crisp), lambda);
    case Family::fgcm:
      if (raw_a.empty()) throw ValidationError("initial state is empty");
      return Model(id, names, build_map(as_interval), lambda);
    case Family::fggcm: {
      if (raw_a.empty()) throw ValidationError("initial state is empty");
      std::map<CellIndex, GreyUnion> unions;
      GreyMap m{Matrix<Ggn>(rows, cols), {}};
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          auto [g, u] = as_grey(raw_w[i][j]);
          m.weights(i, j) = g;
          if (u) unions.emplace(CellIndex{i, j}, std::move(*u));
        }
      }
      for (const auto& c : raw_a) m.initial.push_back(as_grey(c).first);
      return Model(id, names, std::move(m), lambda, std::move(unions));
    }
  }
  throw MalformedInput("unknown family");
}

namespace {

json cell_json(double x) { return x; }
json cell_json(const Ign& x) { return {{"interval", {x.lo, x.hi}}}; }
json cell_json(const Ggn& x) { return {{"kernel", x.kernel}, {"greyness", x.greyness}}; }
json union_json(const GreyUnion& u) {
  json pieces = json::array();
  for (const auto& p : u.pieces()) pieces.push_back({p.lo, p.hi});
  return {{"union", pieces}};
}

}  // namespace

json model_to_json(const Model& m) {
  json doc;
  doc["id"] = m.id();
  doc["family"] = std::string(to_string(m.family()));
  doc["lambda"] = m.lambda();
  doc["nodes"] = m.node_names();
  std::visit(
      [&](const auto& spec) {
        json rows = json::array();
        for (std::size_t i = 0; i < spec.weights.rows(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < spec.weights.cols(); ++j) {
            auto u = m.union_cells().find(CellIndex{i, j});
            row.push_back(u != m.union_cells().end() ? union_json(u->second)
                                                     : cell_json(spec.weights(i, j)));
          }
          rows.push_back(std::move(row));
        }
        doc["weights"] = std::move(rows);
        json init = json::array();
        for (const auto& c : spec.initial) init.push_back(cell_json(c));
        doc["initial"] = std::move(init);
      },
      m.map());
  return doc;
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open model file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput("model file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return model_from_json(doc, path.stem().string());
}

void save_model(const Model& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << model_to_json(m).dump(2) << '\n';
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string format_4dp(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

namespace {

std::string csv_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,node,field,value\n";
  auto row = [&](std::size_t t, std::size_t i, const char* field, double v) {
    os << t << ',' << i + 1 << ',' << field << ',' << csv_num(v) << '\n';
  };
  std::visit(
      [&](const auto& states) {
        for (std::size_t t = 0; t < states.size(); ++t) {
          for (std::size_t i = 0; i < states[t].size(); ++i) {
            const auto& c = states[t][i];
            using Cell = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<Cell, double>) {
              row(t, i, "value", c);
            } else if constexpr (std::is_same_v<Cell, Ign>) {
              row(t, i, "lo", c.lo);
              row(t, i, "hi", c.hi);
            } else {
              row(t, i, "kernel", c.kernel);
              row(t, i, "greyness", c.greyness);
            }
          }
        }
      },
      traj.states);
}

json classification_json(const Classification& c) {
  json j{{"verdict", std::string(to_string(c.verdict))},
         {"epsilon", c.epsilon},
         {"max_period", c.max_period}};
  if (c.verdict != Behavior::Chaotic) j["t_alpha"] = c.t_alpha;
  if (c.verdict == Behavior::LimitCycle) j["period"] = c.period;
  if (c.verdict == Behavior::FixedPoint) j["final_state"] = c.final_state;
  return j;
}

json verdict_json(const Verdict& v) {
  return {{"criterion", v.criterion_value},
          {"criterion_display", format_4dp(v.criterion_value)},
          {"threshold", v.threshold},
          {"outcome", std::string(to_string(v.outcome))}};
}

RunResult simulate_and_classify(const Model& m, const ReportOptions& opts) {
  RunResult r{simulate(m, opts.steps), {}, {}, 0.0, std::nullopt};
  r.classification = classify(r.trajectory, opts.epsilon, opts.max_period);
  return r;
}

RunResult run_model(const Model& m, const ReportOptions& opts) {
  RunResult r = simulate_and_classify(m, opts);
  attach_report(m, opts, r);
  return r;
}

void attach_report(const Model& m, const ReportOptions& opts, RunResult& r) {
  json rep{{"model", m.id()},
           {"family", std::string(to_string(m.family()))},
           {"lambda", m.lambda()},
           {"steps", opts.steps},
           {"classification", classification_json(r.classification)}};

  switch (m.family()) {
    case Family::fcm: {
      const Verdict v = check_fcm(m.as<double>().weights, m.lambda());
      rep.update(verdict_json(v));
      rep["condition"] = "lambda * ||W||_F < 4";
      r.criterion_kernel = v.criterion_value;
      break;
    }
    case Family::fgcm: {
      const Verdict v = check_fgcm(m.as<Ign>().weights, m.lambda());
      rep.update(verdict_json(v));
      rep["condition"] = "lambda * ||W*||_F < 4";
      r.criterion_kernel = v.criterion_value;
      break;
    }
    case Family::fggcm: {
      const Trajectory kernels_only = kernel_projection(r.trajectory);
      const Classification kcls = classify(kernels_only, opts.epsilon, opts.max_period);
      const FggcmReport fr = check_fggcm(m, r.trajectory, kcls);
      rep.update(verdict_json(fr.kernel_verdict));
      rep["condition"] = "lambda * ||W^||_F < 4 and ||M~||_F < 1";
      rep["kernel"] = verdict_json(fr.kernel_verdict);
      rep["greyness"] = verdict_json(fr.greyness_verdict);
      rep["greyness"]["authoritative"] = fr.kernel_converged;
      rep["greyness_criterion"] = fr.greyness_value;
      rep["overall"] = std::string(to_string(fr.overall));
      rep["kernel_classification"] = classification_json(kcls);
      json state = json::array();
      for (const auto& g : fr.evaluation_state)
        state.push_back({{"kernel", g.kernel}, {"greyness", g.greyness}});
      rep["evaluation_state"] = {
          {"step", fr.evaluation_step},
          {"kernel_converged", fr.kernel_converged},
          {"provenance", fr.kernel_converged ? "kernel fixed point (final iterate)"
                                             : "final iterate of a non-converged kernel run; "
                                               "greyness verdict not authoritative"},
          {"state", std::move(state)}};
      r.criterion_kernel = fr.kernel_verdict.criterion_value;
      r.criterion_greyness = fr.greyness_value;
      break;
    }
  }
  r.report = std::move(rep);
}

}  // namespace greymap::io
