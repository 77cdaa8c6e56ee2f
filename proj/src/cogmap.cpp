#include "greymap/cogmap.hpp"

#include <cmath>

#include "greymap/activation.hpp"
#include "greymap/error.hpp"

namespace greymap {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::fcm: return "fcm";
    case Family::fgcm: return "fgcm";
    case Family::fggcm: return "fggcm";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  if (s == "fcm") return Family::fcm;
  if (s == "fgcm") return Family::fgcm;
  if (s == "fggcm") return Family::fggcm;
  throw MalformedInput("unknown family '" + std::string(s) + "' (expected fcm, fgcm or fggcm)");
}

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool in_unit(double x) { return std::isfinite(x) && x >= -1.0 && x <= 1.0; }

void check_cell(const double& w, std::size_t i, std::size_t j) {
  if (!in_unit(w)) throw ValidationError("weight " + at(i, j) + " outside [-1, 1]");
}
void check_cell(const Ign& w, std::size_t i, std::size_t j) {
  if (!w.valid() || w.lo < -1.0 || w.hi > 1.0)
    throw ValidationError("interval weight " + at(i, j) + " invalid or outside [-1, 1]");
}
void check_cell(const Ggn& w, std::size_t i, std::size_t j) {
  if (!w.valid() || !in_unit(w.kernel))
    throw ValidationError("grey weight " + at(i, j) +
                          " needs kernel in [-1, 1] and finite greyness >= 0");
}

bool state_ok(const double& x) { return std::isfinite(x); }
bool state_ok(const Ign& x) { return x.valid(); }
bool state_ok(const Ggn& x) { return x.valid(); }

template <class Cell>
void validate(const MapSpec<Cell>& m, std::size_t n) {
  if (n == 0) throw ValidationError("model needs at least one node");
  if (m.weights.rows() != n || m.weights.cols() != n)
    throw ValidationError("weight matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  if (m.initial.size() != n)
    throw ValidationError("initial state must have " + std::to_string(n) + " entries");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) check_cell(m.weights(i, j), i, j);
  for (std::size_t i = 0; i < n; ++i)
    if (!state_ok(m.initial[i]))
      throw ValidationError("initial state entry " + std::to_string(i + 1) + " is invalid");
}

}  // namespace

Model::Model(std::string id, std::vector<std::string> node_names, AnyMap map, double lambda,
             std::map<CellIndex, GreyUnion> union_cells)
    : id_(std::move(id)),
      names_(std::move(node_names)),
      map_(std::move(map)),
      lambda_(lambda),
      unions_(std::move(union_cells)) {
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_))
    throw ValidationError("lambda must be a finite positive number");
  std::visit([&](const auto& m) { validate(m, names_.size()); }, map_);
  if (!unions_.empty()) {
    const auto* grey = std::get_if<GreyMap>(&map_);
    if (grey == nullptr) throw ValidationError("union-encoded weights require the fggcm family");
    for (const auto& [idx, u] : unions_) {
      if (idx.row >= size() || idx.col >= size())
        throw ValidationError("union cell " + at(idx.row, idx.col) + " out of range");
      if (grey->weights(idx.row, idx.col) != ggn_from_union(u))
        throw ValidationError("union cell " + at(idx.row, idx.col) +
                              " disagrees with its reduced weight");
    }
  }
}

Model Model::with_lambda(double lambda) const {
  return Model(id_, names_, map_, lambda, unions_);
}

std::size_t Trajectory::length() const {
  return std::visit([](const auto& s) { return s.size(); }, states);
}

std::size_t Trajectory::nodes() const {
  return std::visit([](const auto& s) { return s.empty() ? std::size_t{0} : s.front().size(); },
                    states);
}

namespace {

template <class Cell>
void check_dims(const Matrix<Cell>& w, std::size_t n) {
  if (!w.square() || w.rows() != n || n == 0)
    throw DimensionError("weight matrix and state vector sizes disagree");
}

}  // namespace

CrispState fcm_step(const Matrix<double>& w, std::span<const double> a, double lambda) {
  require_positive_lambda(lambda);
  check_dims(w, a.size());
  CrispState out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sigmoid(crisp_dot(w.row(i), a), lambda);
  return out;
}

IntervalState fgcm_step(const Matrix<Ign>& w, std::span<const Ign> a, double lambda) {
  require_positive_lambda(lambda);
  check_dims(w, a.size());
  IntervalState out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ign_sigmoid(ign_dot_row(w.row(i), a), lambda);
  return out;
}

GreyState fggcm_step(const Matrix<Ggn>& w, std::span<const Ggn> a, double lambda) {
  require_positive_lambda(lambda);
  check_dims(w, a.size());
  GreyState out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ggn_row_update(w.row(i), a, lambda);
  return out;
}

namespace {

template <class Cell, class Step>
std::vector<std::vector<Cell>> iterate(const MapSpec<Cell>& m, double lambda, std::size_t steps,
                                       Step step) {
  std::vector<std::vector<Cell>> states;
  states.reserve(steps + 1);
  states.push_back(m.initial);
  for (std::size_t t = 0; t < steps; ++t) states.push_back(step(m.weights, states.back(), lambda));
  return states;
}

}  // namespace

Trajectory simulate(const Model& m, std::size_t steps) {
  if (steps == 0) throw InvalidParameter("simulation needs at least one step");
  Trajectory traj{m.id(), m.lambda(), {}};
  switch (m.family()) {
    case Family::fcm:
      traj.states = iterate(m.as<double>(), m.lambda(), steps, fcm_step);
      break;
    case Family::fgcm:
      traj.states = iterate(m.as<Ign>(), m.lambda(), steps, fgcm_step);
      break;
    case Family::fggcm:
      traj.states = iterate(m.as<Ggn>(), m.lambda(), steps, fggcm_step);
      break;
  }
  return traj;
}

}  // namespace greymap
