#include "greymap/dynamics.hpp"

#include <cmath>
#include <optional>

#include "greymap/error.hpp"

namespace greymap {

namespace {

void same_length(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionError("state vectors differ in length");
}

}  // namespace

double ggn_metric(std::span<const Ggn> a, std::span<const Ggn> b) {
  same_length(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double dk = a[i].kernel - b[i].kernel;
    const double dg = a[i].greyness - b[i].greyness;
    acc += dk * dk + dg * dg;
  }
  return std::sqrt(acc);
}

double state_distance(std::span<const double> a, std::span<const double> b) {
  same_length(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc);
}

double state_distance(std::span<const Ign> a, std::span<const Ign> b) {
  same_length(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double dl = a[i].lo - b[i].lo;
    const double dh = a[i].hi - b[i].hi;
    acc += dl * dl + dh * dh;
  }
  return std::sqrt(acc);
}

double state_distance(std::span<const Ggn> a, std::span<const Ggn> b) { return ggn_metric(a, b); }

std::string_view to_string(Behavior b) {
  switch (b) {
    case Behavior::FixedPoint: return "FixedPoint";
    case Behavior::LimitCycle: return "LimitCycle";
    case Behavior::Chaotic: return "Chaotic";
  }
  return "?";
}

namespace {

std::vector<double> flatten(const CrispState& s) { return s; }
std::vector<double> flatten(const IntervalState& s) {
  std::vector<double> out;
  for (const auto& x : s) out.insert(out.end(), {x.lo, x.hi});
  return out;
}
std::vector<double> flatten(const GreyState& s) {
  std::vector<double> out;
  for (const auto& x : s) out.insert(out.end(), {x.kernel, x.greyness});
  return out;
}

// Earliest t such that d(states[u], states[u+lag]) <= eps for every u in
// [t, T - lag], provided that range holds at least min_pairs entries.
template <class State>
std::optional<std::size_t> settled_onset(const std::vector<State>& states, std::size_t lag,
                                         double eps, std::size_t min_pairs) {
  const std::size_t pairs = states.size() - lag;
  std::size_t onset = pairs;
  while (onset > 0 && state_distance(std::span(states[onset - 1]),
                                     std::span(states[onset - 1 + lag])) <= eps)
    --onset;
  if (pairs - onset < min_pairs) return std::nullopt;
  return onset;
}

template <class State>
Classification classify_states(const std::vector<State>& states, double eps,
                               std::size_t max_period) {
  Classification c;
  c.epsilon = eps;
  c.max_period = max_period;
  const std::size_t steps = states.size() - 1;

  if (auto onset = settled_onset(states, 1, eps, 1)) {
    c.verdict = Behavior::FixedPoint;
    c.t_alpha = *onset;
    c.period = 1;
    c.final_state = flatten(states.back());
    return c;
  }
  const std::size_t p_hi = std::min(max_period, steps / 2);
  for (std::size_t p = 2; p <= p_hi; ++p) {
    if (auto onset = settled_onset(states, p, eps, p)) {
      c.verdict = Behavior::LimitCycle;
      c.t_alpha = *onset;
      c.period = p;
      return c;
    }
  }
  c.verdict = Behavior::Chaotic;
  return c;
}

}  // namespace

Classification classify(const Trajectory& traj, double epsilon, std::size_t max_period) {
  if (!(epsilon > 0.0)) throw InvalidParameter("epsilon must be positive");
  if (max_period < 2) throw InvalidParameter("max_period must be at least 2");
  if (traj.length() < max_period + 2)
    throw InsufficientData("trajectory needs at least max_period + 2 states");
  return std::visit([&](const auto& s) { return classify_states(s, epsilon, max_period); },
                    traj.states);
}

std::vector<double> successive_distances(const Trajectory& traj) {
  if (traj.length() < 2) throw InsufficientData("need at least two states");
  return std::visit(
      [](const auto& s) {
        std::vector<double> d;
        d.reserve(s.size() - 1);
        for (std::size_t t = 0; t + 1 < s.size(); ++t)
          d.push_back(state_distance(std::span(s[t]), std::span(s[t + 1])));
        return d;
      },
      traj.states);
}

namespace {

template <class F>
Trajectory project(const Trajectory& traj, F pick) {
  const auto& grey = traj.as<Ggn>();
  std::vector<CrispState> out;
  out.reserve(grey.size());
  for (const auto& s : grey) {
    CrispState c(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) c[i] = pick(s[i]);
    out.push_back(std::move(c));
  }
  return {traj.model_id, traj.lambda, std::move(out)};
}

}  // namespace

Trajectory kernel_projection(const Trajectory& traj) {
  return project(traj, [](const Ggn& g) { return g.kernel; });
}

Trajectory greyness_projection(const Trajectory& traj) {
  return project(traj, [](const Ggn& g) { return g.greyness; });
}

}  // namespace greymap
