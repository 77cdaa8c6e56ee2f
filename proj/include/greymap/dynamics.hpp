#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "greymap/cogmap.hpp"

namespace greymap {

/// Distance on grey vectors: Euclidean over the concatenated kernel and
/// greyness components.
double ggn_metric(std::span<const Ggn> a, std::span<const Ggn> b);

// Family distances used by the classifier. Interval states are compared as
// (lo, hi) pairs.
double state_distance(std::span<const double> a, std::span<const double> b);
double state_distance(std::span<const Ign> a, std::span<const Ign> b);
double state_distance(std::span<const Ggn> a, std::span<const Ggn> b);

enum class Behavior { FixedPoint, LimitCycle, Chaotic };

std::string_view to_string(Behavior b);

struct Classification {
  Behavior verdict = Behavior::Chaotic;
  std::size_t t_alpha = 0;   // onset of the settled tail (FixedPoint / LimitCycle)
  std::size_t period = 0;    // LimitCycle only; 1 for FixedPoint, 0 for Chaotic
  std::vector<double> final_state;  // FixedPoint only, flattened family components
  double epsilon = 0.0;
  std::size_t max_period = 0;

  bool is_fixed_point() const { return verdict == Behavior::FixedPoint; }
};

inline constexpr double kDefaultEpsilon = 1e-8;
inline constexpr std::size_t kDefaultMaxPeriod = 50;

/// Classifies the settled tail of a trajectory with T steps.
///
/// FixedPoint when consecutive states agree within epsilon from some
/// earliest t_alpha through the end. Otherwise LimitCycle for the smallest
/// period P in [2, min(max_period, T/2)] such that states t and t+P agree
/// within epsilon for every t >= t_alpha, with at least P such comparisons.
/// Anything else is Chaotic.
Classification classify(const Trajectory& traj, double epsilon = kDefaultEpsilon,
                        std::size_t max_period = kDefaultMaxPeriod);

std::vector<double> successive_distances(const Trajectory& traj);

// Crisp views of a grey trajectory.
Trajectory kernel_projection(const Trajectory& traj);
Trajectory greyness_projection(const Trajectory& traj);

}  // namespace greymap
