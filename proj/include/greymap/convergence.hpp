#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "greymap/cogmap.hpp"
#include "greymap/dynamics.hpp"
#include "greymap/matrix.hpp"

namespace greymap {

enum class Outcome { UniqueFixedPoint, AtLeastOneFixedPoint, Inconclusive };

std::string_view to_string(Outcome o);

/// A sufficient-condition check: value compared against threshold.
struct Verdict {
  double criterion_value = 0.0;
  double threshold = 0.0;
  Outcome outcome = Outcome::Inconclusive;
};

inline constexpr double kBoundaryTolerance = 1e-12;

// Values within kBoundaryTolerance of the threshold give AtLeastOneFixedPoint;
// otherwise strictly below is UniqueFixedPoint.
Verdict make_verdict(double value, double threshold);

double frobenius_norm(const Matrix<double>& m);

// Magnitude matrix for sign-consistent interval weights. Throws
// MixedSignWeight on the first interval with lo < 0 < hi.
Matrix<double> w_star(const Matrix<Ign>& w);

Matrix<double> kernels(const Matrix<Ggn>& w);
Matrix<double> greynesses(const Matrix<Ggn>& w);

Verdict check_fcm(const Matrix<double>& w, double lambda);
Verdict check_fgcm(const Matrix<Ign>& w, double lambda);

/// Greyness condition matrix M~ at kernel state a_hat and greyness a_grey:
///   m~_ij = S(sum_k w^_ik a^_k) |a^_j w^_ij| theta(a°_j - w°_ij) / sum_k |w^_ik a^_k|
/// with theta(0) = 1. Throws DegenerateRow when a row's denominator is zero.
Matrix<double> grey_condition_matrix(const Matrix<Ggn>& w, std::span<const double> a_hat,
                                     std::span<const double> a_grey, double lambda);

struct FggcmReport {
  Verdict kernel_verdict;
  double greyness_value = 0.0;
  Verdict greyness_verdict;
  Outcome overall = Outcome::Inconclusive;
  GreyState evaluation_state;
  std::size_t evaluation_step = 0;
  // When false the greyness verdict was taken at the last iterate of a
  // non-converged kernel run and is not authoritative.
  bool kernel_converged = false;
};

/// Kernel condition from lambda * ||W^||_F against 4 and greyness condition
/// from ||M~||_F against 1, evaluated at the final state of traj.
/// kernel_converged is taken from cls, which should classify the kernels.
FggcmReport check_fggcm(const Model& m, const Trajectory& traj, const Classification& cls);

struct Corollary3Result {
  Matrix<double> m;
  double norm = 0.0;
  bool applicable = false;  // a°_j >= w°_ij everywhere
};

// Greyness transfer matrix between kernel states a_t and a_t1:
//   M_ij = a_t1_i |w^_ij a_t_j| / sum_k |w^_ik a_t_k|
Corollary3Result corollary3_check(const Matrix<Ggn>& w, std::span<const double> a_t,
                                  std::span<const double> a_t1, std::span<const double> grey_t);

// ||g' - g|| where g' is the greyness after one update from state.
double greyness_stationarity_residual(const Matrix<Ggn>& w, std::span<const Ggn> state,
                                      double lambda);

// ||g - M g||
double eigen_residual(const Matrix<double>& m, std::span<const double> g);

}  // namespace greymap
