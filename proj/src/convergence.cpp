#include "greymap/convergence.hpp"

#include <cmath>

#include "greymap/activation.hpp"
#include "greymap/error.hpp"

namespace greymap {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::UniqueFixedPoint: return "UniqueFixedPoint";
    case Outcome::AtLeastOneFixedPoint: return "AtLeastOneFixedPoint";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict make_verdict(double value, double threshold) {
  Verdict v{value, threshold, Outcome::Inconclusive};
  if (std::abs(value - threshold) <= kBoundaryTolerance)
    v.outcome = Outcome::AtLeastOneFixedPoint;
  else if (value < threshold)
    v.outcome = Outcome::UniqueFixedPoint;
  return v;
}

double frobenius_norm(const Matrix<double>& m) {
  double acc = 0.0;
  for (double x : m.values()) acc += x * x;
  return std::sqrt(acc);
}

Matrix<double> w_star(const Matrix<Ign>& w) {
  Matrix<double> out(w.rows(), w.cols());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      const Ign& x = w(i, j);
      if (x.lo < 0.0 && x.hi > 0.0) throw MixedSignWeight(i + 1, j + 1);
      out(i, j) = x.hi <= 0.0 ? std::abs(x.lo) : x.hi;
    }
  }
  return out;
}

Matrix<double> kernels(const Matrix<Ggn>& w) {
  return w.map([](const Ggn& g) { return g.kernel; });
}

Matrix<double> greynesses(const Matrix<Ggn>& w) {
  return w.map([](const Ggn& g) { return g.greyness; });
}

Verdict check_fcm(const Matrix<double>& w, double lambda) {
  require_positive_lambda(lambda);
  if (!w.square() || w.empty()) throw DimensionError("weight matrix must be square and nonempty");
  return make_verdict(lambda * frobenius_norm(w), 4.0);
}

Verdict check_fgcm(const Matrix<Ign>& w, double lambda) {
  require_positive_lambda(lambda);
  if (!w.square() || w.empty()) throw DimensionError("weight matrix must be square and nonempty");
  return make_verdict(lambda * frobenius_norm(w_star(w)), 4.0);
}

namespace {

void check_square(const Matrix<Ggn>& w, std::size_t n) {
  if (!w.square() || w.rows() != n || n == 0)
    throw DimensionError("weight matrix and state vectors disagree in size");
}

// |w^_ij a_j| for row i, plus their sum.
double row_abs_terms(const Matrix<Ggn>& w, std::size_t i, std::span<const double> a,
                     std::vector<double>& terms) {
  terms.resize(a.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    terms[j] = std::abs(w(i, j).kernel * a[j]);
    sum += terms[j];
  }
  if (sum == 0.0) throw DegenerateRow(i + 1);
  return sum;
}

double row_kernel_input(const Matrix<Ggn>& w, std::size_t i, std::span<const double> a) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += w(i, j).kernel * a[j];
  return s;
}

}  // namespace

Matrix<double> grey_condition_matrix(const Matrix<Ggn>& w, std::span<const double> a_hat,
                                     std::span<const double> a_grey, double lambda) {
  require_positive_lambda(lambda);
  check_square(w, a_hat.size());
  if (a_grey.size() != a_hat.size()) throw DimensionError("kernel and greyness vectors differ");
  const std::size_t n = a_hat.size();
  Matrix<double> out(n, n);
  std::vector<double> terms;
  for (std::size_t i = 0; i < n; ++i) {
    const double denom = row_abs_terms(w, i, a_hat, terms);
    const double next = sigmoid(row_kernel_input(w, i, a_hat), lambda);
    for (std::size_t j = 0; j < n; ++j) {
      const bool gate = a_grey[j] - w(i, j).greyness >= 0.0;
      out(i, j) = gate ? next * terms[j] / denom : 0.0;
    }
  }
  return out;
}

namespace {

Outcome combine(Outcome a, Outcome b) {
  if (a == Outcome::Inconclusive || b == Outcome::Inconclusive) return Outcome::Inconclusive;
  if (a == Outcome::UniqueFixedPoint && b == Outcome::UniqueFixedPoint)
    return Outcome::UniqueFixedPoint;
  return Outcome::AtLeastOneFixedPoint;
}

}  // namespace

FggcmReport check_fggcm(const Model& m, const Trajectory& traj, const Classification& cls) {
  if (m.family() != Family::fggcm) throw ValidationError("check_fggcm needs an fggcm model");
  const auto& states = traj.as<Ggn>();
  if (states.empty()) throw InsufficientData("empty trajectory");
  const auto& w = m.as<Ggn>().weights;
  if (states.front().size() != m.size())
    throw DimensionError("trajectory does not match the model size");

  FggcmReport r;
  r.kernel_verdict = make_verdict(m.lambda() * frobenius_norm(kernels(w)), 4.0);
  r.kernel_converged = cls.is_fixed_point();
  r.evaluation_step = states.size() - 1;
  r.evaluation_state = states.back();

  std::vector<double> a_hat(m.size());
  std::vector<double> a_grey(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    a_hat[i] = r.evaluation_state[i].kernel;
    a_grey[i] = r.evaluation_state[i].greyness;
  }
  r.greyness_value = frobenius_norm(grey_condition_matrix(w, a_hat, a_grey, m.lambda()));
  r.greyness_verdict = make_verdict(r.greyness_value, 1.0);
  r.overall = combine(r.kernel_verdict.outcome, r.greyness_verdict.outcome);
  return r;
}

Corollary3Result corollary3_check(const Matrix<Ggn>& w, std::span<const double> a_t,
                                  std::span<const double> a_t1, std::span<const double> grey_t) {
  const std::size_t n = a_t.size();
  check_square(w, n);
  if (a_t1.size() != n || grey_t.size() != n)
    throw DimensionError("state vectors differ in length");
  Corollary3Result r{Matrix<double>(n, n), 0.0, true};
  std::vector<double> terms;
  for (std::size_t i = 0; i < n; ++i) {
    const double denom = row_abs_terms(w, i, a_t, terms);
    for (std::size_t j = 0; j < n; ++j) {
      r.m(i, j) = a_t1[i] * terms[j] / denom;
      if (grey_t[j] < w(i, j).greyness) r.applicable = false;
    }
  }
  r.norm = frobenius_norm(r.m);
  return r;
}

double greyness_stationarity_residual(const Matrix<Ggn>& w, std::span<const Ggn> state,
                                      double lambda) {
  const GreyState next = fggcm_step(w, state, lambda);
  double acc = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double d = next[i].greyness - state[i].greyness;
    acc += d * d;
  }
  return std::sqrt(acc);
}

double eigen_residual(const Matrix<double>& m, std::span<const double> g) {
  if (!m.square() || m.rows() != g.size()) throw DimensionError("matrix and vector disagree");
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double d = g[i] - crisp_dot(m.row(i), g);
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace greymap
