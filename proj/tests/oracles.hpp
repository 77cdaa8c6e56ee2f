#pragma once

// Reference computations for the test suites. These are written directly
// from the defining formulas and deliberately avoid the library's code paths
// (no shared helpers, no spans, no early returns) so that agreement between
// the two is meaningful.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

inline double logistic(double x, double lambda) { return 1.0 / (1.0 + std::exp(-lambda * x)); }

// A_i' = S(sum_j W_ij A_j)
inline Vec fcm_step(const Mat& w, const Vec& a, double lambda) {
  Vec out;
  for (const auto& row : w) {
    double s = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) s = s + row[j] * a[j];
    out.push_back(logistic(s, lambda));
  }
  return out;
}

inline double frobenius(const Mat& m) {
  long double acc = 0.0L;
  for (const auto& r : m)
    for (double x : r) acc += static_cast<long double>(x) * x;
  return static_cast<double>(std::sqrt(acc));
}

// Interval step by brute force over the four endpoint products.
inline void fgcm_step(const Mat& wlo, const Mat& whi, const Vec& alo, const Vec& ahi,
                      double lambda, Vec& out_lo, Vec& out_hi) {
  out_lo.clear();
  out_hi.clear();
  for (std::size_t i = 0; i < wlo.size(); ++i) {
    double lo = 0.0, hi = 0.0;
    for (std::size_t j = 0; j < alo.size(); ++j) {
      const double c[4] = {wlo[i][j] * alo[j], wlo[i][j] * ahi[j], whi[i][j] * alo[j],
                           whi[i][j] * ahi[j]};
      lo += *std::min_element(c, c + 4);
      hi += *std::max_element(c, c + 4);
    }
    out_lo.push_back(logistic(lo, lambda));
    out_hi.push_back(logistic(hi, lambda));
  }
}

// Grey update for one row:
//   k' = S(sum w^_j a^_j)
//   g' = k' * sum_j max(w°_j, a°_j)|w^_j a^_j| / sum_j |w^_j a^_j|
inline void fggcm_row(const Vec& wk, const Vec& wg, const Vec& ak, const Vec& ag, double lambda,
                      double& k_out, double& g_out) {
  double s = 0.0, num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < wk.size(); ++j) {
    s += wk[j] * ak[j];
    num += std::max(wg[j], ag[j]) * std::fabs(wk[j] * ak[j]);
    den += std::fabs(wk[j] * ak[j]);
  }
  k_out = logistic(s, lambda);
  g_out = den > 0.0 ? k_out * num / den : 0.0;
}

// M~ with theta(x) = [x >= 0].
inline Mat grey_condition(const Mat& wk, const Mat& wg, const Vec& ak, const Vec& ag,
                          double lambda) {
  const std::size_t n = ak.size();
  Mat out(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0, den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += wk[i][j] * ak[j];
      den += std::fabs(wk[i][j] * ak[j]);
    }
    for (std::size_t j = 0; j < n; ++j)
      if (ag[j] - wg[i][j] >= 0.0) out[i][j] = logistic(s, lambda) * std::fabs(ak[j] * wk[i][j]) / den;
  }
  return out;
}

inline double euclid(const Vec& a, const Vec& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc);
}

/// Seeded generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return index(2) == 1; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
