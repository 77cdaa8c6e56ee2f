#pragma once

#include <cmath>
#include <cstddef>
#include <span>

#include "greymap/error.hpp"

namespace greymap {

/// Logistic activation 1 / (1 + e^(-lambda x)); lambda sets the slope.
inline double sigmoid(double x, double lambda) {
  return 1.0 / (1.0 + std::exp(-lambda * x));
}

inline void require_positive_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw InvalidParameter("lambda must be a finite positive number");
}

// Left-to-right accumulation. The FCM and FGGCM kernel paths both go
// through this so that their results stay bit-identical.
inline double crisp_dot(std::span<const double> w, std::span<const double> a) {
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * a[j];
  return s;
}

}  // namespace greymap
