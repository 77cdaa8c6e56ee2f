#include "greymap/interval_num.hpp"

#include <algorithm>
#include <cmath>

#include "greymap/activation.hpp"
#include "greymap/error.hpp"

namespace greymap {

bool Ign::valid() const { return std::isfinite(lo) && std::isfinite(hi) && lo <= hi; }

Ign ign_add(Ign a, Ign b) { return {a.lo + b.lo, a.hi + b.hi}; }

Ign ign_mul(Ign a, Ign b) {
  const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {std::min({p[0], p[1], p[2], p[3]}), std::max({p[0], p[1], p[2], p[3]})};
}

Ign ign_sigmoid(Ign a, double lambda) {
  require_positive_lambda(lambda);
  return {sigmoid(a.lo, lambda), sigmoid(a.hi, lambda)};
}

Ign ign_dot_row(std::span<const Ign> w_row, std::span<const Ign> a) {
  if (w_row.size() != a.size() || w_row.empty())
    throw DimensionError("weight row and state must have the same nonzero length");
  Ign acc{0.0, 0.0};
  for (std::size_t j = 0; j < a.size(); ++j) acc = ign_add(acc, ign_mul(w_row[j], a[j]));
  return acc;
}

}  // namespace greymap
