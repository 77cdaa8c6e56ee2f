#include "greymap/grey_num.hpp"

#include <algorithm>
#include <cmath>

#include "greymap/activation.hpp"
#include "greymap/error.hpp"

namespace greymap {

GreyUnion::GreyUnion(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw MalformedInput("grey union needs at least one interval");
  for (const auto& p : pieces_) {
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi))
      throw MalformedInput("grey union endpoints must be finite");
    if (p.lo > p.hi) throw MalformedInput("grey union interval has lo > hi");
    if (p.lo < -1.0 || p.hi > 1.0)
      throw MalformedInput("grey union interval leaves the domain [-1, 1]");
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t k = 1; k < pieces_.size(); ++k) {
    if (pieces_[k].lo <= pieces_[k - 1].hi)
      throw MalformedInput("grey union intervals must be pairwise disjoint");
  }
}

bool Ggn::valid() const {
  return std::isfinite(kernel) && std::isfinite(greyness) && greyness >= 0.0;
}

Ggn ggn_from_union(const GreyUnion& u, DomainMeasure m) {
  if (u.empty()) throw MalformedInput("cannot reduce an empty grey union");
  if (!(m.width > 0.0)) throw InvalidParameter("domain measure must be positive");
  double mid_sum = 0.0;
  double width_sum = 0.0;
  for (const auto& p : u.pieces()) {
    mid_sum += (p.lo + p.hi) / 2.0;
    width_sum += p.hi - p.lo;
  }
  return {mid_sum / static_cast<double>(u.pieces().size()), width_sum / m.width};
}

Ggn ggn_sigmoid(Ggn g, double lambda) {
  require_positive_lambda(lambda);
  const double k = sigmoid(g.kernel, lambda);
  return {k, k * g.greyness};
}

Ggn ggn_row_update(std::span<const Ggn> w_row, std::span<const Ggn> a, double lambda) {
  require_positive_lambda(lambda);
  if (w_row.size() != a.size() || w_row.empty())
    throw DimensionError("weight row and state must have the same nonzero length");

  double s = 0.0;
  double mass = 0.0;
  double grey_mass = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double prod = w_row[j].kernel * a[j].kernel;
    s += prod;
    const double abs_prod = std::abs(prod);
    mass += abs_prod;
    grey_mass += std::max(w_row[j].greyness, a[j].greyness) * abs_prod;
  }
  const double k = sigmoid(s, lambda);
  if (mass == 0.0) return {k, 0.0};
  return {k, k * (grey_mass / mass)};
}

}  // namespace greymap
