#pragma once

#include <span>

namespace greymap {

/// Interval grey number [lo, hi].
struct Ign {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool valid() const;
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool operator==(const Ign&) const = default;
};

Ign ign_add(Ign a, Ign b);
Ign ign_mul(Ign a, Ign b);
Ign ign_sigmoid(Ign a, double lambda);

// Interval sum of interval products; encloses every crisp dot product of
// member values.
Ign ign_dot_row(std::span<const Ign> w_row, std::span<const Ign> a);

}  // namespace greymap
