#pragma once

#include <span>
#include <vector>

namespace greymap {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;
};

/// A general grey number in raw form: a finite union of closed intervals
/// inside [-1, 1]. Points are width-zero intervals. Construction sorts the
/// pieces ascending and rejects overlaps, inverted bounds and anything
/// outside the value domain.
class GreyUnion {
 public:
  GreyUnion() = default;
  explicit GreyUnion(std::vector<Interval> pieces);

  std::span<const Interval> pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  bool operator==(const GreyUnion&) const = default;

 private:
  std::vector<Interval> pieces_;
};

/// Reduced general grey number: kernel plus greyness.
struct Ggn {
  double kernel = 0.0;
  double greyness = 0.0;

  bool valid() const;
  bool operator==(const Ggn&) const = default;
};

/// Measure of the value domain used to normalise greyness.
struct DomainMeasure {
  double width = 2.0;
};

inline constexpr DomainMeasure kUnitDomain{2.0};

// kernel = mean of the piece midpoints, greyness = total width / m.width.
Ggn ggn_from_union(const GreyUnion& u, DomainMeasure m = kUnitDomain);

// Kernel goes through the sigmoid; greyness is scaled by the new kernel.
Ggn ggn_sigmoid(Ggn g, double lambda);

/// One node update of a general grey map.
///
/// The kernel is the crisp sigmoid of sum_j w_j.kernel * a_j.kernel. The
/// greyness is the new kernel times the |w_j a_j|-weighted average of
/// max(w_j.greyness, a_j.greyness). A row with no absolute weighted mass
/// carries no greyness.
Ggn ggn_row_update(std::span<const Ggn> w_row, std::span<const Ggn> a, double lambda);

}  // namespace greymap
