#include "greymap/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "greymap/error.hpp"

namespace greymap::corpus {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::web_fcm: return "web_fcm";
    case Variant::web_fgcm: return "web_fgcm";
    case Variant::web_fggcm: return "web_fggcm";
    case Variant::web_case1_fgcm: return "web_case1_fgcm";
    case Variant::web_case1_fggcm: return "web_case1_fggcm";
    case Variant::web_case2_fggcm: return "web_case2_fggcm";
  }
  return "?";
}

std::optional<Variant> variant_from_string(std::string_view s) {
  for (Variant v : kAllVariants)
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::string_view provenance(Variant v) {
  switch (v) {
    case Variant::web_fcm:
      return "Web Experience FCM: tabulated crisp weight matrix, initial state (1,1,1,1,1,1,0).";
    case Variant::web_fgcm:
      return "Web Experience FGCM: crisp weights widened by greyness 0.01 (weights with "
             "|w| < 0.01 kept degenerate); initial state [0.99,1.00] on C1..C6, [0,0] on C7.";
    case Variant::web_fggcm:
      return "Web Experience FGGCM: tabulated kernel/greyness weight matrix. The initial state "
             "uses greyness 0.010 on C1..C6 as tabulated, although the half-width reduction of "
             "[0.99,1.00] gives 0.005 (the weight table itself uses 0.005).";
    case Variant::web_case1_fgcm:
      return "Web Experience FGCM with w11 = [-0.1, 0.1]; the mixed-sign weight makes W* undefined.";
    case Variant::web_case1_fggcm:
      return "Web Experience FGGCM with w11 = 0_{0.1}, the grey form of [-0.1, 0.1].";
    case Variant::web_case2_fggcm:
      return "Web Experience FGGCM with multi-interval weights w11, w12, w33, w15 reduced to "
             "kernel (mean of midpoints) and greyness (total width / 2). Initial state as web_fggcm.";
  }
  return "";
}

const std::vector<std::string>& web_node_names() {
  static const std::vector<std::string> names = {
      "Exploration", "Scanning",    "Temporal Restrictions", "Data Restrictions",
      "Achievement", "Pertinence",  "Unsuccess",
  };
  return names;
}

const Matrix<double>& web_weights() {
  static const Matrix<double> w = {
      {0.0, -0.9, -0.88, 1.0, -0.85, -0.83, 1.0},
      {1.0, 0.0, -0.93, -0.89, -0.9, -0.94, 1.0},
      {-0.98, -0.93, -1.0, -1.0, 1.0, 1.0, 1.0},
      {-0.99, -0.89, -1.0, -0.39, 0.73, 0.58, 0.7},
      {1.0, 1.0, 1.0, 1.0, -0.8, 0.51, 1.0},
      {1.0, 1.0, 0.83, 1.0, 0.51, -0.39, 1.0},
      {1.0, 1.0, 1.0, 1.0, -0.71, -0.49, -0.67},
  };
  return w;
}

const Matrix<Ign>& printed_interval_weights() {
  static const Matrix<Ign> w = {
      {{0, 0}, {-0.91, -0.89}, {-0.89, -0.87}, {0.99, 1.00}, {-0.86, -0.84}, {-0.84, -0.82}, {0.99, 1.00}},
      {{0.99, 1.00}, {0, 0}, {-0.94, -0.92}, {-0.90, -0.88}, {-0.91, -0.89}, {-0.95, -0.93}, {0.99, 1.00}},
      {{-0.99, -0.97}, {-0.94, -0.92}, {-1.00, -0.99}, {-1.00, -0.99}, {0.99, 1.00}, {0.99, 1.00}, {0.99, 1.00}},
      {{-1.00, -0.98}, {-0.90, -0.88}, {-1.00, -0.99}, {-0.40, -0.38}, {0.72, 0.74}, {0.57, 0.59}, {0.69, 0.71}},
      {{0.99, 1.00}, {0.99, 1.00}, {0.99, 1.00}, {0.99, 1.00}, {-0.81, -0.79}, {0.50, 0.52}, {0.99, 1.00}},
      {{0.99, 1.00}, {0.99, 1.00}, {0.82, 0.84}, {0.99, 1.00}, {0.50, 0.52}, {-0.40, -0.38}, {0.99, 1.00}},
      {{0.99, 1.00}, {0.99, 1.00}, {0.99, 1.00}, {0.99, 1.00}, {-0.72, -0.70}, {-0.50, -0.48}, {-0.68, -0.66}},
  };
  return w;
}

const Matrix<double>& printed_w_star() {
  static const Matrix<double> w = {
      {0, 0.91, 0.89, 1.00, 0.86, 0.84, 1.00},
      {1.00, 0, 0.94, 0.90, 0.91, 0.95, 1.00},
      {0.99, 0.94, 1.00, 1.00, 1.00, 1.00, 1.00},
      {1.00, 0.90, 1.00, 0.40, 0.74, 0.59, 0.71},
      {1.00, 1.00, 1.00, 1.00, 0.81, 0.52, 1.00},
      {1.00, 1.00, 0.84, 1.00, 0.52, 0.40, 1.00},
      {1.00, 1.00, 1.00, 1.00, 0.72, 0.50, 0.68},
  };
  return w;
}

const Matrix<Ggn>& printed_grey_weights() {
  static const Matrix<Ggn> w = {
      {{0.000, 0.000}, {-0.900, 0.010}, {-0.880, 0.010}, {0.995, 0.005}, {-0.850, 0.010}, {-0.830, 0.010}, {0.995, 0.005}},
      {{0.995, 0.005}, {0.000, 0.000}, {-0.930, 0.010}, {-0.890, 0.010}, {-0.900, 0.010}, {-0.940, 0.010}, {0.995, 0.005}},
      {{-0.980, 0.010}, {-0.930, 0.010}, {-0.995, 0.005}, {-0.995, 0.005}, {0.995, 0.005}, {0.995, 0.005}, {0.995, 0.005}},
      {{-0.990, 0.010}, {-0.890, 0.010}, {-0.995, 0.005}, {-0.390, 0.010}, {0.730, 0.010}, {0.580, 0.010}, {0.700, 0.010}},
      {{0.995, 0.005}, {0.995, 0.005}, {0.995, 0.005}, {0.995, 0.005}, {-0.800, 0.010}, {0.510, 0.010}, {0.995, 0.005}},
      {{0.995, 0.005}, {0.995, 0.005}, {0.830, 0.010}, {0.995, 0.005}, {0.510, 0.010}, {-0.390, 0.010}, {0.995, 0.005}},
      {{0.995, 0.005}, {0.995, 0.005}, {0.995, 0.005}, {0.995, 0.005}, {-0.710, 0.010}, {-0.490, 0.010}, {-0.670, 0.010}},
  };
  return w;
}

Matrix<Ign> inject_greyness(const Matrix<double>& w, double g) {
  if (!(g > 0.0) || !std::isfinite(g)) throw InvalidParameter("greyness level must be positive");
  return w.map([g](double x) -> Ign {
    if (!(x >= -1.0 && x <= 1.0)) throw InvalidParameter("weights must lie in [-1, 1]");
    if (std::abs(x) < g) return {x, x};
    return {std::max(x - g, -1.0), std::min(x + g, 1.0)};
  });
}

namespace {

constexpr double kGreyLevel = 0.01;
constexpr std::size_t kNodes = 7;

std::vector<Ign> interval_initial() {
  std::vector<Ign> a(kNodes, Ign{0.99, 1.00});
  a.back() = {0.0, 0.0};
  return a;
}

std::vector<Ggn> grey_initial() {
  std::vector<Ggn> a(kNodes, Ggn{0.995, 0.010});
  a.back() = {0.0, 0.0};
  return a;
}

const Ign kCase1Interval{-0.1, 0.1};

std::map<CellIndex, GreyUnion> case2_unions() {
  return {
      {{0, 0}, GreyUnion({{-0.9, -0.75}, {0.4, 0.9}})},
      {{0, 1}, GreyUnion({{-0.95, -0.89}, {-0.83, -0.83}, {-0.8, -0.75}})},
      {{2, 2}, GreyUnion({{-1.0, -0.95}, {-0.94, -0.90}, {-0.89, 0.88}})},
      {{0, 4}, GreyUnion({{0.99, 1.0}, {0.95, 0.98}, {-0.90, 0.93}})},
  };
}

}  // namespace

Model build(Variant v, double lambda) {
  const std::string id(to_string(v));
  const auto& names = web_node_names();
  switch (v) {
    case Variant::web_fcm:
      return Model(id, names, CrispMap{web_weights(), {1, 1, 1, 1, 1, 1, 0}}, lambda);
    case Variant::web_fgcm:
      return Model(id, names, IntervalMap{inject_greyness(web_weights(), kGreyLevel), interval_initial()},
                   lambda);
    case Variant::web_fggcm:
      return Model(id, names, GreyMap{printed_grey_weights(), grey_initial()}, lambda);
    case Variant::web_case1_fgcm: {
      auto w = inject_greyness(web_weights(), kGreyLevel);
      w(0, 0) = kCase1Interval;
      return Model(id, names, IntervalMap{std::move(w), interval_initial()}, lambda);
    }
    case Variant::web_case1_fggcm: {
      auto w = printed_grey_weights();
      w(0, 0) = ggn_from_union(GreyUnion({{kCase1Interval.lo, kCase1Interval.hi}}));
      return Model(id, names, GreyMap{std::move(w), grey_initial()}, lambda);
    }
    case Variant::web_case2_fggcm: {
      auto w = printed_grey_weights();
      auto unions = case2_unions();
      for (const auto& [idx, u] : unions) w(idx.row, idx.col) = ggn_from_union(u);
      return Model(id, names, GreyMap{std::move(w), grey_initial()}, lambda, std::move(unions));
    }
  }
  throw InvalidParameter("unknown corpus variant");
}

}  // namespace greymap::corpus
