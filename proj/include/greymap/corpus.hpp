#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "greymap/cogmap.hpp"

namespace greymap::corpus {

enum class Variant {
  web_fcm,
  web_fgcm,
  web_fggcm,
  web_case1_fgcm,
  web_case1_fggcm,
  web_case2_fggcm,
};

inline constexpr std::array kAllVariants = {
    Variant::web_fcm,        Variant::web_fgcm,        Variant::web_fggcm,
    Variant::web_case1_fgcm, Variant::web_case1_fggcm, Variant::web_case2_fggcm,
};

std::string_view to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view s);
std::string_view provenance(Variant v);

// Web Experience map: seven concepts, crisp weights in [-1, 1].
const std::vector<std::string>& web_node_names();
const Matrix<double>& web_weights();

// The interval, W* and grey weight matrices exactly as tabulated for
// greyness 0.01.
const Matrix<Ign>& printed_interval_weights();
const Matrix<double>& printed_w_star();
const Matrix<Ggn>& printed_grey_weights();

/// Widens every weight with |w| >= g to [max(w - g, -1), min(w + g, 1)];
/// smaller weights stay degenerate so no interval straddles zero.
Matrix<Ign> inject_greyness(const Matrix<double>& w, double g);

Model build(Variant v, double lambda);

}  // namespace greymap::corpus
