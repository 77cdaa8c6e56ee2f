#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "greymap/grey_num.hpp"
#include "greymap/interval_num.hpp"
#include "greymap/matrix.hpp"

namespace greymap {

enum class Family { fcm, fgcm, fggcm };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);  // throws MalformedInput

template <class Cell>
struct MapSpec {
  Matrix<Cell> weights;
  std::vector<Cell> initial;
  bool operator==(const MapSpec&) const = default;
};

using CrispMap = MapSpec<double>;
using IntervalMap = MapSpec<Ign>;
using GreyMap = MapSpec<Ggn>;
using AnyMap = std::variant<CrispMap, IntervalMap, GreyMap>;

/// Zero-based (row, col) of a weight cell.
struct CellIndex {
  std::size_t row = 0;
  std::size_t col = 0;
  auto operator<=>(const CellIndex&) const = default;
};

/// A validated cognitive map. The family follows from which MapSpec is held.
/// union_cells records the raw grey unions behind reduced fggcm weights so
/// that a model can be written back out in the form it was read in.
class Model {
 public:
  Model(std::string id, std::vector<std::string> node_names, AnyMap map, double lambda,
        std::map<CellIndex, GreyUnion> union_cells = {});

  Family family() const { return static_cast<Family>(map_.index()); }
  std::size_t size() const { return names_.size(); }
  const std::string& id() const { return id_; }
  const std::vector<std::string>& node_names() const { return names_; }
  double lambda() const { return lambda_; }
  const AnyMap& map() const { return map_; }
  const std::map<CellIndex, GreyUnion>& union_cells() const { return unions_; }

  // Throws ValidationError when the model is of another family.
  template <class Cell>
  const MapSpec<Cell>& as() const {
    if (const auto* m = std::get_if<MapSpec<Cell>>(&map_)) return *m;
    throw ValidationError("model '" + id_ + "' is " + std::string(to_string(family())));
  }

  Model with_lambda(double lambda) const;

  bool operator==(const Model&) const = default;

 private:
  std::string id_;
  std::vector<std::string> names_;
  AnyMap map_;
  double lambda_;
  std::map<CellIndex, GreyUnion> unions_;
};

using CrispState = std::vector<double>;
using IntervalState = std::vector<Ign>;
using GreyState = std::vector<Ggn>;
using AnyStates =
    std::variant<std::vector<CrispState>, std::vector<IntervalState>, std::vector<GreyState>>;

/// Recorded states t = 0..T of one run.
struct Trajectory {
  std::string model_id;
  double lambda = 1.0;
  AnyStates states;

  Family family() const { return static_cast<Family>(states.index()); }
  std::size_t length() const;  // T + 1
  std::size_t nodes() const;

  template <class Cell>
  const std::vector<std::vector<Cell>>& as() const {
    if (const auto* s = std::get_if<std::vector<std::vector<Cell>>>(&states)) return *s;
    throw ValidationError("trajectory is " + std::string(to_string(family())));
  }
};

CrispState fcm_step(const Matrix<double>& w, std::span<const double> a, double lambda);
IntervalState fgcm_step(const Matrix<Ign>& w, std::span<const Ign> a, double lambda);
GreyState fggcm_step(const Matrix<Ggn>& w, std::span<const Ggn> a, double lambda);

inline constexpr std::size_t kDefaultSteps = 100;

// states[0] is the model's initial vector; each later state is one
// synchronous update of the previous one.
Trajectory simulate(const Model& m, std::size_t steps = kDefaultSteps);

}  // namespace greymap
