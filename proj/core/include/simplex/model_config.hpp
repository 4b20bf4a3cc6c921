#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simplex/error.hpp"
#include "simplex/fitness.hpp"
#include "simplex/weight_law.hpp"

namespace simplex {

using Label = std::int32_t;

/// Model A keeps every face active; Model B deactivates the chosen face.
enum class Variant { A, B };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

struct InitialComplexSpec {
  enum class Kind {
    Simplex,  // one d-simplex on labels -d..0
    Faces,    // explicit maximal faces; downward closure is taken
  };

  Kind kind = Kind::Simplex;
  /// Kind::Faces only. Labels must be <= 0.
  std::vector<std::vector<Label>> faces;
  /// Fixed vertex weights by label. Empty: weights are sampled from mu.
  std::vector<std::pair<Label, double>> weights;

  bool operator==(const InitialComplexSpec&) const = default;
};

struct ModelConfig {
  int d = 2;
  Variant variant = Variant::A;
  Fitness fitness = Fitness::constant(1.0);
  WeightLaw weights = WeightLaw::uniform01();
  InitialComplexSpec initial;
  std::uint64_t seed = 0;

  bool operator==(const ModelConfig&) const = default;
};

/// Every violated invariant of `cfg`. Empty when the config is valid.
std::vector<Issue> config_issues(const ModelConfig& cfg);

/// Returns the normalized config (atoms sorted by value, probabilities
/// rescaled to sum to exactly 1) or throws ValidationError with all issues.
ModelConfig validate_config(ModelConfig cfg);

/// Vertex labels of the initial complex in increasing order.
std::vector<Label> initial_vertex_labels(const ModelConfig& cfg);

/// Maximal faces of the initial complex (the single simplex for Kind::Simplex).
std::vector<std::vector<Label>> initial_maximal_faces(const ModelConfig& cfg);

}  // namespace simplex
