#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simplex/face_type.hpp"
#include "simplex/model_config.hpp"
#include "simplex/profile.hpp"
#include "simplex/rng.hpp"
#include "simplex/type_distribution.hpp"
#include "simplex/weighted_index.hpp"

namespace simplex {

struct GrowthEvent {
  std::uint64_t step = 0;  // n + 1 for the transition K_n -> K_{n+1}
  std::vector<Label> chosen;
  FaceType chosen_type;
  Label new_vertex = 0;
  double new_weight = 0.0;
  std::vector<std::vector<Label>> added;  // d faces, each (chosen - one vertex) + new
  std::optional<std::vector<Label>> removed;  // Model B only
};

struct ZPoint {
  std::uint64_t step = 0;
  double z = 0.0;

  bool operator==(const ZPoint&) const = default;
};

struct TraceOptions {
  std::uint64_t z_stride = 0;  // record Z every z_stride steps; 0 disables
  bool trace_y = false;
  double y_burn_in = 0.5;  // fraction of the run skipped before recording Y
};

struct GrowthSummary {
  DegreeProfile profile;
  std::vector<ZPoint> z_trace;
  std::vector<FaceType> y_samples;
};

struct AuditReport {
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// The growing complex K_n.
///
/// Active (d-1)-faces live in a label arena indexed by their sampler slot, so
/// choosing a face is one Fenwick descent and no face is ever looked up by its
/// labels. Vertices are labelled by arrival: the initial complex uses labels
/// <= 0 and the vertex added in step m gets label m. Degrees count edges of
/// the 1-skeleton; in Model B the chosen face leaves the active set but its
/// edges stay.
class ComplexState {
 public:
  /// `cfg` must already be validated. With `audit` set, the state also keeps
  /// an explicit edge list so audit() can recount everything from scratch.
  static ComplexState init(const ModelConfig& cfg, Rng& rng, bool audit = false);

  /// One step of the dynamics; throws EmptyComplex if no face is active.
  GrowthEvent step(Rng& rng);
  /// Same transition without materializing the event.
  void advance(Rng& rng);
  /// Same transition; also returns the chosen face type.
  FaceType advance_traced(Rng& rng);

  const ModelConfig& config() const noexcept { return cfg_; }
  int dimension() const noexcept { return cfg_.d; }
  std::uint64_t steps() const noexcept { return n_; }

  /// Z_n, maintained incrementally as the sampler total.
  double partition_function() const noexcept { return index_.total(); }
  double recompute_partition_function() const;

  std::size_t active_face_count() const noexcept { return index_.size(); }
  std::size_t initial_active_face_count() const noexcept { return initial_faces_; }
  std::uint64_t edge_count() const noexcept { return edges_; }
  std::uint64_t initial_edge_count() const noexcept { return initial_edges_; }
  std::size_t vertex_count() const noexcept;

  bool has_vertex(Label v) const noexcept;
  double weight_of(Label v) const;
  std::uint32_t degree_of(Label v) const;

  /// N_k(n) for k = 0..max: vertices of degree d + k.
  std::vector<std::uint64_t> degree_counts() const;
  /// Sorted label tuples of all active faces.
  std::vector<std::vector<Label>> active_faces() const;
  FaceType type_of(std::span<const Label> face) const;

  /// Full recount of the face, edge and degree invariants. Edge checks need
  /// audit mode; the rest always runs.
  AuditReport audit() const;

 private:
  ComplexState() = default;

  template <bool kEvent, bool kTraceType>
  void transition(Rng& rng, GrowthEvent* event, FaceType* chosen_type);

  std::size_t vertex_index(Label v) const noexcept {
    return static_cast<std::size_t>(static_cast<std::int64_t>(v) - min_label_);
  }
  std::size_t insert_face(std::span<const Label> labels);

  ModelConfig cfg_;
  DynamicWeightedIndex index_;
  std::vector<Label> arena_;  // d labels per sampler slot
  Label min_label_ = 0;
  std::vector<double> weights_;           // by vertex_index
  std::vector<std::uint32_t> degrees_;    // by vertex_index
  std::vector<char> present_;             // initial label range only
  std::uint64_t n_ = 0;
  std::uint64_t edges_ = 0;
  std::uint64_t initial_edges_ = 0;
  std::size_t initial_faces_ = 0;

  bool audit_ = false;
  std::vector<std::pair<Label, Label>> edge_log_;
  std::uint64_t bad_insert_degrees_ = 0;
};

/// Runs n_steps steps, collecting the degree profile and optional traces.
GrowthSummary grow(ComplexState& state, std::uint64_t n_steps, const TraceOptions& trace,
                   Rng& rng);

struct LambdaEstimate {
  double lambda = 0.0;  // mean of Z_j / j over the last half of the trace
  double slope = 0.0;   // least-squares dZ/dj over the same window
  std::size_t points = 0;
};

/// Throws TraceTooShort for fewer than 100 points.
LambdaEstimate lambda_hat(std::span<const ZPoint> trace);

/// Resampling law of post-burn-in chosen types. Throws TooFewSamples below 10^3.
TypeDistribution empirical_type_sampler(std::span<const FaceType> samples);

}  // namespace simplex
