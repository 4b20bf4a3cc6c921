#include "simplex/complex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

namespace simplex {

namespace {

// All size-`size` subsets of a sorted label set, appended in lexicographic order.
void subsets(std::span<const Label> labels, std::size_t size, std::set<std::vector<Label>>& out) {
  if (size > labels.size() || size == 0) return;
  std::vector<char> pick(labels.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), 1);
  do {
    std::vector<Label> s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (pick[i]) s.push_back(labels[i]);
    }
    out.insert(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

ComplexState ComplexState::init(const ModelConfig& cfg, Rng& rng, bool audit) {
  ComplexState st;
  st.cfg_ = cfg;
  st.audit_ = audit;
  const auto d = static_cast<std::size_t>(cfg.d);

  const auto maximal = initial_maximal_faces(cfg);
  const auto labels = initial_vertex_labels(cfg);
  if (labels.empty()) throw Error(ErrorCode::BadInitialComplex, "initial complex is empty");
  st.min_label_ = labels.front();
  const std::size_t span = static_cast<std::size_t>(0 - st.min_label_) + 1;
  st.weights_.assign(span, 0.0);
  st.degrees_.assign(span, 0);
  st.present_.assign(span, 0);

  std::map<Label, double> fixed(cfg.initial.weights.begin(), cfg.initial.weights.end());
  for (Label v : labels) {
    const std::size_t i = st.vertex_index(v);
    st.present_[i] = 1;
    st.weights_[i] = fixed.empty() ? cfg.weights.sample(rng) : fixed.at(v);
  }

  std::set<std::vector<Label>> active;
  std::set<std::vector<Label>> edges;
  for (const auto& face : maximal) {
    subsets(face, d, active);
    subsets(face, 2, edges);
  }
  for (const auto& e : edges) {
    ++st.degrees_[st.vertex_index(e[0])];
    ++st.degrees_[st.vertex_index(e[1])];
    if (audit) st.edge_log_.emplace_back(e[0], e[1]);
  }
  st.edges_ = st.initial_edges_ = edges.size();

  st.index_ = DynamicWeightedIndex(active.size() * 4 + 16);
  for (const auto& face : active) st.insert_face(face);
  st.initial_faces_ = active.size();
  return st;
}

std::size_t ComplexState::insert_face(std::span<const Label> labels) {
  const auto d = static_cast<std::size_t>(cfg_.d);
  std::array<double, kMaxDimension> w{};
  for (std::size_t j = 0; j < d; ++j) w[j] = weights_[vertex_index(labels[j])];
  std::span<double> type(w.data(), d);
  sort_small(type);
  const auto h = index_.insert(cfg_.fitness.evaluate_sorted(type));
  const std::size_t need = (static_cast<std::size_t>(h) + 1) * d;
  if (arena_.size() < need) arena_.resize(std::max(need, arena_.size() * 2));
  std::copy(labels.begin(), labels.end(), arena_.begin() + static_cast<std::ptrdiff_t>(h * d));
  return h;
}

template <bool kEvent, bool kTraceType>
void ComplexState::transition(Rng& rng, GrowthEvent* event, FaceType* chosen_type) {
  if (index_.empty()) throw Error(ErrorCode::EmptyComplex, "no active face to subdivide");
  const auto d = static_cast<std::size_t>(cfg_.d);

  const auto h = index_.sample(rng);
  std::array<Label, kMaxDimension> chosen{};
  std::copy_n(arena_.begin() + static_cast<std::ptrdiff_t>(h * d), d, chosen.begin());

  const double w_new = cfg_.weights.sample(rng);
  const auto v = static_cast<Label>(n_ + 1);
  weights_.push_back(w_new);
  degrees_.push_back(static_cast<std::uint32_t>(cfg_.d));

  if constexpr (kEvent || kTraceType) {
    std::vector<double> tw(d);
    for (std::size_t j = 0; j < d; ++j) tw[j] = weights_[vertex_index(chosen[j])];
    FaceType t(std::move(tw));
    if constexpr (kEvent) {
      event->step = n_ + 1;
      event->chosen.assign(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(d));
      event->chosen_type = t;
      event->new_vertex = v;
      event->new_weight = w_new;
      event->added.clear();
      event->removed.reset();
    }
    if constexpr (kTraceType) *chosen_type = std::move(t);
  }

  if (cfg_.variant == Variant::B) {
    index_.remove(h);
    if constexpr (kEvent) event->removed = event->chosen;
  }

  // Subdivision: (chosen minus chosen[i]) + {v}; v is the largest label so
  // appending keeps the tuple sorted.
  std::array<Label, kMaxDimension> face{};
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t j = 0;
    for (std::size_t m = 0; m < d; ++m) {
      if (m != i) face[j++] = chosen[m];
    }
    face[d - 1] = v;
    insert_face(std::span<const Label>(face.data(), d));
    if constexpr (kEvent) {
      event->added.emplace_back(face.begin(), face.begin() + static_cast<std::ptrdiff_t>(d));
    }
  }

  for (std::size_t m = 0; m < d; ++m) {
    ++degrees_[vertex_index(chosen[m])];
    if (audit_) edge_log_.emplace_back(chosen[m], v);
  }
  if (audit_) {
    std::uint32_t fresh = 0;
    for (std::size_t e = edge_log_.size() - d; e < edge_log_.size(); ++e) {
      fresh += (edge_log_[e].first == v || edge_log_[e].second == v) ? 1u : 0u;
    }
    if (fresh != static_cast<std::uint32_t>(cfg_.d)) ++bad_insert_degrees_;
  }
  edges_ += d;
  ++n_;
}

GrowthEvent ComplexState::step(Rng& rng) {
  GrowthEvent ev;
  transition<true, false>(rng, &ev, nullptr);
  return ev;
}

void ComplexState::advance(Rng& rng) { transition<false, false>(rng, nullptr, nullptr); }

FaceType ComplexState::advance_traced(Rng& rng) {
  FaceType t;
  transition<false, true>(rng, nullptr, &t);
  return t;
}

double ComplexState::recompute_partition_function() const {
  const auto d = static_cast<std::size_t>(cfg_.d);
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t h = 0; h < index_.slot_count(); ++h) {
    if (!index_.live(static_cast<DynamicWeightedIndex::Handle>(h))) continue;
    const double f =
        cfg_.fitness(type_of(std::span<const Label>(arena_.data() + h * d, d)));
    const double y = f - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

std::size_t ComplexState::vertex_count() const noexcept {
  return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), 1)) + n_;
}

bool ComplexState::has_vertex(Label v) const noexcept {
  if (v < min_label_ || v > static_cast<Label>(n_)) return false;
  return v > 0 || present_[vertex_index(v)] != 0;
}

double ComplexState::weight_of(Label v) const {
  if (!has_vertex(v)) throw Error(ErrorCode::InvalidArgument, "no vertex " + std::to_string(v));
  return weights_[vertex_index(v)];
}

std::uint32_t ComplexState::degree_of(Label v) const {
  if (!has_vertex(v)) throw Error(ErrorCode::InvalidArgument, "no vertex " + std::to_string(v));
  return degrees_[vertex_index(v)];
}

std::vector<std::uint64_t> ComplexState::degree_counts() const {
  std::vector<std::uint64_t> counts;
  const auto d = static_cast<std::uint32_t>(cfg_.d);
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i < present_.size() && !present_[i]) continue;
    if (degrees_[i] < d) continue;
    const std::size_t k = degrees_[i] - d;
    if (k >= counts.size()) counts.resize(k + 1, 0);
    ++counts[k];
  }
  return counts;
}

FaceType ComplexState::type_of(std::span<const Label> face) const {
  std::vector<double> w;
  w.reserve(face.size());
  for (Label l : face) w.push_back(weights_[vertex_index(l)]);
  return FaceType(std::move(w));
}

std::vector<std::vector<Label>> ComplexState::active_faces() const {
  const auto d = static_cast<std::size_t>(cfg_.d);
  std::vector<std::vector<Label>> out;
  out.reserve(index_.size());
  for (std::size_t h = 0; h < index_.slot_count(); ++h) {
    if (!index_.live(static_cast<DynamicWeightedIndex::Handle>(h))) continue;
    out.emplace_back(arena_.begin() + static_cast<std::ptrdiff_t>(h * d),
                     arena_.begin() + static_cast<std::ptrdiff_t>((h + 1) * d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AuditReport ComplexState::audit() const {
  AuditReport rep;
  auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };
  const auto d = static_cast<std::uint64_t>(cfg_.d);

  const std::uint64_t per_step = cfg_.variant == Variant::A ? d : d - 1;
  if (index_.size() != initial_faces_ + per_step * n_) {
    fail("active face count " + std::to_string(index_.size()) + " != " +
         std::to_string(initial_faces_ + per_step * n_));
  }
  if (edges_ != initial_edges_ + d * n_) fail("edge counter drifted from |E_0| + d n");

  std::uint64_t degree_sum = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) degree_sum += degrees_[i];
  if (degree_sum != 2 * edges_) fail("sum of degrees != 2 |E|");

  const double z = index_.total();
  const double z_exact = recompute_partition_function();
  if (std::abs(z - z_exact) > 1e-9 * std::max(1.0, std::abs(z_exact))) {
    fail("incremental Z " + std::to_string(z) + " != recomputed " + std::to_string(z_exact));
  }

  const auto dd = static_cast<std::size_t>(cfg_.d);
  std::set<std::vector<Label>> seen;
  for (std::size_t h = 0; h < index_.slot_count(); ++h) {
    const auto hh = static_cast<DynamicWeightedIndex::Handle>(h);
    if (!index_.live(hh)) continue;
    std::vector<Label> face(arena_.begin() + static_cast<std::ptrdiff_t>(h * dd),
                            arena_.begin() + static_cast<std::ptrdiff_t>((h + 1) * dd));
    if (!std::is_sorted(face.begin(), face.end()) ||
        std::adjacent_find(face.begin(), face.end()) != face.end()) {
      fail("active face tuple not strictly increasing");
    }
    if (cfg_.fitness(type_of(face)) != index_.weight(hh)) fail("face fitness != f(type)");
    if (!seen.insert(face).second) fail("duplicate active face");
  }

  if (audit_) {
    if (edge_log_.size() != edges_) fail("edge log size != edge counter");
    std::set<std::pair<Label, Label>> uniq;
    std::vector<std::uint32_t> recount(degrees_.size(), 0);
    for (auto [a, b] : edge_log_) {
      uniq.insert({std::min(a, b), std::max(a, b)});
      ++recount[vertex_index(a)];
      ++recount[vertex_index(b)];
    }
    if (uniq.size() != edge_log_.size()) fail("edge inserted twice");
    if (recount != degrees_) fail("incremental degrees differ from edge recount");
    if (bad_insert_degrees_ != 0) fail("a new vertex joined with degree != d");
  }
  return rep;
}

GrowthSummary grow(ComplexState& state, std::uint64_t n_steps, const TraceOptions& trace,
                   Rng& rng) {
  GrowthSummary out;
  const auto burn_in = static_cast<std::uint64_t>(
      std::floor(std::clamp(trace.y_burn_in, 0.0, 1.0) * static_cast<double>(n_steps)));
  if (trace.z_stride > 0) out.z_trace.reserve(n_steps / trace.z_stride + 1);
  if (trace.trace_y) out.y_samples.reserve(n_steps - burn_in);

  for (std::uint64_t i = 0; i < n_steps; ++i) {
    if (trace.trace_y && i >= burn_in) {
      out.y_samples.push_back(state.advance_traced(rng));
    } else {
      state.advance(rng);
    }
    if (trace.z_stride > 0 && state.steps() % trace.z_stride == 0) {
      out.z_trace.push_back({state.steps(), state.partition_function()});
    }
  }
  const std::vector<std::vector<std::uint64_t>> counts{state.degree_counts()};
  out.profile = aggregate_growth_counts(counts, state.dimension(), state.steps());
  return out;
}

LambdaEstimate lambda_hat(std::span<const ZPoint> trace) {
  if (trace.size() < 100) {
    throw Error(ErrorCode::TraceTooShort,
                "need at least 100 trace points, have " + std::to_string(trace.size()));
  }
  const auto window = trace.subspan(trace.size() / 2);
  LambdaEstimate est;
  est.points = window.size();
  double sum = 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (const auto& p : window) {
    sum += p.z / static_cast<double>(p.step);
    mx += static_cast<double>(p.step);
    my += p.z;
  }
  const double m = static_cast<double>(window.size());
  est.lambda = sum / m;
  mx /= m;
  my /= m;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& p : window) {
    const double dx = static_cast<double>(p.step) - mx;
    sxx += dx * dx;
    sxy += dx * (p.z - my);
  }
  est.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  return est;
}

TypeDistribution empirical_type_sampler(std::span<const FaceType> samples) {
  if (samples.size() < 1000) {
    throw Error(ErrorCode::TooFewSamples,
                "need at least 1000 chosen-type samples, have " + std::to_string(samples.size()));
  }
  return TypeDistribution::empirical(samples);
}

}  // namespace simplex
