#include "simplex/star.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "simplex/hypotheses.hpp"
#include "simplex/runner.hpp"

namespace simplex {

namespace {

// Replicas per work unit. Fixed so the reduction tree never depends on the
// thread count.
constexpr std::uint64_t kChunk = 1024;

double star_fitness(const Fitness& f, double center, std::span<const double> cotype) {
  std::array<double, kMaxDimension> buf{};
  std::size_t j = 0;
  bool placed = false;
  for (double y : cotype) {
    if (!placed && center <= y) {
      buf[j++] = center;
      placed = true;
    }
    buf[j++] = y;
  }
  if (!placed) buf[j++] = center;
  return f.evaluate_sorted(std::span<const double>(buf.data(), j));
}

}  // namespace

StarState StarState::init(const ModelConfig& cfg, const TypeDistribution& seed_types,
                          std::optional<double> center, Rng& rng) {
  if (cfg.variant == Variant::B && cfg.d == 1) {
    throw Error(ErrorCode::DimensionUnsupported, "the star process needs d > 1 in Model B");
  }
  if (seed_types.empty()) throw Error(ErrorCode::InvalidArgument, "empty seed type law");
  StarState s;
  s.cfg_ = cfg;
  s.width_ = static_cast<std::size_t>(cfg.d - 1);
  s.center_ = center ? *center : cfg.weights.sample(rng);
  const FaceType& z = seed_types.sample(rng);
  if (z.size() != static_cast<std::size_t>(cfg.d)) {
    throw Error(ErrorCode::InvalidArgument, "seed type has length " + std::to_string(z.size()) +
                                                ", expected " + std::to_string(cfg.d));
  }
  if (cfg.d == 1) {
    s.insert({});
  } else {
    for (std::size_t i = 0; i < z.size(); ++i) s.insert(z.dropped(i).weights());
  }
  return s;
}

void StarState::insert(std::span<const double> cotype) {
  const auto h = index_.insert(star_fitness(cfg_.fitness, center_, cotype));
  const std::size_t need = (static_cast<std::size_t>(h) + 1) * width_;
  if (arena_.size() < need) arena_.resize(std::max(need, arena_.size() * 2));
  std::copy(cotype.begin(), cotype.end(), arena_.begin() + static_cast<std::ptrdiff_t>(h * width_));
}

void StarState::step(Rng& rng) {
  if (index_.empty()) throw Error(ErrorCode::EmptyStar, "star has no co-types left");
  const auto h = index_.sample(rng);
  std::array<double, kMaxDimension> y{};
  std::copy_n(arena_.begin() + static_cast<std::ptrdiff_t>(h * width_), width_, y.begin());
  const double w = cfg_.weights.sample(rng);
  if (cfg_.variant == Variant::B) index_.remove(h);
  std::array<double, kMaxDimension> child{};
  for (std::size_t i = 0; i < width_; ++i) {
    std::copy_n(y.begin(), width_, child.begin());
    child[i] = w;
    sort_small(std::span<double>(child.data(), width_));
    insert(std::span<const double>(child.data(), width_));
  }
  ++n_;
}

double StarState::recompute_fitness_total() const {
  double s = 0.0;
  for (const auto& y : cotypes()) s += star_fitness(cfg_.fitness, center_, y.weights());
  return s;
}

std::vector<FaceType> StarState::cotypes() const {
  std::vector<FaceType> out;
  out.reserve(index_.size());
  for (std::size_t h = 0; h < index_.slot_count(); ++h) {
    if (!index_.live(static_cast<DynamicWeightedIndex::Handle>(h))) continue;
    const auto first = arena_.begin() + static_cast<std::ptrdiff_t>(h * width_);
    out.emplace_back(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(width_)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t expected_star_size(const ModelConfig& cfg, std::uint64_t n) {
  const auto d = static_cast<std::uint64_t>(cfg.d);
  if (cfg.variant == Variant::A) return d + (d - 1) * n;
  if (d < 2) throw Error(ErrorCode::DimensionUnsupported, "Model B star needs d > 1");
  return d + (d - 2) * n;
}

DegreeProfile estimate_pk(const ModelConfig& cfg, double lambda, int k_max,
                          const TypeDistribution& seed_types, const StarRunOptions& options) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidArgument, "lambda must be positive and finite");
  }
  if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "k_max must be >= 0");
  if (options.replicas == 0) throw Error(ErrorCode::InvalidArgument, "replicas must be >= 1");
  const auto width = static_cast<std::size_t>(k_max) + 1;
  const std::uint64_t chunks = (options.replicas + kChunk - 1) / kChunk;
  std::vector<MeanAccumulator> parts(chunks, MeanAccumulator(width));

  parallel_for(chunks, options.threads, [&](std::size_t c) {
    std::vector<double> terms(width);
    const std::uint64_t lo = c * kChunk;
    const std::uint64_t hi = std::min(options.replicas, lo + kChunk);
    for (std::uint64_t r = lo; r < hi; ++r) {
      Rng rng = make_rng(options.seed, r);
      auto star = StarState::init(cfg, seed_types, std::nullopt, rng);
      double survive = 1.0;
      for (std::size_t k = 0; k < width; ++k) {
        const double f = star.fitness_total();
        terms[k] = survive * lambda / (f + lambda);
        survive *= f / (f + lambda);
        if (k + 1 < width) {
          if (star.size() == 0) {
            std::fill(terms.begin() + static_cast<std::ptrdiff_t>(k) + 1, terms.end(), 0.0);
            break;
          }
          star.step(rng);
        }
      }
      parts[c].add(terms);
    }
  });

  MeanAccumulator total(width);
  for (const auto& p : parts) total.merge(p);
  DegreeProfile prof;
  prof.provenance = Provenance::StarMc;
  prof.d = cfg.d;
  prof.n = static_cast<std::uint64_t>(k_max);
  prof.replicas = options.replicas;
  for (std::size_t k = 0; k < width; ++k) {
    ProfileEntry e;
    e.k = static_cast<int>(k);
    e.fraction = total.mean(k);
    e.count = e.fraction * static_cast<double>(options.replicas);
    e.std_error = total.std_error(k);
    prof.entries.push_back(e);
  }
  return prof;
}

LambdaStarEstimate estimate_lambda_star(const ModelConfig& cfg, double w, std::uint64_t steps,
                                        const TypeDistribution& seed_types,
                                        const StarRunOptions& options) {
  if (steps < 10'000) {
    throw Error(ErrorCode::InvalidArgument, "lambda* needs at least 10^4 steps");
  }
  if (options.replicas == 0) throw Error(ErrorCode::InvalidArgument, "replicas must be >= 1");
  if (!cfg.weights.in_support(w)) {
    throw Error(ErrorCode::InvalidArgument, "centre weight is outside Supp(mu)");
  }
  LambdaStarEstimate out;
  const auto rep = check_hypotheses(cfg);
  if (!rep.h1star.passed()) out.warnings.push_back("H1* does not hold; the limit may not exist");
  if (!rep.h2star.passed()) out.warnings.push_back("H2* does not hold; the limit may not exist");

  std::vector<double> per(options.replicas);
  parallel_for(options.replicas, options.threads, [&](std::size_t r) {
    Rng rng = make_rng(options.seed, r);
    auto star = StarState::init(cfg, seed_types, w, rng);
    const std::uint64_t from = steps / 2;
    double sum = 0.0;
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= steps; ++n) {
      if (star.size() == 0) break;
      star.step(rng);
      if (n > from) {
        sum += star.fitness_total() / static_cast<double>(n);
        ++count;
      }
    }
    per[r] = count ? sum / static_cast<double>(count) : 0.0;
  });
  MeanAccumulator acc(1);
  for (double v : per) acc.add(std::span<const double>(&v, 1));
  out.value = acc.mean(0);
  out.std_error = acc.std_error(0);
  return out;
}

}  // namespace simplex
