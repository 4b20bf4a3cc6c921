#include "simplex/hypotheses.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "simplex/urn.hpp"

namespace simplex {

namespace {

constexpr std::size_t kRatioQuadrature = 1'000'000;
constexpr std::size_t kStarQuadrature = 100'000;
constexpr int kStarGridPoints = 101;

// E f(c_{0<-W}) for the length-`len` constant vector c, optionally merged with
// a fixed extra coordinate (the star centre for H2*).
double corner_moment(const ModelConfig& cfg, std::size_t len, double corner,
                     std::optional<double> extra, std::size_t points) {
  std::array<double, kMaxDimension + 1> x{};
  std::fill_n(x.begin(), len, corner);
  const std::size_t n = extra ? len + 1 : len;
  if (extra) x[len] = *extra;
  return cfg.weights.expect(
      [&](double w) {
        x[0] = w;
        return cfg.fitness(std::span<const double>(x.data(), n));
      },
      points);
}

std::vector<double> support_probe(const WeightLaw& mu) {
  std::vector<double> xs;
  if (mu.finitely_supported()) {
    for (const auto& a : mu.atoms()) xs.push_back(a.value);
    return xs;
  }
  const double lo = mu.support_min();
  const double hi = mu.support_max();
  for (int i = 0; i < kStarGridPoints; ++i) {
    xs.push_back(lo + (hi - lo) * i / (kStarGridPoints - 1));
  }
  return xs;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

double ngf_beta_threshold(int d) {
  if (d < 2) {
    throw Error(ErrorCode::DimensionUnsupported, "beta threshold needs d >= 2");
  }
  return std::log1p(1.0 / d) / (d - 1);
}

bool active_faces_unbounded(const ModelConfig& cfg) {
  return cfg.variant == Variant::A ? cfg.d >= 1 : cfg.d > 1;
}

bool codim_two_faces_unbounded(const ModelConfig& cfg) {
  return cfg.variant == Variant::A ? cfg.d > 1 : cfg.d > 2;
}

FitnessRange fitness_range(const ModelConfig& cfg) {
  const WeightLaw& mu = cfg.weights;
  if (cfg.fitness.kind() == Fitness::Kind::Table) {
    std::vector<double> support;
    for (const auto& a : mu.atoms()) support.push_back(a.value);
    std::sort(support.begin(), support.end());
    FitnessRange r{INFINITY, -INFINITY};
    for (const auto& t : enumerate_types(support, cfg.d)) {
      const double v = cfg.fitness(t);
      r.min = std::min(r.min, v);
      r.max = std::max(r.max, v);
    }
    return r;
  }
  const std::vector<double> lo(static_cast<std::size_t>(cfg.d), mu.support_min());
  const std::vector<double> hi(static_cast<std::size_t>(cfg.d), mu.support_max());
  const double a = cfg.fitness.evaluate_sorted(lo);
  const double b = cfg.fitness.evaluate_sorted(hi);
  return {std::min(a, b), std::max(a, b)};
}

HypothesisReport check_hypotheses(const ModelConfig& cfg) {
  HypothesisReport rep;

  // H1: finite support, f > 0, active faces unbounded.
  {
    auto& h = rep.h1;
    h.verdict = Verdict::Pass;
    if (!cfg.weights.finitely_supported()) {
      h.verdict = Verdict::Fail;
      h.reasons.push_back("mu is not finitely supported");
    }
    if (!active_faces_unbounded(cfg)) {
      h.verdict = Verdict::Fail;
      h.reasons.push_back("number of active (d-1)-faces stays bounded");
    }
    if (cfg.weights.finitely_supported() && fitness_range(cfg).min <= 0.0) {
      h.verdict = Verdict::Fail;
      h.reasons.push_back("fitness is not positive on Supp(mu)");
    }
  }

  // H2: Model A, mu({1}) = 0, f continuous, increasing, positive, and the
  // moment condition.
  {
    auto& h = rep.h2;
    const auto len = static_cast<std::size_t>(cfg.d);
    h.expected_at_one = corner_moment(cfg, len, 1.0, std::nullopt, kRatioQuadrature);
    h.expected_at_zero = corner_moment(cfg, len, 0.0, std::nullopt, kRatioQuadrature);
    h.ratio = h.expected_at_one / h.expected_at_zero;
    h.threshold = 1.0 + 1.0 / cfg.d;
    h.comparison = h.ratio < h.threshold ? "<" : ">=";
    h.monotone = cfg.fitness.monotonicity();

    h.verdict = Verdict::Pass;
    auto fail = [&](std::string why) {
      h.verdict = Verdict::Fail;
      h.reasons.push_back(std::move(why));
    };
    if (cfg.variant != Variant::A) fail("H2 requires Model A");
    if (cfg.weights.atom_mass(1.0) > 0.0) fail("mu has an atom at 1");
    if (!cfg.fitness.continuous()) fail("fitness is not continuous");
    if (!(h.expected_at_zero > 0.0)) fail("E f(0_{0<-W}) is not positive");
    if (h.comparison != "<") {
      fail("moment ratio " + std::to_string(h.ratio) + " >= 1 + 1/d");
    }
    if (h.monotone == Monotonicity::NotIncreasing) {
      fail("fitness is not increasing in each argument");
    } else if (h.monotone == Monotonicity::Unknown && h.verdict == Verdict::Pass) {
      h.verdict = Verdict::Unknown;
      h.reasons.push_back("monotonicity of table fitness is not certified");
    }
  }

  const bool codim2 = codim_two_faces_unbounded(cfg);
  const std::string codim2_reason =
      cfg.variant == Variant::A ? "|K^(d-2)| bounded: needs d > 1 in Model A"
                                : "|K^(d-2)| bounded: needs d > 2 in Model B";

  rep.h1star.verdict = rep.h1.verdict == Verdict::Pass && codim2 ? Verdict::Pass : Verdict::Fail;
  if (rep.h1.verdict != Verdict::Pass) rep.h1star.reasons.push_back("H1 fails");
  if (!codim2) rep.h1star.reasons.push_back(codim2_reason);

  {
    auto& h = rep.h2star;
    h.verdict = rep.h2.verdict;
    if (rep.h2.verdict != Verdict::Pass) h.reasons.push_back("H2 not established");
    if (!codim2) {
      h.verdict = Verdict::Fail;
      h.reasons.push_back(codim2_reason);
    } else {
      const auto len = static_cast<std::size_t>(cfg.d - 1);
      const double threshold = 1.0 + 1.0 / (cfg.d - 1);
      for (double x : support_probe(cfg.weights)) {
        const double one = corner_moment(cfg, len, 1.0, x, kStarQuadrature);
        const double zero = corner_moment(cfg, len, 0.0, x, kStarQuadrature);
        if (!(one < threshold * zero)) {
          h.verdict = Verdict::Fail;
          h.reasons.push_back("star moment condition fails at centre weight " +
                              std::to_string(x));
          break;
        }
      }
    }
  }

  if (cfg.d >= 2) rep.ngf_beta_threshold = ngf_beta_threshold(cfg.d);
  return rep;
}

}  // namespace simplex
