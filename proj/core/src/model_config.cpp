#include "simplex/model_config.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "simplex/urn.hpp"

namespace simplex {

std::string to_string(Variant v) { return v == Variant::A ? "A" : "B"; }

Variant parse_variant(const std::string& s) {
  if (s == "A" || s == "a") return Variant::A;
  if (s == "B" || s == "b") return Variant::B;
  throw Error(ErrorCode::InvalidArgument, "model variant must be A or B, got '" + s + "'");
}

namespace {

void fitness_issues(const ModelConfig& cfg, std::vector<Issue>& out) {
  const Fitness& f = cfg.fitness;
  const WeightLaw& mu = cfg.weights;
  switch (f.kind()) {
    case Fitness::Kind::Constant:
      if (!(f.f0() > 0.0) || !std::isfinite(f.f0())) {
        out.push_back({ErrorCode::NonPositiveFitness,
                       "constant fitness f0 must be positive and finite"});
      }
      break;
    case Fitness::Kind::EnergyExp:
      if (!(f.beta() >= 0.0) || !std::isfinite(f.beta())) {
        out.push_back({ErrorCode::BadFitness, "energy-exp beta must be finite and >= 0"});
      }
      break;
    case Fitness::Kind::Product: {
      const ScalarMap& g = f.scalar_map();
      if (!std::isfinite(g.param)) {
        out.push_back({ErrorCode::BadFitness, "scalar map parameter is not finite"});
        break;
      }
      if (!mu.issues().empty()) break;
      // g is monotone for every kind, so positivity on the support is decided
      // by the atoms or by the two endpoints.
      std::vector<double> probes;
      if (mu.finitely_supported()) {
        for (const auto& a : mu.atoms()) probes.push_back(a.value);
      } else {
        probes = {mu.support_min(), mu.support_max()};
      }
      for (double x : probes) {
        const double v = g(x);
        if (!(v > 0.0) || !std::isfinite(v)) {
          out.push_back({ErrorCode::NonPositiveFitness,
                         "g = " + g.name() + " gives " + std::to_string(v) + " at weight " +
                             std::to_string(x)});
          break;
        }
      }
      break;
    }
    case Fitness::Kind::Table: {
      for (const auto& [type, value] : f.entries()) {
        if (type.size() != static_cast<std::size_t>(cfg.d)) {
          out.push_back({ErrorCode::BadFitness,
                         "table entry " + type.to_string() + " does not have length d"});
        }
        if (!(value > 0.0) || !std::isfinite(value)) {
          out.push_back({ErrorCode::NonPositiveFitness,
                         "table entry " + type.to_string() + " is not positive"});
        }
      }
      if (!mu.finitely_supported()) {
        out.push_back({ErrorCode::BadFitness, "table fitness requires finitely supported weights"});
        break;
      }
      if (!mu.issues().empty() || cfg.d < 1 || cfg.d > kMaxDimension) break;
      std::vector<double> support;
      for (const auto& a : mu.atoms()) support.push_back(a.value);
      std::sort(support.begin(), support.end());
      try {
        for (const auto& t : enumerate_types(support, cfg.d)) {
          if (!f.entries().contains(t)) {
            out.push_back({ErrorCode::BadFitness, "table fitness misses type " + t.to_string()});
          }
        }
      } catch (const Error& e) {
        out.push_back({ErrorCode::BadFitness, e.what()});
      }
      break;
    }
  }
}

void initial_issues(const ModelConfig& cfg, std::vector<Issue>& out) {
  const auto& init = cfg.initial;
  auto bad = [&](std::string msg) {
    out.push_back({ErrorCode::BadInitialComplex, std::move(msg)});
  };
  if (init.kind == InitialComplexSpec::Kind::Simplex) {
    if (!init.faces.empty()) bad("simplex initial complex takes no explicit faces");
  } else {
    if (init.faces.empty()) bad("explicit initial complex has no faces");
    bool has_active = false;
    for (const auto& face : init.faces) {
      std::set<Label> uniq(face.begin(), face.end());
      if (face.empty() || face.size() > static_cast<std::size_t>(cfg.d) + 1) {
        bad("initial face size must be in [1, d+1]");
      }
      if (uniq.size() != face.size()) bad("initial face repeats a vertex");
      if (std::any_of(face.begin(), face.end(), [](Label l) { return l > 0; })) {
        bad("initial vertex labels must be <= 0");
      }
      if (face.size() >= static_cast<std::size_t>(cfg.d)) has_active = true;
    }
    if (!has_active) bad("initial complex has no (d-1)-face");
  }
  if (!init.weights.empty()) {
    const auto labels = initial_vertex_labels(cfg);
    std::set<Label> given;
    for (const auto& [label, w] : init.weights) {
      if (!given.insert(label).second) bad("duplicate weight for vertex " + std::to_string(label));
      if (!std::binary_search(labels.begin(), labels.end(), label)) {
        bad("weight given for unknown vertex " + std::to_string(label));
      }
      if (cfg.weights.issues().empty() && !cfg.weights.in_support(w)) {
        bad("weight " + std::to_string(w) + " of vertex " + std::to_string(label) +
            " is outside Supp(mu)");
      }
    }
    for (Label l : labels) {
      if (!given.contains(l)) bad("no weight for initial vertex " + std::to_string(l));
    }
  }
}

}  // namespace

std::vector<Label> initial_vertex_labels(const ModelConfig& cfg) {
  std::set<Label> labels;
  for (const auto& face : initial_maximal_faces(cfg)) labels.insert(face.begin(), face.end());
  return {labels.begin(), labels.end()};
}

std::vector<std::vector<Label>> initial_maximal_faces(const ModelConfig& cfg) {
  if (cfg.initial.kind == InitialComplexSpec::Kind::Faces) {
    auto faces = cfg.initial.faces;
    for (auto& f : faces) std::sort(f.begin(), f.end());
    return faces;
  }
  std::vector<Label> simplex;
  for (Label l = -cfg.d; l <= 0; ++l) simplex.push_back(l);
  return {simplex};
}

std::vector<Issue> config_issues(const ModelConfig& cfg) {
  std::vector<Issue> out;
  if (cfg.d < 1) {
    out.push_back({ErrorCode::DimensionUnsupported, "dimension d must be >= 1"});
  } else if (cfg.d > kMaxDimension) {
    out.push_back({ErrorCode::DimensionUnsupported,
                   "dimension d must be <= " + std::to_string(kMaxDimension)});
  }
  if (cfg.variant == Variant::B && cfg.d == 1) {
    out.push_back({ErrorCode::DimensionUnsupported, "Model B is trivial for d = 1 (a path)"});
  }
  auto law = cfg.weights.issues();
  out.insert(out.end(), law.begin(), law.end());
  fitness_issues(cfg, out);
  if (cfg.d >= 1 && cfg.d <= kMaxDimension) initial_issues(cfg, out);
  return out;
}

ModelConfig validate_config(ModelConfig cfg) {
  auto issues = config_issues(cfg);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  cfg.weights.normalize();
  if (cfg.initial.kind == InitialComplexSpec::Kind::Faces) {
    for (auto& f : cfg.initial.faces) std::sort(f.begin(), f.end());
  }
  std::sort(cfg.initial.weights.begin(), cfg.initial.weights.end());
  return cfg;
}

}  // namespace simplex
