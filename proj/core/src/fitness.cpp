#include "simplex/fitness.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace simplex {

double ScalarMap::operator()(double x) const {
  switch (kind) {
    case Kind::Identity:
      return x;
    case Kind::Shifted:
      return param + x;
    case Kind::Exp:
      return std::exp(param * x);
    case Kind::Power:
      return std::pow(x, param);
  }
  return x;
}

bool ScalarMap::increasing() const {
  switch (kind) {
    case Kind::Identity:
    case Kind::Shifted:
      return true;
    case Kind::Exp:
    case Kind::Power:
      return param > 0.0;
  }
  return false;
}

std::string ScalarMap::name() const {
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::Shifted:
      return "shifted";
    case Kind::Exp:
      return "exp";
    case Kind::Power:
      return "power";
  }
  return "unknown";
}

ScalarMap::Kind parse_scalar_map_kind(const std::string& name) {
  if (name == "identity") return ScalarMap::Kind::Identity;
  if (name == "shifted") return ScalarMap::Kind::Shifted;
  if (name == "exp") return ScalarMap::Kind::Exp;
  if (name == "power") return ScalarMap::Kind::Power;
  throw Error(ErrorCode::BadFitness, "unknown scalar map '" + name + "'");
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing:
      return "increasing";
    case Monotonicity::NotIncreasing:
      return "not-increasing";
    case Monotonicity::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string to_string(Fitness::Kind kind) {
  switch (kind) {
    case Fitness::Kind::Constant:
      return "constant";
    case Fitness::Kind::Product:
      return "product";
    case Fitness::Kind::EnergyExp:
      return "energy-exp";
    case Fitness::Kind::Table:
      return "table";
  }
  return "unknown";
}

Fitness Fitness::constant(double f0) {
  Fitness f;
  f.kind_ = Kind::Constant;
  f.f0_ = f0;
  return f;
}

Fitness Fitness::product(ScalarMap g) {
  Fitness f;
  f.kind_ = Kind::Product;
  f.g_ = g;
  return f;
}

Fitness Fitness::energy_exp(double beta) {
  Fitness f;
  f.kind_ = Kind::EnergyExp;
  f.beta_ = beta;
  return f;
}

Fitness Fitness::table(std::map<FaceType, double> entries) {
  Fitness f;
  f.kind_ = Kind::Table;
  f.table_ = std::move(entries);
  return f;
}

double Fitness::evaluate_sorted(std::span<const double> sorted) const {
  switch (kind_) {
    case Kind::Constant:
      return f0_;
    case Kind::Product: {
      double p = 1.0;
      for (double x : sorted) p *= g_(x);
      return p;
    }
    case Kind::EnergyExp: {
      double energy = 0.0;
      for (double x : sorted) energy += 1.0 - x;
      return std::exp(-beta_ * energy);
    }
    case Kind::Table: {
      auto it = table_.find(FaceType(std::vector<double>(sorted.begin(), sorted.end())));
      if (it == table_.end()) {
        throw Error(ErrorCode::BadFitness,
                    "table fitness has no entry for type " +
                        FaceType(std::vector<double>(sorted.begin(), sorted.end())).to_string());
      }
      return it->second;
    }
  }
  return 0.0;
}

double Fitness::operator()(std::span<const double> x) const {
  if (x.size() <= static_cast<std::size_t>(kMaxDimension)) {
    std::array<double, kMaxDimension> buf{};
    std::copy(x.begin(), x.end(), buf.begin());
    std::span<double> s(buf.data(), x.size());
    sort_small(s);
    return evaluate_sorted(s);
  }
  std::vector<double> v(x.begin(), x.end());
  std::sort(v.begin(), v.end());
  return evaluate_sorted(v);
}

Monotonicity Fitness::monotonicity() const {
  switch (kind_) {
    case Kind::Constant:
      return Monotonicity::Increasing;  // non-decreasing suffices
    case Kind::Product:
      return g_.increasing() ? Monotonicity::Increasing : Monotonicity::NotIncreasing;
    case Kind::EnergyExp:
      return beta_ >= 0.0 ? Monotonicity::Increasing : Monotonicity::NotIncreasing;
    case Kind::Table:
      return Monotonicity::Unknown;
  }
  return Monotonicity::Unknown;
}

}  // namespace simplex
