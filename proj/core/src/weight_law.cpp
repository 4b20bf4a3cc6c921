#include "simplex/weight_law.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace simplex {

namespace {

constexpr double kProbabilityTolerance = 1e-12;

}  // namespace

std::string to_string(WeightLaw::Kind kind) {
  switch (kind) {
    case WeightLaw::Kind::FiniteSupport:
      return "finite";
    case WeightLaw::Kind::Uniform01:
      return "uniform01";
    case WeightLaw::Kind::TableCdf:
      return "table-cdf";
  }
  return "unknown";
}

WeightLaw WeightLaw::finite(std::vector<Atom> atoms) {
  WeightLaw law;
  law.kind_ = Kind::FiniteSupport;
  law.atoms_ = std::move(atoms);
  law.cumulative_.resize(law.atoms_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < law.atoms_.size(); ++i) {
    acc += law.atoms_[i].prob;
    law.cumulative_[i] = acc;
  }
  return law;
}

WeightLaw WeightLaw::uniform01() {
  return WeightLaw{};
}

WeightLaw WeightLaw::table_cdf(std::vector<CdfPoint> grid) {
  WeightLaw law;
  law.kind_ = Kind::TableCdf;
  law.grid_ = std::move(grid);
  return law;
}

std::vector<Issue> WeightLaw::issues() const {
  std::vector<Issue> out;
  auto bad = [&](std::string msg) {
    out.push_back({ErrorCode::BadDistribution, std::move(msg)});
  };
  switch (kind_) {
    case Kind::Uniform01:
      break;
    case Kind::FiniteSupport: {
      if (atoms_.empty()) {
        bad("finite support needs at least one atom");
        break;
      }
      double sum = 0.0;
      std::set<double> seen;
      for (const auto& a : atoms_) {
        if (!(a.prob > 0.0) || !std::isfinite(a.prob)) {
          bad("atom at " + std::to_string(a.value) + " has non-positive probability");
        }
        if (!(a.value >= 0.0 && a.value <= 1.0)) {
          bad("atom value " + std::to_string(a.value) + " outside [0,1]");
        }
        if (!seen.insert(a.value).second) {
          bad("duplicate atom value " + std::to_string(a.value));
        }
        sum += a.prob;
      }
      if (std::abs(sum - 1.0) > kProbabilityTolerance) {
        bad("atom probabilities sum to " + std::to_string(sum) + ", not 1");
      }
      break;
    }
    case Kind::TableCdf: {
      if (grid_.size() < 2) {
        bad("table-cdf needs at least two grid points");
        break;
      }
      for (std::size_t i = 0; i < grid_.size(); ++i) {
        const auto& p = grid_[i];
        if (!(p.value >= 0.0 && p.value <= 1.0)) {
          bad("grid value " + std::to_string(p.value) + " outside [0,1]");
        }
        if (!(p.cumulative >= 0.0 && p.cumulative <= 1.0)) {
          bad("grid cumulative " + std::to_string(p.cumulative) + " outside [0,1]");
        }
        if (i > 0 && !(grid_[i].value > grid_[i - 1].value &&
                       grid_[i].cumulative > grid_[i - 1].cumulative)) {
          bad("grid not strictly increasing at point " + std::to_string(i));
        }
      }
      if (grid_.back().cumulative != 1.0) {
        bad("last cumulative value must be 1");
      }
      break;
    }
  }
  return out;
}

void WeightLaw::normalize() {
  if (kind_ != Kind::FiniteSupport) return;
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  const double sum = std::accumulate(atoms_.begin(), atoms_.end(), 0.0,
                                     [](double s, const Atom& a) { return s + a.prob; });
  for (auto& a : atoms_) a.prob /= sum;
  *this = finite(std::move(atoms_));
}

double WeightLaw::quantile(double u) const {
  switch (kind_) {
    case Kind::Uniform01:
      return u;
    case Kind::FiniteSupport: {
      const double target = u * cumulative_.back();
      auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
      if (it == cumulative_.end()) --it;
      return atoms_[static_cast<std::size_t>(it - cumulative_.begin())].value;
    }
    case Kind::TableCdf: {
      if (u < grid_.front().cumulative) return grid_.front().value;
      auto it = std::upper_bound(grid_.begin(), grid_.end(), u,
                                 [](double v, const CdfPoint& p) { return v < p.cumulative; });
      if (it == grid_.end()) return grid_.back().value;
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double t = (u - lo.cumulative) / (hi.cumulative - lo.cumulative);
      return lo.value + t * (hi.value - lo.value);
    }
  }
  return 0.0;
}

double WeightLaw::sample(Rng& rng) const { return quantile(simplex::uniform01(rng)); }

double WeightLaw::expect(const std::function<double(double)>& g,
                         std::size_t quadrature_points) const {
  if (kind_ == Kind::FiniteSupport) {
    double acc = 0.0;
    for (const auto& a : atoms_) acc += a.prob * g(a.value);
    return acc;
  }
  // Midpoint rule in quantile space integrates both the continuous part and
  // any leading atom of a table CDF.
  const double h = 1.0 / static_cast<double>(quadrature_points);
  double acc = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < quadrature_points; ++i) {
    const double term = g(quantile((static_cast<double>(i) + 0.5) * h)) - comp;
    const double t = acc + term;
    comp = (t - acc) - term;
    acc = t;
  }
  return acc * h;
}

double WeightLaw::mean() const {
  switch (kind_) {
    case Kind::Uniform01:
      return 0.5;
    case Kind::FiniteSupport:
      return expect([](double x) { return x; });
    case Kind::TableCdf: {
      double m = grid_.front().cumulative * grid_.front().value;
      for (std::size_t i = 1; i < grid_.size(); ++i) {
        const double mass = grid_[i].cumulative - grid_[i - 1].cumulative;
        m += mass * 0.5 * (grid_[i].value + grid_[i - 1].value);
      }
      return m;
    }
  }
  return 0.0;
}

double WeightLaw::variance() const {
  switch (kind_) {
    case Kind::Uniform01:
      return 1.0 / 12.0;
    case Kind::FiniteSupport: {
      const double m = mean();
      return expect([m](double x) { return (x - m) * (x - m); });
    }
    case Kind::TableCdf: {
      // Uniform pieces: E[X^2] over [a,b] is (a^2 + ab + b^2)/3.
      const auto& f = grid_.front();
      double m2 = f.cumulative * f.value * f.value;
      for (std::size_t i = 1; i < grid_.size(); ++i) {
        const double a = grid_[i - 1].value;
        const double b = grid_[i].value;
        const double mass = grid_[i].cumulative - grid_[i - 1].cumulative;
        m2 += mass * (a * a + a * b + b * b) / 3.0;
      }
      const double m = mean();
      return m2 - m * m;
    }
  }
  return 0.0;
}

double WeightLaw::atom_mass(double x) const {
  switch (kind_) {
    case Kind::Uniform01:
      return 0.0;
    case Kind::FiniteSupport:
      for (const auto& a : atoms_) {
        if (a.value == x) return a.prob;
      }
      return 0.0;
    case Kind::TableCdf:
      return x == grid_.front().value ? grid_.front().cumulative : 0.0;
  }
  return 0.0;
}

double WeightLaw::support_min() const {
  switch (kind_) {
    case Kind::Uniform01:
      return 0.0;
    case Kind::FiniteSupport:
      return std::min_element(atoms_.begin(), atoms_.end(),
                              [](const Atom& a, const Atom& b) { return a.value < b.value; })
          ->value;
    case Kind::TableCdf:
      return grid_.front().value;
  }
  return 0.0;
}

double WeightLaw::support_max() const {
  switch (kind_) {
    case Kind::Uniform01:
      return 1.0;
    case Kind::FiniteSupport:
      return std::max_element(atoms_.begin(), atoms_.end(),
                              [](const Atom& a, const Atom& b) { return a.value < b.value; })
          ->value;
    case Kind::TableCdf:
      return grid_.back().value;
  }
  return 1.0;
}

bool WeightLaw::in_support(double x) const {
  if (kind_ == Kind::FiniteSupport) {
    return std::any_of(atoms_.begin(), atoms_.end(), [x](const Atom& a) { return a.value == x; });
  }
  return x >= support_min() && x <= support_max();
}

}  // namespace simplex
