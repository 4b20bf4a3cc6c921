#include "simplex/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace simplex {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Growth:
      return "growth";
    case Provenance::StarMc:
      return "star-mc";
    case Provenance::ClosedForm:
      return "closed-form";
  }
  return "unknown";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "growth") return Provenance::Growth;
  if (s == "star-mc") return Provenance::StarMc;
  if (s == "closed-form") return Provenance::ClosedForm;
  throw Error(ErrorCode::InvalidArgument, "unknown provenance '" + s + "'");
}

namespace {

const ProfileEntry* find_entry(const DegreeProfile& p, int k) {
  auto it = std::lower_bound(p.entries.begin(), p.entries.end(), k,
                             [](const ProfileEntry& e, int key) { return e.k < key; });
  if (it == p.entries.end() || it->k != k) return nullptr;
  return &*it;
}

}  // namespace

double DegreeProfile::fraction(int k) const {
  const auto* e = find_entry(*this, k);
  return e ? e->fraction : 0.0;
}

double DegreeProfile::std_error(int k) const {
  const auto* e = find_entry(*this, k);
  return e ? e->std_error : 0.0;
}

double DegreeProfile::total_fraction() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.fraction;
  return s;
}

double DegreeProfile::mean_excess() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.k * e.fraction;
  return s;
}

void MeanAccumulator::add(std::span<const double> x) {
  if (x.size() != mean_.size()) {
    throw Error(ErrorCode::InvalidArgument, "accumulator dimension mismatch");
  }
  ++count_;
  const double n = static_cast<double>(count_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double delta = x[i] - mean_[i];
    mean_[i] += delta / n;
    m2_[i] += delta * (x[i] - mean_[i]);
  }
}

void MeanAccumulator::merge(const MeanAccumulator& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  if (other.mean_.size() != mean_.size()) {
    throw Error(ErrorCode::InvalidArgument, "accumulator dimension mismatch");
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  for (std::size_t i = 0; i < mean_.size(); ++i) {
    const double delta = other.mean_[i] - mean_[i];
    mean_[i] += delta * nb / n;
    m2_[i] += other.m2_[i] + delta * delta * na * nb / n;
  }
  count_ += other.count_;
}

double MeanAccumulator::variance(std::size_t i) const {
  if (count_ < 2) return 0.0;
  return std::max(0.0, m2_[i] / static_cast<double>(count_ - 1));
}

double MeanAccumulator::std_error(std::size_t i) const {
  if (count_ < 2) return 0.0;
  return std::sqrt(variance(i) / static_cast<double>(count_));
}

DegreeProfile aggregate_growth_counts(std::span<const std::vector<std::uint64_t>> per_replica,
                                      int d, std::uint64_t n) {
  DegreeProfile prof;
  prof.provenance = Provenance::Growth;
  prof.d = d;
  prof.n = n;
  prof.replicas = per_replica.size();
  std::size_t width = 0;
  for (const auto& c : per_replica) width = std::max(width, c.size());
  const double denom = n > 0 ? static_cast<double>(n) : 1.0;

  MeanAccumulator acc(width);
  std::vector<double> totals(width, 0.0);
  std::vector<double> row(width);
  for (const auto& counts : per_replica) {
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      row[k] = static_cast<double>(counts[k]) / denom;
      totals[k] += static_cast<double>(counts[k]);
    }
    acc.add(row);
  }
  for (std::size_t k = 0; k < width; ++k) {
    ProfileEntry e;
    e.k = static_cast<int>(k);
    e.count = totals[k];
    e.fraction = acc.mean(k);
    if (per_replica.size() >= 2) {
      e.std_error = acc.std_error(k);
    } else {
      const double p = std::clamp(e.fraction, 0.0, 1.0);
      e.std_error = std::sqrt(p * (1.0 - p) / denom);
    }
    prof.entries.push_back(e);
  }
  return prof;
}

namespace {

struct LineFit {
  double slope;
  double intercept;
  double r2;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

}  // namespace

TailFit fit_tail_slope(const DegreeProfile& profile, int k_lo, int k_hi) {
  std::vector<double> log_deg;
  std::vector<double> lin_k;
  std::vector<double> log_p;
  for (const auto& e : profile.entries) {
    if (e.k < k_lo || e.k > k_hi || !(e.fraction > 0.0)) continue;
    log_deg.push_back(std::log(static_cast<double>(profile.d + e.k)));
    lin_k.push_back(static_cast<double>(e.k));
    log_p.push_back(std::log(e.fraction));
  }
  if (log_p.size() < 5) {
    throw Error(ErrorCode::InsufficientSupport,
                "need at least 5 positive p_k in [" + std::to_string(k_lo) + ", " +
                    std::to_string(k_hi) + "], have " + std::to_string(log_p.size()));
  }
  const LineFit loglog = least_squares(log_deg, log_p);
  const LineFit loglin = least_squares(lin_k, log_p);
  TailFit out;
  out.slope = loglog.slope;
  out.intercept = loglog.intercept;
  out.r2_loglog = loglog.r2;
  out.r2_loglinear = loglin.r2;
  out.power_law_preferred = loglog.r2 > loglin.r2;
  out.points = log_p.size();
  return out;
}

ProfileComparison compare_profiles(const DegreeProfile& a, const DegreeProfile& b, int k_max,
                                   double tolerance) {
  ProfileComparison rep;
  rep.tolerance = tolerance;
  for (const auto& ea : a.entries) {
    if (ea.k > k_max) break;
    const auto* eb = find_entry(b, ea.k);
    if (!eb) continue;
    const double diff = ea.fraction - eb->fraction;
    const double se = std::hypot(ea.std_error, eb->std_error);
    double z = 0.0;
    if (se > 0.0) {
      z = diff / se;
    } else if (diff != 0.0) {
      z = std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    rep.z_scores.emplace_back(ea.k, z);
    if (rep.worst_k < 0 || std::abs(diff) > rep.max_abs_diff) {
      rep.max_abs_diff = std::abs(diff);
      rep.worst_k = ea.k;
    }
  }
  if (rep.z_scores.empty()) {
    throw Error(ErrorCode::NoOverlap, "profiles share no k <= " + std::to_string(k_max));
  }
  rep.passed = rep.max_abs_diff < tolerance;
  return rep;
}

}  // namespace simplex
