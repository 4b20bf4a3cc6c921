#include "simplex/urn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "simplex/hypotheses.hpp"

namespace simplex {

std::uint64_t type_space_size(std::size_t atoms, int d) {
  if (atoms == 0 || d < 0) return 0;
  // C(M + d - 1, d) built incrementally; each partial product is itself a
  // binomial coefficient, so the division is exact.
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(d); ++i) {
    const std::uint64_t top = atoms - 1 + i;
    if (c > std::numeric_limits<std::uint64_t>::max() / top) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    c = c * top / i;
  }
  return c;
}

namespace {

std::vector<std::vector<std::uint32_t>> enumerate_codes(std::size_t m, int d) {
  const std::uint64_t count = type_space_size(m, d);
  if (count > kMaxUrnTypes) {
    throw Error(ErrorCode::TypeSpaceTooLarge,
                "type space C(M+d-1, d) = " +
                    (count == std::numeric_limits<std::uint64_t>::max() ? std::string("overflow")
                                                                        : std::to_string(count)) +
                    " exceeds " + std::to_string(kMaxUrnTypes));
  }
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(count);
  std::vector<std::uint32_t> cur(static_cast<std::size_t>(d), 0);
  if (d == 0) return {cur};
  // Odometer over non-decreasing sequences.
  while (true) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] + 1 == m) --i;
    if (i < 0) break;
    const std::uint32_t v = cur[static_cast<std::size_t>(i)] + 1;
    for (auto j = static_cast<std::size_t>(i); j < cur.size(); ++j) cur[j] = v;
  }
  return out;
}

FaceType decode(std::span<const double> support, std::span<const std::uint32_t> code) {
  std::vector<double> w;
  w.reserve(code.size());
  for (auto c : code) w.push_back(support[c]);
  return FaceType(std::move(w));
}

}  // namespace

std::vector<FaceType> enumerate_types(std::span<const double> support, int d) {
  if (support.empty()) throw Error(ErrorCode::InvalidArgument, "empty support");
  if (d < 1) throw Error(ErrorCode::DimensionUnsupported, "d must be >= 1");
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw Error(ErrorCode::InvalidArgument, "support must be strictly ascending");
  }
  std::vector<FaceType> out;
  for (const auto& code : enumerate_codes(support.size(), d)) out.push_back(decode(support, code));
  return out;
}

std::size_t UrnModel::index_of(const FaceType& t) const {
  auto it = std::lower_bound(types_.begin(), types_.end(), t);
  if (it == types_.end() || !(*it == t)) {
    throw Error(ErrorCode::InvalidArgument, "type " + t.to_string() + " is not in the urn");
  }
  return static_cast<std::size_t>(it - types_.begin());
}

double UrnModel::entry(std::size_t row, std::size_t col) const {
  for (std::size_t e = row_start_[row]; e < row_start_[row + 1]; ++e) {
    if (entries_[e].col == col) return entries_[e].value;
  }
  return 0.0;
}

std::vector<double> UrnModel::dense() const {
  const std::size_t n = size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t e = row_start_[r]; e < row_start_[r + 1]; ++e) {
      out[r * n + entries_[e].col] = entries_[e].value;
    }
  }
  return out;
}

void UrnModel::multiply(std::span<const double> in, std::span<double> out) const {
  for (std::size_t r = 0; r < size(); ++r) {
    double s = 0.0;
    for (std::size_t e = row_start_[r]; e < row_start_[r + 1]; ++e) {
      s += entries_[e].value * in[entries_[e].col];
    }
    out[r] = s;
  }
}

double UrnModel::min_diagonal() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < size(); ++r) m = std::min(m, entry(r, r));
  return m;
}

UrnModel mean_matrix(const ModelConfig& cfg) {
  const auto rep = check_hypotheses(cfg);
  if (!rep.h1.passed()) {
    std::string why = "H1 does not hold";
    for (const auto& r : rep.h1.reasons) why += "; " + r;
    throw Error(ErrorCode::HypothesisViolated, why);
  }
  UrnModel urn;
  urn.d_ = cfg.d;
  urn.variant_ = cfg.variant;
  std::vector<double> probs;
  for (const auto& a : cfg.weights.atoms()) {
    urn.support_.push_back(a.value);
    probs.push_back(a.prob);
  }
  urn.codes_ = enumerate_codes(urn.support_.size(), cfg.d);
  for (const auto& c : urn.codes_) urn.types_.push_back(decode(urn.support_, c));
  for (const auto& t : urn.types_) urn.activity_.push_back(cfg.fitness(t));

  // Column x' of E[xi]: for every coordinate i and atom l the child
  // x'_{i<-w_l} gains mu(w_l). Accumulated per row as (row -> col -> value).
  const std::size_t n = urn.types_.size();
  std::vector<std::map<std::uint32_t, double>> rows(n);
  std::vector<std::uint32_t> child(static_cast<std::size_t>(cfg.d));
  for (std::size_t col = 0; col < n; ++col) {
    const auto& parent = urn.codes_[col];
    for (std::size_t i = 0; i < parent.size(); ++i) {
      for (std::size_t l = 0; l < probs.size(); ++l) {
        child = parent;
        child[i] = static_cast<std::uint32_t>(l);
        std::sort(child.begin(), child.end());
        const auto it = std::lower_bound(urn.codes_.begin(), urn.codes_.end(), child);
        rows[static_cast<std::size_t>(it - urn.codes_.begin())][static_cast<std::uint32_t>(col)] +=
            probs[l];
      }
    }
    if (cfg.variant == Variant::B) rows[col][static_cast<std::uint32_t>(col)] -= 1.0;
  }
  urn.row_start_.push_back(0);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [col, xi] : rows[r]) {
      urn.entries_.push_back({col, urn.activity_[col] * xi});
    }
    urn.row_start_.push_back(urn.entries_.size());
  }
  return urn;
}

PerronResult perron(const UrnModel& urn, double tol, std::uint64_t max_iter) {
  const std::size_t n = urn.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty urn");
  const auto a = urn.activity();
  PerronResult out;
  out.shift = std::max(0.0, -urn.min_diagonal());
  bool all_zero = true;
  for (std::size_t r = 0; r < n; ++r) {
    if (urn.entry(r, r) + out.shift != 0.0) all_zero = false;
  }
  if (all_zero) out.shift += 1.0;

  auto normalize = [&](std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * v[i];
    for (double& x : v) x /= s;
  };
  std::vector<double> v(n, 1.0);
  normalize(v);
  std::vector<double> av(n);
  for (std::uint64_t it = 1; it <= max_iter; ++it) {
    urn.multiply(v, av);
    // With a . v = 1 the Perron value is a . A v.
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += a[i] * av[i];
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(av[i] - lambda * v[i]));
    if (res <= tol * std::abs(lambda)) {
      out.lambda = lambda;
      out.vector = v;
      out.residual = res;
      out.iterations = it;
      for (double x : v) {
        if (!(x > 0.0)) throw Error(ErrorCode::NoConvergence, "Perron vector is not positive");
      }
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = av[i] + out.shift * v[i];
    normalize(v);
  }
  throw Error(ErrorCode::NoConvergence,
              "power iteration did not converge in " + std::to_string(max_iter) + " iterations");
}

TypeDistribution stationary_type_law(const UrnModel& urn, const PerronResult& p) {
  std::vector<double> w(urn.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = urn.activity()[i] * p.vector[i];
  return TypeDistribution({urn.types().begin(), urn.types().end()}, std::move(w));
}

UrnSolution solve_urn(const ModelConfig& cfg, double tol) {
  const auto urn = mean_matrix(cfg);
  const auto p = perron(urn, tol);
  UrnSolution s;
  s.types.assign(urn.types().begin(), urn.types().end());
  s.lambda = p.lambda;
  s.residual = p.residual;
  s.iterations = p.iterations;
  double z = 0.0;
  for (std::size_t i = 0; i < urn.size(); ++i) {
    s.pi.push_back(p.lambda * p.vector[i]);
    z += urn.activity()[i] * s.pi.back();
  }
  for (std::size_t i = 0; i < urn.size(); ++i) s.pi_hat.push_back(urn.activity()[i] * s.pi[i] / z);
  return s;
}

}  // namespace simplex
