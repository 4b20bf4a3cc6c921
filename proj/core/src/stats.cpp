#include "simplex/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <numeric>

#include "simplex/error.hpp"

namespace simplex {

double chi_square_sf(double statistic, double dof) {
  if (!(dof > 0.0)) throw Error(ErrorCode::InvalidArgument, "dof must be positive");
  if (statistic <= 0.0) return 1.0;
  const boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareTest chi_square_test(std::span<const std::uint64_t> observed,
                              std::span<const double> expected_probs) {
  if (observed.size() != expected_probs.size() || observed.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "chi-square needs matching tables of >= 2 cells");
  }
  const double n = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  if (n == 0.0) throw Error(ErrorCode::InvalidArgument, "no observations");
  ChiSquareTest t;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = n * expected_probs[i];
    if (e <= 0.0) {
      if (observed[i] != 0) {
        t.p_value = 0.0;
        t.statistic = INFINITY;
        return t;
      }
      continue;
    }
    const double diff = static_cast<double>(observed[i]) - e;
    t.statistic += diff * diff / e;
    ++cells;
  }
  t.dof = static_cast<double>(cells) - 1.0;
  t.p_value = t.dof > 0.0 ? chi_square_sf(t.statistic, t.dof) : 1.0;
  return t;
}

}  // namespace simplex
