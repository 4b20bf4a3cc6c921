#pragma once

#include <cstdint>
#include <span>

namespace simplex {

/// Upper tail P(X >= statistic) of a chi-square law with `dof` degrees of freedom.
double chi_square_sf(double statistic, double dof);

struct ChiSquareTest {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 0.0;
};

/// Pearson goodness of fit of `observed` against `expected_probs` (same
/// length, summing to 1). Cells with zero expected probability must be empty.
ChiSquareTest chi_square_test(std::span<const std::uint64_t> observed,
                              std::span<const double> expected_probs);

}  // namespace simplex
