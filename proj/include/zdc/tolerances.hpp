#pragma once

namespace zdc {

// Numeric tolerances shared by the measure and entropy code.
struct Tolerances {
  double probability_sum = 1e-12;
  double stationary_residual = 1e-10;
  double perron_residual = 1e-10;
};

inline constexpr Tolerances kTolerances{};

}  // namespace zdc
