#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dorg {

// Standard normal CDF, evaluated through the complementary error function so
// the deep left tail keeps full precision instead of cancelling to 0.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

// P(-x <= Z <= x) for x >= 0, i.e. the symmetric central interval
// normal_cdf(x) - normal_cdf(-x). Written as erf(x/sqrt(2)) to avoid the
// subtraction entirely.
inline double normal_central_interval(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("normal_central_interval requires x >= 0");
  }
  return std::erf(x / std::numbers::sqrt2);
}

// 1 - normal_central_interval(x), kept as erfc so values near machine epsilon
// survive for wide intervals.
inline double normal_central_complement(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("normal_central_complement requires x >= 0");
  }
  return std::erfc(x / std::numbers::sqrt2);
}

}  // namespace dorg
