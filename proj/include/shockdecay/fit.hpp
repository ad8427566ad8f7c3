#pragma once

#include <span>

namespace shockdecay {

// Least-squares slope of log y against log x over the points with x in [x_lo, x_hi].
// Throws std::invalid_argument with fewer than two usable points or y <= 0.
double log_log_slope(std::span<const double> x, std::span<const double> y, double x_lo, double x_hi);

}  // namespace shockdecay
