#include "shockdecay/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace shockdecay {

double log_log_slope(std::span<const double> x, std::span<const double> y, double x_lo, double x_hi)
{
    if (x.size() != y.size())
        throw std::invalid_argument("log_log_slope: x and y differ in length");
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < x_lo || x[i] > x_hi) continue;
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("log_log_slope: needs positive data");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        n += 1;
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double den = n * sxx - sx * sx;
    if (n < 2 || !(den > 0.0))
        throw std::invalid_argument("log_log_slope: fewer than two distinct points in range");
    return (n * sxy - sx * sy) / den;
}

}  // namespace shockdecay
