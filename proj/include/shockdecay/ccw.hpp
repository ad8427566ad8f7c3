#pragma once

// Shock transport along rays from the forward-characteristic rule and from the
// strength equation with the trailing gradient dropped:
//     U f(U)/(U^2 - 1) dU/dx + j/x = 0,   f = g (classic) or G (generalized).
// Both f tend to 4 as U -> 1, so the two coincide for weak shocks.

#include "shockdecay/core.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace shockdecay {

enum class CcwVariant { Classic, Generalized };

CcwVariant parse_ccw_variant(std::string_view name);
std::string_view ccw_variant_name(CcwVariant v) noexcept;

// (1 + 2 sqrt(mu/nu) + U^-2)(1 + (U^2 - 1)/sqrt(mu nu))
double g_classic(double mach, const GasParams& gas);
// (gamma+1)(2U^2/nu + (U^2 + 1)/mu)
double g_generalized(double mach, const GasParams& gas);

struct CcwSample {
    double x;
    double mach;
    double p_jump;
};

struct CcwOptions {
    double rtol = 1e-10;
    std::size_t log_samples = 200;
    std::vector<double> sample_points{};  // merged with the log grid
};

// Starts at x = 1 with U = U0. Integration ends at x_end or where U - 1 falls to
// 1e-10, whichever comes first; the last sample is that end point.
std::vector<CcwSample> integrate_ccw(double mach0, const GasParams& gas, Geometry geom, double x_end,
                                     CcwVariant variant, const CcwOptions& opt = {});

void write_csv(std::ostream& os, const std::vector<CcwSample>& samples);
std::vector<CcwSample> read_ccw_csv(std::istream& is);

}  // namespace shockdecay
