#pragma once

#include "shockdecay/ccw.hpp"
#include "shockdecay/core.hpp"
#include "shockdecay/transport.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace shockdecay::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PulseSpec {
    std::string shape = "half-sine";  // half-sine | ramp | file
    double amplitude = 0.1;           // peak for half-sine, initial slope for ramp
    double tau0 = 1.0;
    std::string file;
    bool given = false;  // set by the config file or a flag; compare-methods otherwise matches h, k
};

struct RunConfig {
    double gamma = 1.4;
    Geometry geom = Geometry::Planar;

    double h = 0.32;
    double k = 10.0;
    double x_end = 100.0;
    double rtol = 1e-10;
    double atol = 1e-14;
    Regime regime = Regime::Case1;
    std::size_t samples = 200;

    PulseSpec pulse;
    double fit_x_end = 1e4;

    double mach = 1.05;
    CcwVariant variant = CcwVariant::Generalized;

    // compare-methods
    double fit_lo = 1e3;
    double fit_hi = 1e5;
    double eps_coarse = 1e-2;
    double eps_fine = 1e-3;

    std::string out;
};

// Values given on the command line; each one overrides the file.
struct Overrides {
    std::optional<double> gamma, h, k, x_end, rtol, atol, amplitude, tau0, mach, fit_x_end;
    std::optional<std::string> geometry, regime, shape, pulse_file, variant, out;
    std::optional<std::size_t> samples;
};

// INI file with sections [gas] [geometry] [scenario] [pulse] [ccw] [compare] [output].
// Unknown sections or keys and malformed numbers raise ConfigError naming them.
void load_ini(const std::string& path, RunConfig& cfg);

void apply(const Overrides& o, RunConfig& cfg);

// Range checks shared by all commands.
void check(const RunConfig& cfg);

Scenario to_scenario(const RunConfig& cfg);

}  // namespace shockdecay::cli
