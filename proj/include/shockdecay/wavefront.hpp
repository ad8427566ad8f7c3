#pragma once

// Characteristic-based descriptions of a weak wave launched from the boundary
// x = 1 by a velocity pulse v(tau):
//   * weakly nonlinear geometrical optics with shock fitting,
//   * the simple wave carried by the forward Riemann invariant,
//   * the relatively undistorted wave state relations.
// To first order in the amplitude the three coincide: u = v(tau) psi(x) along
// wavelets t = tau + (x - 1) - (gamma+1)/2 v(tau) J(x).

#include "shockdecay/core.hpp"
#include "shockdecay/pulse.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace shockdecay {

struct FittedSample {
    double x;
    double tau_minus;   // wavelet immediately behind the shock
    double u_jump;      // v(tau_minus) psi(x)
    double ux_jump;     // NaN before the asymptotic regime x >= 10 x_formation
    double shock_time;  // s(x)
};

struct FittedShock {
    std::vector<FittedSample> samples;
    double x_formation = 1.0;  // where tau_minus -> 0
    double tau0 = 0.0;
    double b = 0.0;
};

struct RuwState {
    double rho;
    double p;
    double a;
};

struct DecayPair {
    double u_jump;
    double ux_jump;
};

// t on the wavelet tau at position x.
double wavelet_time(double x, double tau, const BoundaryPulse& pulse, const GasParams& gas, Geometry geom);

// Position where the pulse head first breaks: (gamma+1)/2 J(x_f) = 1 / v'(0).
// Throws FittingError when v'(0) <= 0 (no shock at the head).
double formation_distance(const BoundaryPulse& pulse, const GasParams& gas, Geometry geom);

// Smallest positive root of (gamma+1)/4 v(tau)^2 J(x) = integral_0^tau v.
// Throws FittingError when there is none in (0, tau0].
double tau_minus(double x, const BoundaryPulse& pulse, const GasParams& gas, Geometry geom);

FittedShock fit_shock(const BoundaryPulse& pulse, const GasParams& gas, Geometry geom,
                      std::span<const double> x_grid);

// Large-x decay of the fitted shock for a pulse of net area b > 0.
DecayPair wngo_decay(double b, const GasParams& gas, Geometry geom, double x);

RuwState ruw_state(double u, const GasParams& gas);

// Nonnegative root u of u (1 + (gamma-1)u/2)^(2/(gamma-1)) = rhs.
double simple_wave_u(double rhs, const GasParams& gas);

// Arrival time on the exact simple-wave characteristic dx/dt = 1 + (gamma+1)u/2.
double simple_wave_time(double x, double tau, const BoundaryPulse& pulse, const GasParams& gas,
                        Geometry geom);

// max |simple_wave_u(v psi) - v psi| over the x grid and n_tau wavelets.
double field_deviation(const BoundaryPulse& pulse, const GasParams& gas, Geometry geom,
                       std::span<const double> x_grid, std::size_t n_tau = 257);

void write_csv(std::ostream& os, const FittedShock& shock);
FittedShock read_fitted_csv(std::istream& is);

}  // namespace shockdecay
