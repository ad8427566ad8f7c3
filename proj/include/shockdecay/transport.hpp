#pragma once

// Singular-surface transport of the shock strength [p] and of the first-order
// discontinuity [p_x] immediately behind the shock.
//
// At arbitrary strength the shock obeys
//     d[p]/dx = k11 [p_x] + k12,
//     d[p_x]/dx + k21 [p_xx] + k22 [p_x]^2 + k23 [p_x] + k24 = 0,
// with coefficients depending on the Mach number U, gamma and the curvature
// Omega = j/x. For weak shocks the pair reduces to a system that is closed by
// setting [p_xx] = 0 and integrated here.

#include "shockdecay/core.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace shockdecay {

struct FirstOrderCoefficients {
    double k11;
    double k12;
};

// Maps ([p_x], 1) to ([u_x], [rho_x]).
struct TMatrix {
    double t11, t12;
    double t21, t22;
};

struct TMatrixDerivatives {
    double dt11_du;  // T11 depends on U only
    double dt12_du;  // at fixed x
    double dt12_dx;  // at fixed U
};

struct SecondOrderCoefficients {
    double k21;
    double k22;
    double k23;
    double k24;
    double eta;
};

FirstOrderCoefficients first_order_coefficients(double mach, const GasParams& gas, double omega);

// Throws DomainError for U < 1 or x < 1. At U = 1 the entries are the exact limits.
TMatrix t_matrix(double mach, const GasParams& gas, Geometry geom, double x);

TMatrixDerivatives t_matrix_derivatives(double mach, const GasParams& gas, Geometry geom, double x);

SecondOrderCoefficients second_order_coefficients(double mach, const GasParams& gas, Geometry geom,
                                                  double x);

// Which asymptote accompanies a history. The dynamics are the same.
enum class Regime { Case1, Case2 };

struct Scenario {
    GasParams gas{};
    Geometry geom = Geometry::Planar;
    double h = 0.0;  // [p] at x = 1
    double k = 0.0;  // [p_x] at x = 1
    double x_end = 100.0;
    double rtol = 1e-10;
    double atol = 1e-14;
    Regime regime = Regime::Case1;
    // Extra abscissae to sample; merged with the default grid.
    std::vector<double> sample_points{};
    std::size_t log_samples = 200;
};

struct HistorySample {
    double x;
    double p_jump;
    double px_jump;
    double p_asym;   // NaN where the asymptote is undefined (k <= 0)
    double px_asym;
    double p_err;    // |p_jump - p_asym|
    double px_err;
};

struct ShockHistory {
    std::vector<HistorySample> samples;
    std::optional<double> breakdown;  // x* where [p_x] blew up
};

struct JumpPair {
    double p_jump;
    double px_jump;
};

// Abscissae of the reference error table.
const std::vector<double>& table1_abscissae();

// Reference absolute errors at those abscissae, gamma = 1.4, planar, h = 0.32:
// set A has k = 10, set B has k = 0.28.
struct ReferenceErrors {
    double x;
    double p_err_a, px_err_a;
    double p_err_b, px_err_b;
};
const std::vector<ReferenceErrors>& table1_reference();

// Validates a scenario; throws std::invalid_argument naming the offending field.
// Returns true when |h| exceeds the weak-shock range (a warning, not an error).
bool validate(const Scenario& scen);

ShockHistory integrate_truncated(const Scenario& scen);

// Exact solution of the truncated system. Throws BreakdownError when I(x) <= 0.
JumpPair closed_form(double x, double h, double k, const GasParams& gas, Geometry geom);

// Large-x decay laws for k > 0. Throws DomainError for k <= 0, and for x <= 1 in
// spherical geometry where log x vanishes.
JumpPair asymptotic_law(double x, double h, double k, const GasParams& gas, Geometry geom,
                        Regime regime);

// Position x* > 1 with 1 + (gamma+1) k J(x*)/2 = 0; std::nullopt when k >= 0.
std::optional<double> breakdown_distance(double h, double k, const GasParams& gas, Geometry geom);

void write_csv(std::ostream& os, const ShockHistory& hist);
ShockHistory read_history_csv(std::istream& is);

}  // namespace shockdecay
