#pragma once

// Nondimensional jump algebra across a shock moving into quiescent polytropic gas.
//
// Scaling: velocities by the upstream sound speed a+, density by rho+, pressure by
// rho+ a+^2, lengths by a reference length x0 and times by x0/a+. Ahead of the
// shock u = 0, rho = 1, a = 1 and p = 1/gamma. All jumps are [f] = f(behind) - f(ahead).

#include <string_view>

namespace shockdecay {

class GasParams {
public:
    // Throws std::invalid_argument unless gamma > 1.
    explicit GasParams(double gamma = 1.4);

    double gamma() const noexcept { return gamma_; }

private:
    double gamma_;
};

enum class Geometry { Planar = 0, Cylindrical = 1, Spherical = 2 };

constexpr int symmetry_index(Geometry g) noexcept { return static_cast<int>(g); }

// Throws std::invalid_argument unless j is 0, 1 or 2.
Geometry geometry_from_index(int j);

// Accepts "planar", "cylindrical", "spherical".
Geometry parse_geometry(std::string_view name);
std::string_view geometry_name(Geometry g) noexcept;

struct JumpSet {
    double u_jump = 0.0;
    double p_jump = 0.0;
    double rho_jump = 0.0;
    double mach = 1.0;
};

struct MuNu {
    double mu;
    double nu;
};

JumpSet jumps_from_mach(double mach, const GasParams& gas);

// Exact inverse of [p] = 2(U^2 - 1)/(gamma + 1).
double mach_from_p_jump(double p_jump, const GasParams& gas);

// mu = 2 + (gamma-1)U^2, nu = 2 gamma U^2 + 1 - gamma.
MuNu mu_nu(double mach, const GasParams& gas);

// Ray-tube amplitude factor x^(-j/2).
double psi(double x, Geometry geom);

// J(x) = integral of psi from 1 to x.
double ray_integral(double x, Geometry geom);

// Inverse of ray_integral on [0, inf).
double inverse_ray_integral(double J, Geometry geom);

}  // namespace shockdecay
