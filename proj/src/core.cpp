#include "shockdecay/core.hpp"

#include "shockdecay/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shockdecay {

GasParams::GasParams(double gamma) : gamma_(gamma)
{
    if (!(gamma > 1.0) || !std::isfinite(gamma))
        throw std::invalid_argument("gamma must be a finite value > 1, got " + std::to_string(gamma));
}

Geometry geometry_from_index(int j)
{
    switch (j) {
    case 0: return Geometry::Planar;
    case 1: return Geometry::Cylindrical;
    case 2: return Geometry::Spherical;
    default: throw std::invalid_argument("symmetry index must be 0, 1 or 2, got " + std::to_string(j));
    }
}

Geometry parse_geometry(std::string_view name)
{
    if (name == "planar" || name == "0") return Geometry::Planar;
    if (name == "cylindrical" || name == "1") return Geometry::Cylindrical;
    if (name == "spherical" || name == "2") return Geometry::Spherical;
    throw std::invalid_argument("unknown geometry '" + std::string(name) +
                                "' (expected planar, cylindrical or spherical)");
}

std::string_view geometry_name(Geometry g) noexcept
{
    switch (g) {
    case Geometry::Planar: return "planar";
    case Geometry::Cylindrical: return "cylindrical";
    case Geometry::Spherical: return "spherical";
    }
    return "unknown";
}

JumpSet jumps_from_mach(double mach, const GasParams& gas)
{
    if (!(mach >= 1.0))
        throw DomainError("expansive shock (U < 1) is inadmissible");
    const double g = gas.gamma();
    JumpSet s;
    s.mach = mach;
    s.u_jump = 2.0 * (mach * mach - 1.0) / ((g + 1.0) * mach);
    s.p_jump = mach * s.u_jump;
    // [u] = U[rho]/(1 + [rho])  =>  [rho] = [u]/(U - [u]); U - [u] = mu/((g+1)U) > 0
    s.rho_jump = s.u_jump / (mach - s.u_jump);
    return s;
}

double mach_from_p_jump(double p_jump, const GasParams& gas)
{
    if (!(p_jump >= 0.0))
        throw DomainError("pressure jump must be non-negative");
    return std::sqrt(1.0 + 0.5 * (gas.gamma() + 1.0) * p_jump);
}

MuNu mu_nu(double mach, const GasParams& gas)
{
    const double g = gas.gamma();
    const double u2 = mach * mach;
    return {2.0 + (g - 1.0) * u2, 2.0 * g * u2 + 1.0 - g};
}

double psi(double x, Geometry geom)
{
    if (!(x >= 1.0))
        throw DomainError("position must satisfy x >= 1");
    switch (geom) {
    case Geometry::Planar: return 1.0;
    case Geometry::Cylindrical: return 1.0 / std::sqrt(x);
    case Geometry::Spherical: return 1.0 / x;
    }
    return 1.0;
}

double ray_integral(double x, Geometry geom)
{
    if (!(x >= 1.0))
        throw DomainError("position must satisfy x >= 1");
    switch (geom) {
    case Geometry::Planar: return x - 1.0;
    case Geometry::Cylindrical: return 2.0 * (std::sqrt(x) - 1.0);
    case Geometry::Spherical: return std::log(x);
    }
    return 0.0;
}

double inverse_ray_integral(double J, Geometry geom)
{
    if (!(J >= 0.0))
        throw DomainError("ray integral must be non-negative");
    switch (geom) {
    case Geometry::Planar: return 1.0 + J;
    case Geometry::Cylindrical: {
        const double r = 1.0 + 0.5 * J;
        return r * r;
    }
    case Geometry::Spherical: return std::exp(J);
    }
    return 1.0;
}

}  // namespace shockdecay
