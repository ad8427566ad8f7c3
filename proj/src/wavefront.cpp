#include "shockdecay/wavefront.hpp"

#include "shockdecay/csv.hpp"
#include "shockdecay/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace shockdecay {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kScanNodes = 4096;

// F(tau) = (gamma+1)/4 v^2 J - integral_0^tau v; positive just behind the head once
// the shock has formed, and equal to -b at tau0.
struct OvertakeResidual {
    const BoundaryPulse& pulse;
    double c4J;

    double operator()(double tau) const
    {
        const double v = pulse(tau);
        return c4J * v * v - pulse.integral(tau);
    }
};

double residual_scale(const BoundaryPulse& pulse)
{
    return std::max({1.0, pulse.b(), pulse.max_value() * pulse.tau0()});
}

// Bisection on [lo, hi] with F(lo) > 0 >= F(hi).
double bisect(const OvertakeResidual& F, double lo, double hi, double x, double scale)
{
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f = F(mid);
        if (f > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double root = F(hi) == 0.0 ? hi : 0.5 * (lo + hi);
    if (std::abs(F(root)) > 1e-13 * scale)
        throw FittingError("overtaking wavelet did not converge at x = " + std::to_string(x), x);
    return root;
}

double k_factor(double x, Geometry geom)
{
    switch (geom) {
    case Geometry::Planar: return 1.0 / x;
    case Geometry::Cylindrical: return 0.5 / x;
    case Geometry::Spherical: return 1.0 / (x * std::log(x));
    }
    return nan;
}

double k_factor_derivative(double x, Geometry geom)
{
    switch (geom) {
    case Geometry::Planar: return -1.0 / (x * x);
    case Geometry::Cylindrical: return -0.5 / (x * x);
    case Geometry::Spherical: {
        const double l = std::log(x);
        return -(l + 1.0) / (x * x * l * l);
    }
    }
    return nan;
}

}  // namespace

double wavelet_time(double x, double tau, const BoundaryPulse& pulse, const GasParams& gas, Geometry geom)
{
    return tau + (x - 1.0) - 0.5 * (gas.gamma() + 1.0) * pulse(tau) * ray_integral(x, geom);
}

double formation_distance(const BoundaryPulse& pulse, const GasParams& gas, Geometry geom)
{
    if (!(pulse.vdot0() > 0.0))
        throw FittingError("pulse head is not compressive (v'(0) <= 0): no shock forms", 1.0);
    return inverse_ray_integral(2.0 / ((gas.gamma() + 1.0) * pulse.vdot0()), geom);
}

double tau_minus(double x, const BoundaryPulse& pulse, const GasParams& gas, Geometry geom)
{
    const OvertakeResidual F{pulse, 0.25 * (gas.gamma() + 1.0) * ray_integral(x, geom)};
    const double scale = residual_scale(pulse);
    const double dt = pulse.tau0() / kScanNodes;

    // Find a point just behind the head where F > 0.
    double lo = dt;
    double flo = F(lo);
    if (!(flo > 0.0)) {
        double t = dt;
        bool found = false;
        for (int m = 0; m < 60 && !found; ++m) {
            t *= 0.5;
            if (F(t) > 0.0) found = true;
        }
        if (!found)
            throw FittingError("no overtaking wavelet at x = " + std::to_string(x) +
                                   " (shock not yet formed or pulse too weak)",
                               x);
        return bisect(F, t, dt, x, scale);
    }
    for (std::size_t i = 2; i <= kScanNodes; ++i) {
        const double hi = i == kScanNodes ? pulse.tau0() : dt * i;
        if (!(F(hi) > 0.0)) return bisect(F, lo, hi, x, scale);
        lo = hi;
    }
    throw FittingError("no overtaking wavelet in (0, tau0] at x = " + std::to_string(x), x);
}

FittedShock fit_shock(const BoundaryPulse& pulse, const GasParams& gas, Geometry geom,
                      std::span<const double> x_grid)
{
    const double c = gas.gamma() + 1.0;
    FittedShock out;
    out.tau0 = pulse.tau0();
    out.b = pulse.b();
    out.x_formation = formation_distance(pulse, gas, geom);
    if (x_grid.empty()) return out;

    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > 1.0) || (i > 0 && !(x_grid[i] > x_grid[i - 1])))
            throw std::invalid_argument("x grid must be increasing and start above x = 1");
    }
    if (x_grid.front() <= out.x_formation)
        throw FittingError("no overtaking wavelet at x = " + std::to_string(x_grid.front()) +
                               ": shock forms at x = " + std::to_string(out.x_formation),
                           x_grid.front());

    std::vector<double> taus(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        taus[i] = tau_minus(x_grid[i], pulse, gas, geom);
        if (i > 0 && taus[i] < taus[i - 1])
            throw FittingError("overtaking wavelet moved backwards at x = " + std::to_string(x_grid[i]),
                               x_grid[i]);
    }

    // s'(x) = 1 - (gamma+1)/4 v(tau_minus) psi(x); between grid points tau_minus is
    // bracketed by its values at the ends.
    const double scale = residual_scale(pulse);
    auto shock_slope = [&](double x, double lo, double hi) {
        const OvertakeResidual F{pulse, 0.25 * c * ray_integral(x, geom)};
        double tau;
        if (F(hi) > 0.0)
            tau = hi;
        else if (lo > 0.0 && !(F(lo) > 0.0))
            tau = lo;
        else
            tau = bisect(F, lo, hi, x, scale);
        return 1.0 - 0.25 * c * pulse(tau) * psi(x, geom);
    };
    auto integrate_slope = [&](double a, double b, double lo, double hi) {
        using boost::math::quadrature::gauss_kronrod;
        auto f = [&](double x) { return shock_slope(x, lo, hi); };
        return gauss_kronrod<double, 15>::integrate(f, a, b, 10, 1e-11);
    };

    double s = out.x_formation - 1.0;  // the head wavelet tau = 0 reaches x_f at t = x_f - 1
    double x_prev = out.x_formation;
    double tau_prev = 0.0;
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        s += integrate_slope(x_prev, x, tau_prev, taus[i]);
        const double tm = taus[i];
        const double ps = psi(x, geom);
        double ux = nan;
        if (x >= 10.0 * out.x_formation)
            ux = (2.0 / c) * (k_factor(x, geom) + (x - s + out.tau0) * k_factor_derivative(x, geom));
        out.samples.push_back({x, tm, pulse(tm) * ps, ux, s});
        x_prev = x;
        tau_prev = tm;
    }
    return out;
}

DecayPair wngo_decay(double b, const GasParams& gas, Geometry geom, double x)
{
    if (!(b > 0.0))
        throw DomainError("pulse area b must be > 0");
    if (!(x > 1.0))
        throw DomainError("decay law needs x > 1");
    const double c = gas.gamma() + 1.0;
    return {std::sqrt(4.0 * b / (c * ray_integral(x, geom))) * psi(x, geom), (2.0 / c) * k_factor(x, geom)};
}

RuwState ruw_state(double u, const GasParams& gas)
{
    const double g = gas.gamma();
    const double a = 1.0 + 0.5 * (g - 1.0) * u;
    if (!(a > 64.0 * std::numeric_limits<double>::epsilon()))
        throw VacuumError("velocity at or below -2/(gamma-1): sound speed vanishes");
    return {std::pow(a, 2.0 / (g - 1.0)), std::pow(a, 2.0 * g / (g - 1.0)) / g, a};
}

double simple_wave_u(double rhs, const GasParams& gas)
{
    if (!(rhs >= 0.0))
        throw DomainError("simple-wave right-hand side must be >= 0");
    if (rhs == 0.0) return 0.0;
    const double g = gas.gamma();
    const double n = 2.0 / (g - 1.0);
    auto f = [&](double u) { return u * std::pow(1.0 + 0.5 * (g - 1.0) * u, n) - rhs; };
    auto df = [&](double u) {
        const double a = 1.0 + 0.5 * (g - 1.0) * u;
        return std::pow(a, n - 1.0) * (a + u);
    };

    // f is increasing with f(u) >= u - rhs, so the root lies in [0, rhs].
    double lo = 0.0, hi = rhs;
    double u = rhs / (1.0 + rhs);
    for (int it = 0; it < 200; ++it) {
        const double fu = f(u);
        if (std::abs(fu) <= 1e-15 * rhs) return u;
        if (fu > 0.0)
            hi = u;
        else
            lo = u;
        double next = u - fu / df(u);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == u) return u;
        u = next;
    }
    if (std::abs(f(u)) > 1e-13 * std::max(1.0, rhs))
        throw DomainError("simple-wave inversion did not converge");
    return u;
}

double simple_wave_time(double x, double tau, const BoundaryPulse& pulse, const GasParams& gas,
                        Geometry geom)
{
    if (!(x >= 1.0))
        throw DomainError("position must satisfy x >= 1");
    const double c = gas.gamma() + 1.0;
    const double v = pulse(tau);
    auto slowness = [&](double xi) { return 1.0 / (1.0 + 0.5 * c * simple_wave_u(v * psi(xi, geom), gas)); };
    if (x == 1.0) return tau;
    using boost::math::quadrature::gauss_kronrod;
    return tau + gauss_kronrod<double, 15>::integrate(slowness, 1.0, x, 15, 1e-13);
}

double field_deviation(const BoundaryPulse& pulse, const GasParams& gas, Geometry geom,
                       std::span<const double> x_grid, std::size_t n_tau)
{
    if (n_tau < 2)
        throw std::invalid_argument("n_tau must be >= 2");
    double worst = 0.0;
    for (double x : x_grid) {
        const double ps = psi(x, geom);
        for (std::size_t i = 0; i < n_tau; ++i) {
            const double tau = pulse.tau0() * static_cast<double>(i) / static_cast<double>(n_tau - 1);
            const double lin = pulse(tau) * ps;
            worst = std::max(worst, std::abs(simple_wave_u(lin, gas) - lin));
        }
    }
    return worst;
}

namespace {
constexpr const char* kFittedHeader = "x,tau_minus,u_jump,ux_jump,shock_time";
}

void write_csv(std::ostream& os, const FittedShock& shock)
{
    csv::write_header(os, kFittedHeader);
    for (const auto& s : shock.samples) {
        const double row[] = {s.x, s.tau_minus, s.u_jump, s.ux_jump, s.shock_time};
        csv::write_row(os, row);
    }
}

FittedShock read_fitted_csv(std::istream& is)
{
    FittedShock shock;
    for (const auto& r : csv::read_numeric(is, kFittedHeader))
        shock.samples.push_back({r[0], r[1], r[2], r[3], r[4]});
    return shock;
}

}  // namespace shockdecay
