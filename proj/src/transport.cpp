#include "shockdecay/transport.hpp"

#include "shockdecay/csv.hpp"
#include "shockdecay/errors.hpp"
#include "shockdecay/ode.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace shockdecay {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

void require_admissible(double mach, double x)
{
    if (!(mach >= 1.0))
        throw DomainError("expansive shock (U < 1) is inadmissible");
    if (!(x >= 1.0))
        throw DomainError("position must satisfy x >= 1");
}

// Everything the coefficient formulas share at one (U, gamma).
struct Hugoniot {
    double U, g, c;  // c = gamma + 1
    double mu, nu, D;
    double dmu, dnu, dD;
    double k11, dk11;

    Hugoniot(double mach, const GasParams& gas)
    {
        U = mach;
        g = gas.gamma();
        c = g + 1.0;
        const double u2 = U * U;
        mu = 2.0 + (g - 1.0) * u2;
        nu = 2.0 * g * u2 + 1.0 - g;
        D = u2 * (2.0 * mu + nu) + nu;
        dmu = 2.0 * (g - 1.0) * U;
        dnu = 4.0 * g * U;
        dD = 2.0 * U * (2.0 * mu + nu) + u2 * (2.0 * dmu + dnu) + dnu;
        k11 = -2.0 * (u2 - 1.0) * mu / D;
        dk11 = -2.0 * (2.0 * U * mu + (u2 - 1.0) * dmu) / D + 2.0 * (u2 - 1.0) * mu * dD / (D * D);
    }

    // k12/k11, finite at U = 1.
    double k12_over_k11(double omega) const { return 2.0 * nu * omega / (c * c); }
};

}  // namespace

FirstOrderCoefficients first_order_coefficients(double mach, const GasParams& gas, double omega)
{
    if (!(mach >= 1.0))
        throw DomainError("expansive shock (U < 1) is inadmissible");
    if (!(omega >= 0.0))
        throw DomainError("curvature must be non-negative");
    const auto [mu, nu] = mu_nu(mach, gas);
    const double c = gas.gamma() + 1.0;
    const double u2 = mach * mach;
    const double D = u2 * (2.0 * mu + nu) + nu;
    return {-2.0 * (u2 - 1.0) * mu / D, -4.0 * (u2 - 1.0) * mu * nu / D * (omega / (c * c))};
}

TMatrix t_matrix(double mach, const GasParams& gas, Geometry geom, double x)
{
    require_admissible(mach, x);
    const Hugoniot s(mach, gas);
    const double U = s.U, u2 = U * U, c = s.c;
    const double omega = symmetry_index(geom) / x;

    TMatrix t;
    t.t11 = (s.mu - c * s.k11 * u2) / (s.nu * U);
    // -(k12/k11) c (U^4 - 1) / (U ((2mu + nu)U^2 + nu)), with (2mu + nu)U^2 + nu = D
    t.t12 = -s.k12_over_k11(omega) * c * (u2 * u2 - 1.0) / (U * s.D);
    // The second row follows from the continuity jump relation, solved for [rho_x].
    t.t21 = u2 * c * c * (3.0 * (s.g - 1.0) * u2 * u2 + (3.0 - s.g) * u2 + 2.0 * s.g + 4.0) /
            (s.mu * s.mu * s.D);
    const double w = u2 - 1.0;
    t.t22 = 4.0 * omega * u2 * w * w * w * (s.g - 1.0) * c / (s.mu * s.mu * s.D);
    return t;
}

TMatrixDerivatives t_matrix_derivatives(double mach, const GasParams& gas, Geometry geom, double x)
{
    require_admissible(mach, x);
    const Hugoniot s(mach, gas);
    const double U = s.U, u2 = U * U, c = s.c;
    const double omega = symmetry_index(geom) / x;

    TMatrixDerivatives d;

    const double n = s.mu - c * s.k11 * u2;
    const double dn = s.dmu - c * (s.dk11 * u2 + 2.0 * U * s.k11);
    const double den = s.nu * U;
    d.dt11_du = dn / den - n * (s.dnu * U + s.nu) / (den * den);

    // T12 = -(2 Omega / c) q / w with q = nu (U^4 - 1), w = U D
    const double q = s.nu * (u2 * u2 - 1.0);
    const double dq = s.dnu * (u2 * u2 - 1.0) + 4.0 * u2 * U * s.nu;
    const double w = U * s.D;
    const double dw = s.D + U * s.dD;
    d.dt12_du = -(2.0 * omega / c) * (dq * w - q * dw) / (w * w);
    const double t12 = -(2.0 * omega / c) * q / w;
    d.dt12_dx = -t12 / x;  // Omega = j/x
    return d;
}

SecondOrderCoefficients second_order_coefficients(double mach, const GasParams& gas, Geometry geom,
                                                  double x)
{
    require_admissible(mach, x);
    const Hugoniot s(mach, gas);
    const TMatrix t = t_matrix(mach, gas, geom, x);
    const TMatrixDerivatives d = t_matrix_derivatives(mach, gas, geom, x);

    const double U = s.U, u2 = U * U, u4 = u2 * u2, c = s.c, mu = s.mu, nu = s.nu, g = s.g;
    const double j = symmetry_index(geom);
    const double omega = j / x;
    const double domega = -j / (x * x);
    const double k11 = s.k11;
    const double k12 = k11 * s.k12_over_k11(omega);

    SecondOrderCoefficients k;
    k.eta = mu / (2.0 * mu - c * U * k11);
    const double eta = k.eta;
    k.k21 = (u2 - 1.0) * eta / u2;

    k.k22 = (c * eta / (U * mu)) * (t.t11 * (mu + nu * U * t.t11 / c) + (nu * k11 / 4.0) * d.dt11_du) -
            mu * nu * eta * t.t21 / (c * c * u4);

    // (k12/k11) dT11/dU is multiplied by k11, so it is written with k12 directly.
    k.k23 = (t.t12 * eta / mu) * (mu * c + 2.0 * nu * U * t.t11) / U +
            eta * omega * (c / U) * (nu * t.t11 + (2.0 * g / U) * (u2 - 1.0)) -
            mu * nu * eta * t.t22 / (u4 * c * c) +
            (eta * nu / (4.0 * mu)) * (c / U) * (k12 * d.dt11_du + k11 * d.dt12_du);

    k.k24 = 2.0 * eta * (nu / u2) * (u2 - 1.0) * domega / (c * c) + eta * nu * t.t12 * omega / (U * c) +
            (nu * U * eta / (U * mu)) *
                (t.t12 * t.t12 + U * d.dt12_dx + c * (k12 / (4.0 * U)) * d.dt12_du);
    return k;
}

const std::vector<double>& table1_abscissae()
{
    static const std::vector<double> xs{1.476, 4.565, 7.668, 9.563, 13.3,  27.95, 45.57,
                                        65.31, 76.04, 86.34, 96.35, 99.95, 100.0};
    return xs;
}

const std::vector<ReferenceErrors>& table1_reference()
{
    static const std::vector<ReferenceErrors> rows{
        {1.476, 4.332e-2, 9.545e-1, 3.374e-2, 6.752e-2}, {4.565, 4.827e-3, 4.914e-2, 1.317e-2, 1.885e-2},
        {7.668, 2.076e-3, 1.593e-2, 7.448e-3, 8.723e-3}, {9.563, 1.464e-3, 9.990e-3, 5.675e-3, 6.133e-3},
        {13.3, 8.752e-4, 5.032e-3, 3.711e-3, 3.482e-3},  {27.95, 2.798e-4, 1.100e-3, 1.373e-3, 9.242e-4},
        {45.57, 1.332e-4, 4.088e-4, 6.879e-4, 3.678e-4}, {65.31, 7.732e-5, 1.979e-4, 4.078e-4, 1.832e-4},
        {76.04, 6.145e-5, 1.457e-4, 3.271e-4, 1.366e-4}, {86.34, 5.075e-5, 1.129e-4, 2.716e-4, 1.065e-4},
        {96.35, 4.301e-5, 9.054e-5, 2.311e-4, 8.591e-5}, {99.95, 4.07e-5, 8.411e-5, 2.205e-4, 8.072e-5},
        {100.0, 4.067e-5, 8.403e-5, 2.190e-4, 7.994e-5},
    };
    return rows;
}

bool validate(const Scenario& scen)
{
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(scen.h) || scen.h < 0.0)
        throw std::invalid_argument("h: initial shock strength must be finite and >= 0");
    if (!finite(scen.k))
        throw std::invalid_argument("k: initial gradient jump must be finite");
    if (!finite(scen.x_end) || !(scen.x_end > 1.0))
        throw std::invalid_argument("x_end: must be finite and > 1");
    if (!(scen.rtol > 0.0) || !(scen.rtol < 1.0))
        throw std::invalid_argument("rtol: must lie in (0, 1)");
    if (!(scen.atol > 0.0))
        throw std::invalid_argument("atol: must be > 0");
    if (scen.log_samples < 2)
        throw std::invalid_argument("log_samples: need at least 2");
    return std::abs(scen.h) > 0.5;
}

JumpPair closed_form(double x, double h, double k, const GasParams& gas, Geometry geom)
{
    const double I = 1.0 + 0.5 * (gas.gamma() + 1.0) * k * ray_integral(x, geom);
    if (!(I > 0.0))
        throw BreakdownError("first-order discontinuity has blown up (I(x) <= 0)", x);
    const double ps = psi(x, geom);
    return {h * ps / std::sqrt(I), k * ps / I};
}

JumpPair asymptotic_law(double x, double h, double k, const GasParams& gas, Geometry geom,
                        Regime regime)
{
    if (!(k > 0.0))
        throw DomainError("decay laws assume a positive gradient jump k > 0");
    if (!(x >= 1.0))
        throw DomainError("position must satisfy x >= 1");
    if (geom == Geometry::Spherical && !(x > 1.0))
        throw DomainError("spherical decay law is undefined at x = 1");
    const double c = gas.gamma() + 1.0;

    if (regime == Regime::Case1) {
        const double amp = h * std::sqrt(2.0 / (c * k));
        switch (geom) {
        case Geometry::Planar: return {amp / std::sqrt(x), (2.0 / c) / x};
        case Geometry::Cylindrical:
            return {amp * std::pow(x, -0.75) / std::sqrt(2.0), (2.0 / c) * 0.5 / x};
        case Geometry::Spherical:
            return {amp / (x * std::sqrt(std::log(x))), (2.0 / c) / (x * std::log(x))};
        }
    }
    // Multiple-scales laws for a weak gradient jump
    switch (geom) {
    case Geometry::Planar: return {h * std::sqrt(2.0 / (c * k)) / std::sqrt(x), 2.0 / (c * x)};
    case Geometry::Cylindrical: return {h * std::sqrt(1.0 / (k * c)) * std::pow(x, -0.75), 1.0 / (c * x)};
    case Geometry::Spherical:
        return {h * std::sqrt(2.0 / (k * c)) / (x * std::sqrt(std::log(x))), 2.0 / (c * x * std::log(x))};
    }
    return {nan, nan};
}

std::optional<double> breakdown_distance(double /*h*/, double k, const GasParams& gas, Geometry geom)
{
    if (!(k < 0.0)) return std::nullopt;
    return inverse_ray_integral(-2.0 / ((gas.gamma() + 1.0) * k), geom);
}

namespace {

std::vector<double> sample_grid(const Scenario& scen)
{
    std::vector<double> xs;
    const std::size_t n = scen.log_samples;
    const double lend = std::log(scen.x_end);
    xs.reserve(n + table1_abscissae().size() + scen.sample_points.size());
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(std::exp(lend * static_cast<double>(i) / static_cast<double>(n - 1)));
    xs.front() = 1.0;
    xs.back() = scen.x_end;
    for (double x : table1_abscissae())
        if (x <= scen.x_end) xs.push_back(x);
    for (double x : scen.sample_points)
        if (x >= 1.0 && x <= scen.x_end) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

HistorySample make_sample(const Scenario& scen, double x, double p, double px)
{
    HistorySample s{x, p, px, nan, nan, nan, nan};
    if (scen.k > 0.0 && (scen.geom != Geometry::Spherical || x > 1.0)) {
        const JumpPair a = asymptotic_law(x, scen.h, scen.k, scen.gas, scen.geom, scen.regime);
        s.p_asym = a.p_jump;
        s.px_asym = a.px_jump;
        s.p_err = std::abs(p - a.p_jump);
        s.px_err = std::abs(px - a.px_jump);
    }
    return s;
}

}  // namespace

ShockHistory integrate_truncated(const Scenario& scen)
{
    validate(scen);
    const double c = scen.gas.gamma() + 1.0;
    const double j = symmetry_index(scen.geom);
    const std::vector<double> grid = sample_grid(scen);

    auto rhs = [c, j](double x, const ode::State<2>& y) -> ode::State<2> {
        const double p = y[0], px = y[1];
        const double damp = 0.5 * j / x;
        return {-0.25 * c * p * px - damp * p, -0.5 * c * px * px - damp * px};
    };

    ShockHistory hist;
    hist.samples.reserve(grid.size());
    hist.samples.push_back(make_sample(scen, 1.0, scen.h, scen.k));

    // [p_x] ~ 2/((gamma+1)(x* - x)) near the pole, independent of k and j.
    const double blowup = 1e10 * std::max(1.0, std::abs(scen.k));
    std::size_t next = 1;
    double last_x = 1.0;

    auto on_step = [&](const ode::Step<2>& st) {
        last_x = st.x1;
        while (next < grid.size() && grid[next] <= st.x1) {
            const double xs = grid[next++];
            const auto y = xs == st.x1 ? st.y1 : st.interpolate(xs);
            hist.samples.push_back(make_sample(scen, xs, y[0], y[1]));
        }
        if (std::abs(st.y1[1]) > blowup) {
            hist.breakdown = st.x1;
            return ode::Control::Stop;
        }
        return ode::Control::Continue;
    };

    ode::Options opt;
    opt.rtol = scen.rtol;
    opt.atol = scen.atol;
    try {
        ode::integrate<2>(rhs, 1.0, ode::State<2>{scen.h, scen.k}, scen.x_end, opt, on_step);
    } catch (const SolverError& e) {
        // Near the pole the step size collapses before the threshold is reached.
        if (scen.k < 0.0 && breakdown_distance(scen.h, scen.k, scen.gas, scen.geom).value() <= scen.x_end) {
            hist.breakdown = e.last_good_x();
        } else {
            throw SolverError(std::string("truncated transport: ") + e.what(), last_x);
        }
    }
    return hist;
}

namespace {
constexpr const char* kHistoryHeader = "x,p_jump,px_jump,p_asym,px_asym,p_err,px_err";
}

void write_csv(std::ostream& os, const ShockHistory& hist)
{
    csv::write_header(os, kHistoryHeader);
    for (const auto& s : hist.samples) {
        const double row[] = {s.x, s.p_jump, s.px_jump, s.p_asym, s.px_asym, s.p_err, s.px_err};
        csv::write_row(os, row);
    }
}

ShockHistory read_history_csv(std::istream& is)
{
    ShockHistory hist;
    for (const auto& r : csv::read_numeric(is, kHistoryHeader))
        hist.samples.push_back({r[0], r[1], r[2], r[3], r[4], r[5], r[6]});
    return hist;
}

}  // namespace shockdecay
