#include "shockdecay/errors.hpp"
#include "shockdecay/fit.hpp"
#include "shockdecay/wavefront.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace shockdecay;

namespace {

std::vector<double> log_grid(double a, double b, int n)
{
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = a * std::pow(b / a, static_cast<double>(i) / (n - 1));
    return x;
}

}  // namespace

TEST_CASE("pulse construction and integral")
{
    const auto p = BoundaryPulse::half_sine(0.1, 1.0);
    CHECK(p.b() == doctest::Approx(0.2 / std::numbers::pi).epsilon(1e-13));
    CHECK(p.vdot0() == doctest::Approx(0.1 * std::numbers::pi));
    CHECK(p.tau0() == 1.0);
    CHECK(p(-1.0) == 0.0);
    CHECK(p(2.0) == 0.0);
    for (double t : {0.013, 0.25, 0.5, 0.77, 0.999}) {
        const double exact = 0.1 / std::numbers::pi * (1.0 - std::cos(std::numbers::pi * t));
        CHECK(std::abs(p.integral(t) - exact) < 1e-13);
        CHECK(p.integral(t) <= p.b());
    }
    CHECK(p.integral(5.0) == p.b());

    const auto r = BoundaryPulse::ramp_down(0.3, 2.0);
    CHECK(r.b() == doctest::Approx(0.3 * 4.0 / 6.0).epsilon(1e-13));
    CHECK(r.vdot0() == 0.3);

    CHECK_THROWS_AS(BoundaryPulse::tabulated({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(BoundaryPulse::half_sine(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(BoundaryPulse::half_sine(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BoundaryPulse::tabulated({0.0, 1.0, 2.0, 3.0}, {0.0, 1.0, 1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(BoundaryPulse::tabulated({0.0, 1.0, 1.0, 2.0}, {0.0, 1.0, 1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("tabulated and csv pulses")
{
    std::vector<double> tau, v;
    std::ostringstream csv;
    csv << "tau,v\n";
    for (int i = 0; i <= 400; ++i) {
        const double t = i / 400.0;
        tau.push_back(t);
        v.push_back(i == 400 ? 0.0 : 0.05 * std::sin(std::numbers::pi * t));
        csv << t << ',' << v.back() << '\n';
    }
    const auto tab = BoundaryPulse::tabulated(tau, v);
    const auto ref = BoundaryPulse::half_sine(0.05, 1.0);
    CHECK(tab.b() == doctest::Approx(ref.b()).epsilon(1e-5));
    CHECK(tab(0.3) == doctest::Approx(ref(0.3)).epsilon(1e-6));
    std::istringstream in(csv.str());
    const auto fromcsv = BoundaryPulse::from_csv(in);
    CHECK(fromcsv.b() == doctest::Approx(ref.b()).epsilon(1e-5));
    std::istringstream bad("t,v\n0,0\n");
    CHECK_THROWS(BoundaryPulse::from_csv(bad));
}

TEST_CASE("wavelet time")
{
    const GasParams gas;
    const auto p = BoundaryPulse::half_sine(0.1, 1.0);
    CHECK(wavelet_time(1.0, 0.3, p, gas, Geometry::Spherical) == 0.3);
    CHECK(wavelet_time(11.0, 0.5, p, gas, Geometry::Planar) == doctest::Approx(0.5 + 10.0 - 1.2 * 0.1 * 10.0));
    CHECK(wavelet_time(11.0, 0.0, p, gas, Geometry::Cylindrical) == doctest::Approx(10.0));
}

TEST_CASE("shock formation distance")
{
    const GasParams gas;
    const auto p = BoundaryPulse::half_sine(0.1, 1.0);
    const double J = 2.0 / (2.4 * 0.1 * std::numbers::pi);
    CHECK(formation_distance(p, gas, Geometry::Planar) == doctest::Approx(1.0 + J));
    CHECK(formation_distance(p, gas, Geometry::Cylindrical) == doctest::Approx(std::pow(1.0 + J / 2.0, 2)));
    CHECK(formation_distance(p, gas, Geometry::Spherical) == doctest::Approx(std::exp(J)));
    const auto zero = BoundaryPulse::half_sine(0.0, 1.0);
    CHECK_THROWS_AS(formation_distance(zero, gas, Geometry::Planar), FittingError);
}

TEST_CASE("overtaking wavelet")
{
    const GasParams gas;
    const auto p = BoundaryPulse::half_sine(0.1, 1.0);
    for (Geometry g : {Geometry::Planar, Geometry::Cylindrical, Geometry::Spherical}) {
        const double xf = formation_distance(p, gas, g);
        const double t1 = tau_minus(xf * (1.0 + 1e-4), p, gas, g);
        CHECK(t1 < 0.05);
        CHECK(t1 > 0.0);
        double prev = t1;
        for (double x : {2.0 * xf, 10.0 * xf, 1e3 * xf}) {
            const double t = tau_minus(x, p, gas, g);
            CHECK(t > prev);
            CHECK(t < 1.0);
            // Equal-area condition, checked directly.
            const double lhs = 0.6 * p(t) * p(t) * ray_integral(x, g);
            CHECK(std::abs(lhs - p.integral(t)) < 1e-12);
            prev = t;
        }
        CHECK_THROWS_AS(tau_minus(0.99 * xf, p, gas, g), FittingError);
    }
}

TEST_CASE("fitted shock follows the overtaking wavelet")
{
    const GasParams gas;
    const auto p = BoundaryPulse::half_sine(0.1, 1.0);
    for (Geometry g : {Geometry::Planar, Geometry::Cylindrical, Geometry::Spherical}) {
        const double xf = formation_distance(p, gas, g);
        const auto grid = log_grid(1.01 * xf, 1e3 * xf, 40);
        const FittedShock fs = fit_shock(p, gas, g, grid);
        REQUIRE(fs.samples.size() == grid.size());
        CHECK(fs.x_formation == xf);
        CHECK(fs.b == p.b());
        for (const auto& s : fs.samples) {
            // The shock lies on the wavelet that has just been overtaken.
            CHECK(s.shock_time == doctest::Approx(wavelet_time(s.x, s.tau_minus, p, gas, g)).epsilon(1e-9));
            CHECK(s.u_jump == doctest::Approx(p(s.tau_minus) * psi(s.x, g)));
            CHECK(std::isnan(s.ux_jump) == (s.x < 10.0 * xf));
        }
    }
}

TEST_CASE("half-sine decay approaches the WNGO law")
{
    const GasParams gas;
    const auto p = BoundaryPulse::half_sine(0.1, 1.0);
    const auto grid = log_grid(4.0, 1e4, 30);
    const FittedShock fs = fit_shock(p, gas, Geometry::Planar, grid);
    const auto& last = fs.samples.back();
    const DecayPair law = wngo_decay(p.b(), gas, Geometry::Planar, last.x);
    CHECK(last.u_jump == doctest::Approx(law.u_jump).epsilon(0.02));
    CHECK(last.ux_jump == doctest::Approx(law.ux_jump).epsilon(0.02));
    CHECK(law.u_jump * std::sqrt(last.x - 1.0) == doctest::Approx(std::sqrt(4.0 * p.b() / 2.4)));
    CHECK(law.ux_jump == doctest::Approx(1.0 / (1.2 * last.x)));
}

TEST_CASE("cylindrical decay at large distance")
{
    const GasParams gas;
    const auto p = BoundaryPulse::half_sine(0.01, std::numbers::pi / 2.0);  // b = 0.01
    CHECK(p.b() == doctest::Approx(0.01).epsilon(1e-12));
    const double xf = formation_distance(p, gas, Geometry::Cylindrical);
    const FittedShock fs = fit_shock(p, gas, Geometry::Cylindrical, log_grid(1.001 * xf, 1e6, 50));
    const auto& last = fs.samples.back();
    const DecayPair law = wngo_decay(0.01, gas, Geometry::Cylindrical, 1e6);
    CHECK(last.u_jump == doctest::Approx(law.u_jump).epsilon(0.02));
    CHECK(last.ux_jump == doctest::Approx(law.ux_jump).epsilon(0.02));
    CHECK(law.ux_jump == doctest::Approx(1.0 / (2.4 * 1e6)));

    std::vector<double> x, u;
    for (const auto& s : fs.samples) {
        x.push_back(s.x);
        u.push_back(s.u_jump);
    }
    CHECK(log_log_slope(x, u, 1e4, 1e6) == doctest::Approx(-0.75).epsilon(0.02));
}

TEST_CASE("fit_shock preconditions")
{
    const GasParams gas;
    const auto p = BoundaryPulse::half_sine(0.1, 1.0);
    const std::vector<double> early = {2.0, 5.0};
    CHECK_THROWS_AS(fit_shock(p, gas, Geometry::Planar, early), FittingError);
    const std::vector<double> unordered = {10.0, 5.0};
    CHECK_THROWS_AS(fit_shock(p, gas, Geometry::Planar, unordered), std::invalid_argument);
    const auto zero = BoundaryPulse::half_sine(0.0, 1.0);
    const std::vector<double> ok = {10.0};
    CHECK_THROWS_AS(fit_shock(zero, gas, Geometry::Planar, ok), FittingError);
    CHECK_THROWS_AS(wngo_decay(0.0, gas, Geometry::Planar, 10.0), DomainError);
    CHECK_THROWS_AS(wngo_decay(0.1, gas, Geometry::Planar, 1.0), DomainError);
}

TEST_CASE("relatively undistorted wave state")
{
    for (double g : {1.4, 5.0 / 3.0}) {
        const GasParams gas(g);
        const RuwState z = ruw_state(0.0, gas);
        CHECK(z.rho == 1.0);
        CHECK(z.a == 1.0);
        CHECK(z.p == doctest::Approx(1.0 / g));
        for (double u : {-0.3, -0.01, 0.02, 0.5}) {
            const RuwState s = ruw_state(u, gas);
            CHECK(u - 2.0 * s.a / (g - 1.0) == doctest::Approx(-2.0 / (g - 1.0)));
            CHECK(s.p == doctest::Approx(std::pow(s.rho, g) / g));
            CHECK(s.a * s.a == doctest::Approx(g * s.p / s.rho));
        }
    }
    CHECK_THROWS_AS(ruw_state(-5.0, GasParams()), VacuumError);
    CHECK_THROWS_AS(ruw_state(-6.0, GasParams()), VacuumError);
}

TEST_CASE("simple-wave inversion")
{
    const GasParams gas;
    CHECK(simple_wave_u(0.0, gas) == 0.0);
    CHECK(simple_wave_u(0.1 * std::pow(1.02, 5), gas) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(simple_wave_u(1e-6, gas) == doctest::Approx(1e-6 * (1.0 - 1e-6)).epsilon(1e-11));
    for (double u : {1e-3, 0.05, 0.7, 3.0}) {
        const double rhs = u * std::pow(1.0 + 0.2 * u, 5);
        CHECK(simple_wave_u(rhs, gas) == doctest::Approx(u).epsilon(1e-13));
    }
    CHECK_THROWS_AS(simple_wave_u(-0.1, gas), DomainError);
}

TEST_CASE("simple-wave arrival time")
{
    const GasParams gas;
    const auto zero = BoundaryPulse::ramp_down(0.0, 1.0);
    CHECK(simple_wave_time(7.0, 0.4, zero, gas, Geometry::Spherical) == doctest::Approx(6.4));
    // First-order agreement with the linear wavelet; the gap is O(amplitude^2).
    auto gap = [&](double amp) {
        const auto p = BoundaryPulse::half_sine(amp, 1.0);
        return std::abs(simple_wave_time(20.0, 0.5, p, gas, Geometry::Planar) -
                        wavelet_time(20.0, 0.5, p, gas, Geometry::Planar));
    };
    const double g1 = gap(0.01), g2 = gap(0.005);
    CHECK(g1 < 0.01 * 0.01 * 20.0 * 5.0);
    CHECK(g1 / g2 == doctest::Approx(4.0).epsilon(0.05));
    const auto p = BoundaryPulse::half_sine(0.01, 1.0);
    CHECK_THROWS_AS(simple_wave_time(0.5, 0.1, p, gas, Geometry::Planar), DomainError);
}

TEST_CASE("simple wave and linear field differ at second order")
{
    const GasParams gas;
    const auto grid = log_grid(1.0, 100.0, 9);
    const double d1 = field_deviation(BoundaryPulse::half_sine(0.01, 1.0), gas, Geometry::Planar, grid);
    const double d2 = field_deviation(BoundaryPulse::half_sine(0.02, 1.0), gas, Geometry::Planar, grid);
    CHECK(d1 == doctest::Approx(1e-4).epsilon(0.03));  // u (1 + (gamma-1)u/2)^(2/(gamma-1)) = u + u^2 + ...
    CHECK(d2 / d1 == doctest::Approx(4.0).epsilon(0.03));
}

TEST_CASE("fitted csv round trip")
{
    const GasParams gas;
    const auto p = BoundaryPulse::half_sine(0.1, 1.0);
    const auto a = fit_shock(p, gas, Geometry::Spherical, log_grid(40.0, 1e4, 7));
    std::stringstream ss;
    write_csv(ss, a);
    const auto b = read_fitted_csv(ss);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].x == b.samples[i].x);
        CHECK(a.samples[i].shock_time == b.samples[i].shock_time);
        CHECK(std::isnan(a.samples[i].ux_jump) == std::isnan(b.samples[i].ux_jump));
    }
}
