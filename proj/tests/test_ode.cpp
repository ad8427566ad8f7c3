#include "shockdecay/errors.hpp"
#include "shockdecay/ode.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace shockdecay;

namespace {
auto ignore = [](const auto&) { return ode::Control::Continue; };
}

TEST_CASE("exponential decay to tolerance")
{
    auto rhs = [](double, const ode::State<1>& y) { return ode::State<1>{-y[0]}; };
    const auto r = ode::integrate<1>(rhs, 0.0, {1.0}, 10.0, ode::Options{}, ignore);
    CHECK(r.x == 10.0);
    CHECK(r.y[0] == doctest::Approx(std::exp(-10.0)).epsilon(1e-8));
    CHECK(r.accepted > 0);
    CHECK_FALSE(r.stopped);
}

TEST_CASE("harmonic oscillator keeps phase and energy")
{
    auto rhs = [](double, const ode::State<2>& y) { return ode::State<2>{y[1], -y[0]}; };
    const double end = 20 * std::acos(-1.0);
    const auto r = ode::integrate<2>(rhs, 0.0, {1.0, 0.0}, end, ode::Options{}, ignore);
    CHECK(std::abs(r.y[0] - 1.0) < 1e-7);
    CHECK(std::abs(r.y[1]) < 1e-7);
}

TEST_CASE("tolerance controls the error")
{
    auto rhs = [](double x, const ode::State<1>& y) { return ode::State<1>{std::cos(x) * y[0]}; };
    double prev = 1.0;
    for (double rtol : {1e-4, 1e-7, 1e-10}) {
        ode::Options opt;
        opt.rtol = rtol;
        opt.atol = rtol * 1e-3;
        const auto r = ode::integrate<1>(rhs, 0.0, {1.0}, 30.0, opt, ignore);
        const double err = std::abs(r.y[0] - std::exp(std::sin(30.0)));
        CHECK(err < 100 * rtol);
        CHECK(err <= prev);
        prev = err;
    }
}

TEST_CASE("dense output is accurate inside steps")
{
    auto rhs = [](double, const ode::State<1>& y) { return ode::State<1>{-y[0]}; };
    double worst = 0.0;
    auto obs = [&](const ode::Step<1>& st) {
        const double xm = 0.5 * (st.x0 + st.x1);
        worst = std::max(worst, std::abs(st.interpolate(xm)[0] - std::exp(-xm)) / std::exp(-xm));
        CHECK(st.interpolate(st.x0)[0] == doctest::Approx(st.y0[0]));
        CHECK(st.interpolate(st.x1)[0] == doctest::Approx(st.y1[0]));
        return ode::Control::Continue;
    };
    ode::Options opt;
    opt.rtol = 1e-12;
    opt.atol = 1e-16;
    ode::integrate<1>(rhs, 0.0, {1.0}, 5.0, opt, obs);
    CHECK(worst < 1e-9);
}

TEST_CASE("observer can stop the integration")
{
    auto rhs = [](double, const ode::State<1>&) { return ode::State<1>{1.0}; };
    auto obs = [](const ode::Step<1>& st) { return st.y1[0] > 2.0 ? ode::Control::Stop : ode::Control::Continue; };
    const auto r = ode::integrate<1>(rhs, 0.0, {0.0}, 100.0, ode::Options{}, obs);
    CHECK(r.stopped);
    CHECK(r.x < 100.0);
    CHECK(r.y[0] > 2.0);
}

TEST_CASE("integrating into a pole raises a solver error")
{
    // y' = y^2, y(0) = 1 blows up at x = 1.
    auto rhs = [](double, const ode::State<1>& y) { return ode::State<1>{y[0] * y[0]}; };
    try {
        ode::integrate<1>(rhs, 0.0, {1.0}, 2.0, ode::Options{}, ignore);
        FAIL("expected SolverError");
    } catch (const SolverError& e) {
        CHECK(e.last_good_x() < 1.0);
        CHECK(e.last_good_x() > 0.999);
    }
}

TEST_CASE("step budget")
{
    auto rhs = [](double x, const ode::State<1>&) { return ode::State<1>{std::cos(100 * x)}; };
    ode::Options opt;
    opt.max_steps = 10;
    CHECK_THROWS_AS(ode::integrate<1>(rhs, 0.0, {0.0}, 100.0, opt, ignore), SolverError);
}

TEST_CASE("sampler emits requested abscissae in order")
{
    auto rhs = [](double, const ode::State<1>& y) { return ode::State<1>{-y[0]}; };
    const std::vector<double> xs{0.5, 1.0, 2.5, 4.0};
    std::vector<double> got;
    auto emit = [&](double x, const ode::State<1>& y) {
        got.push_back(x);
        CHECK(y[0] == doctest::Approx(std::exp(-x)).epsilon(1e-8));
        return ode::Control::Continue;
    };
    ode::Sampler<1, decltype(emit)> sampler(xs.data(), xs.data() + xs.size(), emit);
    ode::integrate<1>(rhs, 0.0, {1.0}, 4.0, ode::Options{}, sampler);
    CHECK(got == xs);
}
