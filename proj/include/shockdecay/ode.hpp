#pragma once

// Embedded Dormand-Prince 5(4) integrator with step-size control and the
// usual fourth-order continuous extension. Small fixed-size systems only.

#include "shockdecay/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

namespace shockdecay::ode {

template <std::size_t N>
using State = std::array<double, N>;

struct Options {
    double rtol = 1e-10;
    double atol = 1e-14;
    double initial_step = 0.0;  // 0 selects a step automatically
    double max_step = std::numeric_limits<double>::infinity();
    std::size_t max_steps = 2'000'000;
};

// One accepted step. `dense` is h times the stage combination that lifts the
// quartic interpolant through (x0, y0, f0) and (x1, y1, f1) to fourth order.
template <std::size_t N>
struct Step {
    double x0, x1;
    State<N> y0, y1, f0, f1, dense;

    State<N> interpolate(double x) const
    {
        const double h = x1 - x0;
        const double s = (x - x0) / h, s1 = 1.0 - s;
        State<N> y;
        for (std::size_t i = 0; i < N; ++i) {
            const double dy = y1[i] - y0[i];
            const double b = h * f0[i] - dy;
            const double c = dy - h * f1[i] - b;
            y[i] = y0[i] + s * (dy + s1 * (b + s * (c + s1 * dense[i])));
        }
        return y;
    }
};

enum class Control { Continue, Stop };

template <std::size_t N>
struct Result {
    double x;
    State<N> y;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    bool stopped = false;  // the observer asked to stop before x_end
};

namespace detail {

template <std::size_t N>
double error_norm(const State<N>& err, const State<N>& y0, const State<N>& y1, const Options& opt)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double sk = opt.atol + opt.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double r = err[i] / sk;
        sum += r * r;
    }
    return std::sqrt(sum / static_cast<double>(N));
}

template <std::size_t N>
bool all_finite(const State<N>& y)
{
    return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

template <std::size_t N, class Rhs>
double initial_step(Rhs& rhs, double x0, const State<N>& y0, const State<N>& f0, double dir,
                    const Options& opt)
{
    double d0 = 0, d1 = 0;
    for (std::size_t i = 0; i < N; ++i) {
        const double sk = opt.atol + opt.rtol * std::abs(y0[i]);
        d0 += (y0[i] / sk) * (y0[i] / sk);
        d1 += (f0[i] / sk) * (f0[i] / sk);
    }
    d0 = std::sqrt(d0 / N);
    d1 = std::sqrt(d1 / N);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, opt.max_step);

    State<N> y1;
    for (std::size_t i = 0; i < N; ++i) y1[i] = y0[i] + dir * h0 * f0[i];
    const State<N> f1 = rhs(x0 + dir * h0, y1);
    double d2 = 0;
    for (std::size_t i = 0; i < N; ++i) {
        const double sk = opt.atol + opt.rtol * std::abs(y0[i]);
        const double r = (f1[i] - f0[i]) / sk;
        d2 += r * r;
    }
    d2 = std::sqrt(d2 / N) / h0;
    const double dmax = std::max(d1, d2);
    const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 0.2);
    return std::min({100 * h0, h1, opt.max_step});
}

}  // namespace detail

// Integrates y' = rhs(x, y) from x0 to x_end. `on_step(const Step<N>&)` is called
// after every accepted step and returns Control::Stop to end the integration early.
// Throws SolverError when the step size underflows or the step budget runs out.
template <std::size_t N, class Rhs, class Observer>
Result<N> integrate(Rhs&& rhs, double x0, State<N> y0, double x_end, const Options& opt,
                    Observer&& on_step)
{
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                     a75 = -2187.0 / 6784, a76 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                     d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                     d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

    Result<N> res{x0, y0};
    if (x_end == x0) return res;
    const double dir = x_end > x0 ? 1.0 : -1.0;

    double x = x0;
    State<N> y = y0;
    State<N> k1 = rhs(x, y);
    if (!detail::all_finite(k1))
        throw SolverError("non-finite derivative at the initial point", x);

    double h = opt.initial_step > 0 ? opt.initial_step : detail::initial_step<N>(rhs, x, y, k1, dir, opt);
    bool last_rejected = false;

    State<N> tmp, k2, k3, k4, k5, k6, k7, y_new, err;
    while (dir * (x_end - x) > 0) {
        if (res.accepted + res.rejected >= opt.max_steps)
            throw SolverError("step budget exhausted", x);
        const double h_min = 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
        if (h < h_min)
            throw SolverError("step size underflow at x = " + std::to_string(x), x);

        bool clipped = false;
        if (dir * (x + dir * h - x_end) > 0) {
            h = std::abs(x_end - x);
            clipped = true;
        }
        const double hs = dir * h;

        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * a21 * k1[i];
        k2 = rhs(x + c2 * hs, tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        k3 = rhs(x + c3 * hs, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = rhs(x + c4 * hs, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = rhs(x + c5 * hs, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        k6 = rhs(x + hs, tmp);
        for (std::size_t i = 0; i < N; ++i)
            y_new[i] = y[i] + hs * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        const double x_new = clipped ? x_end : x + hs;
        k7 = rhs(x_new, y_new);
        for (std::size_t i = 0; i < N; ++i)
            err[i] = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);

        double en = detail::all_finite(y_new) && detail::all_finite(k7)
                        ? detail::error_norm<N>(err, y, y_new, opt)
                        : std::numeric_limits<double>::infinity();
        if (!std::isfinite(en)) en = 1e10;

        if (en <= 1.0) {
            State<N> dense;
            for (std::size_t i = 0; i < N; ++i)
                dense[i] = hs * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
            Step<N> step{x, x_new, y, y_new, k1, k7, dense};
            x = x_new;
            y = y_new;
            k1 = k7;
            ++res.accepted;
            double fac = en == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
            if (last_rejected) fac = std::min(fac, 1.0);
            last_rejected = false;
            h = std::min(h * fac, opt.max_step);
            if (on_step(static_cast<const Step<N>&>(step)) == Control::Stop) {
                res.stopped = true;
                break;
            }
        } else {
            ++res.rejected;
            last_rejected = true;
            h *= std::clamp(0.9 * std::pow(en, -0.2), 0.1, 1.0);
        }
    }
    res.x = x;
    res.y = y;
    return res;
}

// Emits interpolated states at the ascending abscissae `xs` lying inside each
// accepted step. `emit(x, y)` returns Control to stop early.
template <std::size_t N, class Emit>
class Sampler {
public:
    Sampler(const double* begin, const double* end, Emit emit) : next_(begin), end_(end), emit_(emit) {}

    Control operator()(const Step<N>& step)
    {
        while (next_ != end_ && *next_ <= step.x1) {
            const double xs = *next_++;
            const auto y = xs == step.x1 ? step.y1 : (xs == step.x0 ? step.y0 : step.interpolate(xs));
            if (emit_(xs, y) == Control::Stop) return Control::Stop;
        }
        return Control::Continue;
    }

private:
    const double* next_;
    const double* end_;
    Emit emit_;
};

}  // namespace shockdecay::ode
