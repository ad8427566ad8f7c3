#include "shockdecay/ccw.hpp"

#include "shockdecay/csv.hpp"
#include "shockdecay/errors.hpp"
#include "shockdecay/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace shockdecay {

namespace {
constexpr double kFloor = 1e-10;  // U - 1 at which the shock counts as vanished
}

CcwVariant parse_ccw_variant(std::string_view name)
{
    if (name == "classic") return CcwVariant::Classic;
    if (name == "generalized") return CcwVariant::Generalized;
    throw std::invalid_argument("unknown variant '" + std::string(name) + "' (classic|generalized)");
}

std::string_view ccw_variant_name(CcwVariant v) noexcept
{
    return v == CcwVariant::Classic ? "classic" : "generalized";
}

double g_classic(double mach, const GasParams& gas)
{
    const auto [mu, nu] = mu_nu(mach, gas);
    const double u2 = mach * mach;
    return (1.0 + 2.0 * std::sqrt(mu / nu) + 1.0 / u2) * (1.0 + (u2 - 1.0) / std::sqrt(mu * nu));
}

double g_generalized(double mach, const GasParams& gas)
{
    const auto [mu, nu] = mu_nu(mach, gas);
    const double u2 = mach * mach;
    return (gas.gamma() + 1.0) * (2.0 * u2 / nu + (u2 + 1.0) / mu);
}

std::vector<CcwSample> integrate_ccw(double mach0, const GasParams& gas, Geometry geom, double x_end,
                                     CcwVariant variant, const CcwOptions& opt)
{
    if (!(mach0 > 1.0) || !std::isfinite(mach0))
        throw DomainError("initial Mach number must be > 1");
    if (!(x_end > 1.0) || !std::isfinite(x_end))
        throw std::invalid_argument("x_end must be finite and > 1");
    if (!(opt.rtol > 0.0 && opt.rtol < 1.0))
        throw std::invalid_argument("rtol must lie in (0, 1)");

    const double j = symmetry_index(geom);
    auto f = [&](double mach) {
        return variant == CcwVariant::Classic ? g_classic(mach, gas) : g_generalized(mach, gas);
    };
    // Work with w = U - 1 so that relative accuracy is kept as the shock weakens.
    auto rhs = [&](double x, const ode::State<1>& y) -> ode::State<1> {
        const double w = std::max(y[0], 0.0);
        const double mach = 1.0 + w;
        return {-(j / x) * w * (w + 2.0) / (mach * f(mach))};
    };

    std::vector<double> grid;
    const std::size_t n = std::max<std::size_t>(opt.log_samples, 2);
    const double lend = std::log(x_end);
    for (std::size_t i = 0; i < n; ++i)
        grid.push_back(std::exp(lend * static_cast<double>(i) / static_cast<double>(n - 1)));
    grid.front() = 1.0;
    grid.back() = x_end;
    for (double x : opt.sample_points)
        if (x >= 1.0 && x <= x_end) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<CcwSample> out;
    auto push = [&](double x, double w) {
        const double mach = 1.0 + w;
        out.push_back({x, mach, jumps_from_mach(mach, gas).p_jump});
    };
    push(1.0, mach0 - 1.0);

    std::size_t next = 1;
    auto on_step = [&](const ode::Step<1>& st) {
        double x_stop = st.x1;
        const bool vanished = st.y1[0] <= kFloor;
        if (vanished) {
            double lo = st.x0, hi = st.x1;
            for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                (st.interpolate(mid)[0] > kFloor ? lo : hi) = mid;
            }
            x_stop = hi;
        }
        while (next < grid.size() && grid[next] <= x_stop) {
            const double xs = grid[next++];
            push(xs, xs == st.x1 ? st.y1[0] : st.interpolate(xs)[0]);
        }
        if (vanished) {
            if (out.back().x < x_stop) push(x_stop, kFloor);
            return ode::Control::Stop;
        }
        return ode::Control::Continue;
    };

    ode::Options o;
    o.rtol = opt.rtol;
    o.atol = kFloor * 1e-4;
    ode::integrate<1>(rhs, 1.0, ode::State<1>{mach0 - 1.0}, x_end, o, on_step);
    return out;
}

namespace {
constexpr const char* kCcwHeader = "x,U,p_jump";
}

void write_csv(std::ostream& os, const std::vector<CcwSample>& samples)
{
    csv::write_header(os, kCcwHeader);
    for (const auto& s : samples) {
        const double row[] = {s.x, s.mach, s.p_jump};
        csv::write_row(os, row);
    }
}

std::vector<CcwSample> read_ccw_csv(std::istream& is)
{
    std::vector<CcwSample> out;
    for (const auto& r : csv::read_numeric(is, kCcwHeader)) out.push_back({r[0], r[1], r[2]});
    return out;
}

}  // namespace shockdecay
