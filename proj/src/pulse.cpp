#include "shockdecay/pulse.hpp"

#include "shockdecay/csv.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shockdecay {

namespace {

constexpr std::size_t kCacheIntervals = 1024;
constexpr double kQuadTol = 1e-12;

// Absolute tolerance kQuadTol. A single 15-point rule is normally enough on the
// short cache intervals; refine only when its error estimate says otherwise.
double gk_integrate(const std::function<double(double)>& f, double a, double b)
{
    if (b <= a) return 0.0;
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err = 0.0;
    const double r = GK::integrate(f, a, b, 0, 0.0, &err);
    if (err <= kQuadTol) return r;
    const double rel = std::max(kQuadTol / std::max(std::abs(r), kQuadTol), 1e-14);
    return GK::integrate(f, a, b, 12, rel, &err);
}

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be finite and > 0");
}

}  // namespace

BoundaryPulse::BoundaryPulse(Fn v, Fn dv, double tau0) : v_(std::move(v)), dv_(std::move(dv)), tau0_(tau0)
{
    require_positive(tau0_, "tau0");
    dtau_ = tau0_ / kCacheIntervals;
    cumulative_.resize(kCacheIntervals + 1);
    cumulative_[0] = 0.0;
    for (std::size_t i = 0; i < kCacheIntervals; ++i) {
        const double a = dtau_ * i;
        const double bnd = i + 1 == kCacheIntervals ? tau0_ : dtau_ * (i + 1);
        cumulative_[i + 1] = cumulative_[i] + gk_integrate(v_, a, bnd);
        vmax_ = std::max(vmax_, std::abs(v_(a)));
    }
    b_ = cumulative_.back();
    vdot0_ = dv_(0.0);

    const double vend = v_(tau0_);
    if (std::abs(vend) > 1e-12 * std::max(1.0, vmax_))
        throw std::invalid_argument("pulse must vanish at tau0 (v(tau0) = " + std::to_string(vend) + ")");
}

BoundaryPulse BoundaryPulse::half_sine(double amplitude, double tau0)
{
    require_positive(tau0, "tau0");
    if (!std::isfinite(amplitude) || amplitude < 0.0)
        throw std::invalid_argument("amplitude must be finite and >= 0");
    const double w = boost::math::constants::pi<double>() / tau0;
    return BoundaryPulse(
        [=](double t) { return t <= 0.0 || t >= tau0 ? 0.0 : amplitude * std::sin(w * t); },
        [=](double t) { return t < 0.0 || t > tau0 ? 0.0 : amplitude * w * std::cos(w * t); }, tau0);
}

BoundaryPulse BoundaryPulse::ramp_down(double slope, double tau0)
{
    require_positive(tau0, "tau0");
    if (!std::isfinite(slope) || slope < 0.0)
        throw std::invalid_argument("slope must be finite and >= 0");
    return BoundaryPulse(
        [=](double t) { return t <= 0.0 || t >= tau0 ? 0.0 : slope * t * (1.0 - t / tau0); },
        [=](double t) { return t < 0.0 || t > tau0 ? 0.0 : slope * (1.0 - 2.0 * t / tau0); }, tau0);
}

BoundaryPulse BoundaryPulse::tabulated(std::vector<double> tau, std::vector<double> v)
{
    if (tau.size() != v.size() || tau.size() < 4)
        throw std::invalid_argument("tabulated pulse needs at least 4 (tau, v) pairs of equal length");
    if (tau.front() != 0.0)
        throw std::invalid_argument("tabulated pulse must start at tau = 0");
    for (std::size_t i = 1; i < tau.size(); ++i)
        if (!(tau[i] > tau[i - 1]))
            throw std::invalid_argument("tabulated pulse: tau must increase strictly (row " +
                                        std::to_string(i + 1) + ")");
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument("tabulated pulse: non-finite v");
    const double tau0 = tau.back();
    using Pchip = boost::math::interpolators::pchip<std::vector<double>>;
    auto interp = std::make_shared<Pchip>(std::move(tau), std::move(v));
    return BoundaryPulse(
        [interp, tau0](double t) { return t < 0.0 || t > tau0 ? 0.0 : (*interp)(t); },
        [interp, tau0](double t) { return t < 0.0 || t > tau0 ? 0.0 : interp->prime(t); }, tau0);
}

BoundaryPulse BoundaryPulse::from_csv(std::istream& is)
{
    const auto rows = csv::read_numeric(is, "tau,v");
    std::vector<double> tau, v;
    for (const auto& r : rows) {
        tau.push_back(r[0]);
        v.push_back(r[1]);
    }
    return tabulated(std::move(tau), std::move(v));
}

double BoundaryPulse::operator()(double tau) const
{
    return v_(tau);
}

double BoundaryPulse::derivative(double tau) const
{
    return dv_(tau);
}

double BoundaryPulse::integral(double tau) const
{
    if (tau <= 0.0) return 0.0;
    if (tau >= tau0_) return b_;
    const auto i = std::min<std::size_t>(static_cast<std::size_t>(tau / dtau_), kCacheIntervals - 1);
    return cumulative_[i] + gk_integrate(v_, dtau_ * i, tau);
}

}  // namespace shockdecay
