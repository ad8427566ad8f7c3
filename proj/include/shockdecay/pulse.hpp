#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

namespace shockdecay {

// Boundary velocity v(tau) = u(1, tau) on [0, tau0], with v(tau0) = 0.
// Immutable once built; the cumulative integral table is computed eagerly.
class BoundaryPulse {
public:
    // v0 sin(pi tau / tau0)
    static BoundaryPulse half_sine(double amplitude, double tau0);
    // m tau (1 - tau/tau0); initial slope m
    static BoundaryPulse ramp_down(double slope, double tau0);
    // Monotone cubic (PCHIP) through at least 4 samples. tau must start at 0, increase
    // strictly, and v must vanish at the last node.
    static BoundaryPulse tabulated(std::vector<double> tau, std::vector<double> v);
    // Two-column CSV with header "tau,v".
    static BoundaryPulse from_csv(std::istream& is);

    double operator()(double tau) const;  // zero outside [0, tau0]
    double derivative(double tau) const;
    double integral(double tau) const;    // integral of v from 0 to min(tau, tau0)

    double tau0() const noexcept { return tau0_; }
    double b() const noexcept { return b_; }  // integral over the whole pulse
    double vdot0() const noexcept { return vdot0_; }
    double max_value() const noexcept { return vmax_; }

private:
    using Fn = std::function<double(double)>;
    BoundaryPulse(Fn v, Fn dv, double tau0);

    Fn v_, dv_;
    double tau0_ = 0.0;
    double b_ = 0.0;
    double vdot0_ = 0.0;
    double vmax_ = 0.0;
    double dtau_ = 0.0;
    std::vector<double> cumulative_;  // integral up to each uniform node
};

}  // namespace shockdecay
