#pragma once

#include <stdexcept>
#include <string>

namespace shockdecay {

// Argument outside the admissible range of an operation (U < 1, x < 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Post-shock state with non-positive sound speed.
class VacuumError : public DomainError {
public:
    using DomainError::DomainError;
};

// The first-order discontinuity has blown up: I(x) <= 0.
class BreakdownError : public std::runtime_error {
public:
    BreakdownError(const std::string& what, double x) : std::runtime_error(what), x_(x) {}
    double x() const noexcept { return x_; }

private:
    double x_;
};

// Adaptive integration could not meet its tolerances.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double last_good_x)
        : std::runtime_error(what), last_good_x_(last_good_x) {}
    double last_good_x() const noexcept { return last_good_x_; }

private:
    double last_good_x_;
};

// Shock fitting found no overtaking wavelet, or produced an inconsistent history.
class FittingError : public std::runtime_error {
public:
    FittingError(const std::string& what, double x) : std::runtime_error(what), x_(x) {}
    double x() const noexcept { return x_; }

private:
    double x_;
};

}  // namespace shockdecay
