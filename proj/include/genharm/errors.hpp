#pragma once

#include <stdexcept>
#include <string>

namespace genharm {

// Operands living in different polynomial rings.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class AxisOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Parity requested for the zero polynomial.
class UndefinedParity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A point or coordinate tuple outside the region where a map is defined.
class OutOfDomain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A point within the boundary threshold of a coordinate plane.
class DegeneratePoint : public OutOfDomain {
public:
    using OutOfDomain::OutOfDomain;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double residual, int iterations)
        : std::runtime_error(what), residual_(residual), iterations_(iterations) {}

    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double residual_;
    int iterations_;
};

// Zeros that are not consistent with an eigen-solution of the Fuchsian equation.
class ResidualTooLarge : public std::runtime_error {
public:
    ResidualTooLarge(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// The fundamental-solution exponent vanishes; the Niven series is not defined.
class GammaZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DegreeTooHigh : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace genharm
