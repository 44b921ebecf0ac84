#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dgdiss {

/// Invalid argument to a constructor or free function (bad mesh size,
/// exponent out of range, coefficient length mismatch, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A state violated its problem's pointwise admissibility constraint
/// (positivity, simplex membership) at a quadrature point.
class AdmissibilityError : public std::runtime_error {
public:
    AdmissibilityError(const std::string& what, double where, std::vector<double> values)
        : std::runtime_error(what), x(where), field_values(std::move(values)) {}

    double x = 0.0;                    ///< offending spatial coordinate
    std::vector<double> field_values;  ///< field values at that point
};

/// LU factorization hit a (numerically) zero pivot.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Newton iteration failed to reduce the residual below tolerance.
class NewtonDivergenceError : public std::runtime_error {
public:
    NewtonDivergenceError(const std::string& what, std::vector<double> residual_norms)
        : std::runtime_error(what), residual_history(std::move(residual_norms)) {}

    std::vector<double> residual_history;  ///< ||r||_2 per iteration, iterate 0 first
};

/// Malformed run-configuration text.
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line_number, const std::string& reason)
        : std::runtime_error("config line " + std::to_string(line_number) + ": " + reason),
          line(line_number) {}

    int line = 0;
};

/// Filesystem-level failure while reading or writing artifacts.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dgdiss
