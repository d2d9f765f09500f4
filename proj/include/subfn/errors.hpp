#pragma once

#include <stdexcept>
#include <string>

namespace subfn {

/// Paired inputs disagree in length (e.g. values vs. measure atoms).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// State shapes are incompatible (finite vs. grid, mismatched grids, ...).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of the operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Quadrature refinement did not settle within the stated tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Discretized measure violates its mass bracket.
struct DiscretizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Contour quadrature produced an inadmissible (strongly negative) density.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace subfn
