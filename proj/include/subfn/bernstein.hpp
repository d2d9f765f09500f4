#pragma once

#include <functional>
#include <span>

#include "subfn/measure.hpp"

namespace subfn {

/// Levy (jump) measure of a Bernstein function.
struct LevyMeasureSpec {
    enum class Kind { zero, power_density, atomic };

    Kind kind = Kind::zero;
    double c = 0.0;         // power density c * t^exponent
    double exponent = 0.0;  // in (-2, -1) so that int_0^1 t * c t^exponent dt converges
    DiscreteMeasure atoms;

    static LevyMeasureSpec zero();
    static LevyMeasureSpec power(double c, double exponent);
    static LevyMeasureSpec atomic(DiscreteMeasure m);
};

/// Bernstein function f(lambda) = a + b*lambda + int (1 - e^{-lambda t}) mu(dt).
struct LevyTriplet {
    double a = 0.0;  // killing rate
    double b = 0.0;  // drift
    LevyMeasureSpec levy_measure;
};

/// Triplet (0, 0, c * t^{-1-alpha} dt) with c = -1/Gamma(-alpha),
/// representing f(lambda) = lambda^alpha.
LevyTriplet stable_triplet(double alpha);

/// Evaluate f at lambda > 0 by graded quadrature of the jump integral.
/// Throws ConvergenceError if doubling the panel count moves the result by
/// more than 1e-6 relative.
double eval(const LevyTriplet& f, double lambda,
            const QuadratureConfig& cfg = {});

/// f(0+) = a.
double eval_limit_at_zero(const LevyTriplet& f);

/// Divided-difference test of (-1)^{k-1} f^{(k)} >= 0 for k = 1..k_max on a
/// strictly increasing grid. Requires k_max <= 4.
bool check_bernstein_signs(const LevyTriplet& f, int k_max,
                           std::span<const double> grid,
                           const QuadratureConfig& cfg = {});

/// Same test on an arbitrary evaluator (used for synthetic counterexamples).
bool check_bernstein_signs_fn(const std::function<double(double)>& f, int k_max,
                              std::span<const double> grid);

}  // namespace subfn
