#pragma once

#include <functional>
#include <span>
#include <vector>

#include "subfn/bernstein.hpp"
#include "subfn/semigroup.hpp"
#include "subfn/subordinator.hpp"

namespace subfn {

/// Discretization choices for the subordination integral.
struct SubordinationPlan {
    SubordinatorFamily family;
    double eps_tail = 1e-9;
    int n_atoms = 2000;
    ContourConfig contour;
};

/// Convergence record of a first-order difference quotient.
struct GeneratorReport {
    std::vector<double> h_values;  // strictly decreasing
    std::vector<double> errors;
    double estimated_order = 0.0;  // least-squares slope of log err vs log h
};

struct PhillipsReport {
    double lhs_rhs_error = 0.0;
    double order = 0.0;
};

/// S_t x = int T_s x mu_t(ds): discretizes mu_t per the plan, applies T at
/// every atom, combines with integrate_weighted. t = 0 returns x exactly.
StateVector subordinate_apply(const SemigroupSpec& T,
                              const SubordinationPlan& plan, double t,
                              const StateVector& x);

/// f(A) x = a x + b A x + int (x - T_t x) mu(dt), head/tail cutoffs chosen so
/// each neglected piece stays below 1e-8. Throws ConvergenceError if panel
/// doubling moves the result by more than 1e-5 relative.
StateVector f_of_A_apply(const SemigroupSpec& T, const LevyTriplet& f,
                         const StateVector& x, const QuadratureConfig& cfg = {});

/// (lambda + A)^{-1} x = int_0^inf e^{-lambda t} T_t x dt, truncated at 40/lambda.
StateVector resolvent_apply(const SemigroupSpec& T, double lambda,
                            const StateVector& x, const QuadratureConfig& cfg = {});

/// Resolvent of an arbitrary semigroup given by its application map.
StateVector resolvent_apply(const std::function<StateVector(double, const StateVector&)>& apply_fn,
                            double lambda, const StateVector& x,
                            const QuadratureConfig& cfg = {});

/// Difference-quotient diagnostics: errors[i] = ||(x - apply_fn(h_i, x))/h_i - reference||.
GeneratorReport generator_fd(const std::function<StateVector(double, const StateVector&)>& apply_fn,
                             const StateVector& x, std::span<const double> h_values,
                             const StateVector& reference);

/// Checks A^f|_{D(A)} = f(A) for f(lambda) = lambda^alpha: compares
/// f_of_A_apply against Richardson-extrapolated difference quotients of the
/// subordinated semigroup at h in {0.1, 0.05, 0.025, 0.0125}.
PhillipsReport phillips_check(const SemigroupSpec& T, double alpha,
                              const StateVector& x,
                              const SubordinationPlan* plan = nullptr);

/// || S^{killed_stable(a,alpha)}_t x - e^{-at} S^{stable(alpha)}_t x ||.
double rescaling_check(const SemigroupSpec& T, double a, double alpha, double t,
                       const StateVector& x, const SubordinationPlan* plan = nullptr);

/// || T_s S_t x - S_t T_s x ||.
double commutation_check(const SemigroupSpec& T, const SubordinationPlan& plan,
                         double s, double t, const StateVector& x);

}  // namespace subfn
