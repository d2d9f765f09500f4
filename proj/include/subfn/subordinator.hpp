#pragma once

#include "subfn/bernstein.hpp"
#include "subfn/measure.hpp"

namespace subfn {

/// Convolution semigroup (mu_t) with a known density or closed form:
///   drift_killing: f(lambda) = a + b*lambda, mu_t = e^{-at} delta_{bt}
///   stable:        f(lambda) = lambda^alpha
///   killed_stable: f(lambda) = a + lambda^alpha, mu_t = e^{-at} nu_t
struct SubordinatorFamily {
    enum class Kind { drift_killing, stable, killed_stable };

    Kind kind = Kind::drift_killing;
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;

    static SubordinatorFamily drift_killing(double a, double b);
    static SubordinatorFamily stable(double alpha);
    static SubordinatorFamily killed_stable(double a, double alpha);

    /// The associated Bernstein function.
    [[nodiscard]] LevyTriplet bernstein() const;
};

/// Contour quadrature parameters for the stable density.
/// theta = 0 requests the alpha-adaptive default angle; an explicit theta
/// must lie strictly inside (pi/2, pi).
struct ContourConfig {
    double theta = 0.0;
    double r_factor = 1.0;
    int panels = 64;
    int nodes = 16;
};

/// Default contour angle min(3*pi/4, pi*(alpha+1)/(4*alpha)): keeps
/// cos(alpha*theta) > 0 so the integrand decays monotonically in r.
double default_contour_angle(double alpha);

/// Density of mu_t for alpha = 1/2: t * exp(-t^2/(4s)) / (2 sqrt(pi) s^{3/2}).
double stable_density_closed_form(double t, double s);

/// Density of mu_t for any alpha in (0,1) via the folded contour integral
/// (1/pi) * int_0^R Im[exp(s r e^{i theta} - t r^alpha e^{i alpha theta}) e^{i theta}] dr.
/// Negative results above -1e-8 clamp to zero; below that QuadratureError.
double stable_density_contour(double alpha, double t, double s,
                              const ContourConfig& cfg = {});

/// Truncation radius S_max with estimated tail mass <= eps_tail
/// (asymptotic bound t * S^{-alpha} / Gamma(1 - alpha) for stable kinds).
double tail_cutoff(const SubordinatorFamily& family, double t, double eps_tail);

/// Discretize mu_t as a sub-probability DiscreteMeasure with ~n_atoms atoms.
/// Guarantees mass in [e^{-at}(1 - 2 eps_tail), e^{-at}(1 + 1e-6)]
/// (else DiscretizationError); never rescales mass upward.
DiscreteMeasure discretize(const SubordinatorFamily& family, double t,
                           double eps_tail, int n_atoms,
                           const ContourConfig& cfg = {});

/// Exact total mass exp(-t * f(0+)).
double mass(const SubordinatorFamily& family, double t);

}  // namespace subfn
