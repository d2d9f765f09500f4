#include "subfn/subordinator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "subfn/errors.hpp"
#include "subfn/gauss.hpp"
#include "subfn/kernels.hpp"

namespace subfn {

using std::numbers::pi;

SubordinatorFamily SubordinatorFamily::drift_killing(double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0))
        throw DomainError("drift_killing: a, b must be >= 0");
    SubordinatorFamily f;
    f.kind = Kind::drift_killing;
    f.a = a;
    f.b = b;
    return f;
}

SubordinatorFamily SubordinatorFamily::stable(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("stable: alpha must lie in (0, 1)");
    SubordinatorFamily f;
    f.kind = Kind::stable;
    f.alpha = alpha;
    return f;
}

SubordinatorFamily SubordinatorFamily::killed_stable(double a, double alpha) {
    if (!(a >= 0.0)) throw DomainError("killed_stable: a must be >= 0");
    SubordinatorFamily f = stable(alpha);
    f.kind = Kind::killed_stable;
    f.a = a;
    return f;
}

LevyTriplet SubordinatorFamily::bernstein() const {
    switch (kind) {
        case Kind::drift_killing:
            return LevyTriplet{a, b, LevyMeasureSpec::zero()};
        case Kind::stable:
            return stable_triplet(alpha);
        case Kind::killed_stable: {
            LevyTriplet f = stable_triplet(alpha);
            f.a = a;
            return f;
        }
    }
    throw DomainError("SubordinatorFamily: unknown kind");
}

double default_contour_angle(double alpha) {
    // Midpoint of (pi/2, pi/(2 alpha)), capped at 3 pi / 4. Guarantees
    // cos(alpha * theta) > 0, so the contour integrand has no transient
    // growth; equals 3 pi / 4 for alpha <= 1/2.
    return std::min(0.75 * pi, pi * (alpha + 1.0) / (4.0 * alpha));
}

double stable_density_closed_form(double t, double s) {
    if (!(t > 0.0)) throw DomainError("stable_density_closed_form: t must be positive");
    if (!(s > 0.0)) throw DomainError("stable_density_closed_form: s must be positive");
    return t * std::exp(-t * t / (4.0 * s)) / (2.0 * std::sqrt(pi) * s * std::sqrt(s));
}

double stable_density_contour(double alpha, double t, double s,
                              const ContourConfig& cfg) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("stable_density_contour: alpha must lie in (0, 1)");
    if (!(t > 0.0) || !(s > 0.0))
        throw DomainError("stable_density_contour: t, s must be positive");
    if (cfg.panels < 2 || cfg.nodes < 2 || !(cfg.r_factor > 0.0))
        throw DomainError("stable_density_contour: bad contour config");

    const double theta = (cfg.theta == 0.0) ? default_contour_angle(alpha) : cfg.theta;
    if (!(theta > 0.5 * pi && theta < pi))
        throw DomainError("stable_density_contour: theta must lie strictly in (pi/2, pi)");

    const double ct = std::cos(theta), st = std::sin(theta);
    const double cat = std::cos(alpha * theta), sat = std::sin(alpha * theta);

    // Truncation: both the linear ray term and the r^alpha term reach 50
    // e-foldings inside R.
    const double R = cfg.r_factor *
                     std::max(50.0 / (s * -ct), std::pow(50.0 / t, 1.0 / alpha));

    // Panels graded toward r = 0, anchored at the decay scale of the
    // dominating exponential (which is s-dependent).
    const double r_scale = std::min(1.0 / (s * -ct), R);
    const double r_lo = r_scale * 1e-8;
    std::vector<double> edges = log_edges(r_lo, R, cfg.panels - 1);
    edges.insert(edges.begin(), 0.0);

    auto integrand = [&](double r) {
        const double ra = std::pow(r, alpha);
        const double x = s * r * ct - t * ra * cat;
        const double y = s * r * st - t * ra * sat;
        return std::exp(x) * std::sin(y + theta);
    };
    const double g = integrate_panels(edges, cfg.nodes, integrand) / pi;

    if (g < -1e-8)
        throw QuadratureError("stable_density_contour: negative density beyond tolerance");
    return g < 0.0 ? 0.0 : g;
}

double tail_cutoff(const SubordinatorFamily& family, double t, double eps_tail) {
    if (!(eps_tail > 0.0)) throw DomainError("tail_cutoff: eps_tail must be positive");
    if (family.kind == SubordinatorFamily::Kind::drift_killing)
        return family.b * t;
    // Asymptotic tail bound mu_t((S, inf)) ~ t S^{-alpha} / Gamma(1 - alpha).
    return std::pow(t / (eps_tail * std::tgamma(1.0 - family.alpha)),
                    1.0 / family.alpha);
}

namespace {

// One-panel estimate of the density mass below s.
double head_mass_estimate(const std::function<double(double)>& density, double s) {
    const GaussRule& rule = gauss_legendre(16);
    const double half = 0.5 * s;
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        acc += rule.weights[j] * density(half + half * rule.nodes[j]);
    return half * acc;
}

DiscreteMeasure discretize_stable(double alpha, double kill_factor, double t,
                                  double eps_tail, int n_atoms,
                                  const ContourConfig& cfg) {
    const bool closed_form = (alpha == 0.5);
    auto density = [&](double s) {
        return closed_form ? stable_density_closed_form(t, s)
                           : stable_density_contour(alpha, t, s, cfg);
    };

    // Tail cutoff with margin below eps_tail; head cutoff by scanning down
    // from the natural scale t^{1/alpha} until one panel estimates the
    // remaining head mass below eps_tail / 2.
    const double s_max =
        std::pow(t / (0.9 * eps_tail * std::tgamma(1.0 - alpha)), 1.0 / alpha);
    double s_min = std::min(std::pow(t, 1.0 / alpha), 0.25 * s_max);
    while (s_min > 1e-290 && head_mass_estimate(density, s_min) > 0.5 * eps_tail)
        s_min *= 0.5;

    const int gl_nodes = std::min(4, std::max(1, n_atoms));
    const int cells = std::max(1, n_atoms / gl_nodes);
    std::vector<double> abscissae, glw;
    panel_nodes(log_edges(s_min, s_max, cells), gl_nodes, abscissae, glw);

    // Weight evaluation is the hot loop (one contour integral per node).
    std::vector<double> w(abscissae.size());
    kernels::map_index(
        w.size(),
        [&](std::size_t i) { w[i] = std::max(0.0, glw[i] * density(abscissae[i])); },
        closed_form ? kernels::Exec::serial : kernels::default_exec());

    double total = 0.0, comp = 0.0;
    for (double wi : w) {
        const double y = wi - comp;
        const double tt = total + y;
        comp = (tt - total) - y;
        total = tt;
    }

    const double exact = kill_factor;
    if (total > exact) {
        if (total > exact * (1.0 + 1e-6))
            throw DiscretizationError("discretize: mass overshoots exp(-at) beyond 1e-6");
        const double scale = exact / total;
        for (double& wi : w) wi *= scale;
        total = exact;
    }
    if (total < exact * (1.0 - 2.0 * eps_tail))
        throw DiscretizationError("discretize: mass deficit exceeds 2*eps_tail");

    std::vector<Atom> atoms(abscissae.size());
    for (std::size_t i = 0; i < atoms.size(); ++i)
        atoms[i] = {abscissae[i], kill_factor == 1.0 ? w[i] : w[i]};
    return DiscreteMeasure(std::move(atoms));
}

}  // namespace

DiscreteMeasure discretize(const SubordinatorFamily& family, double t,
                           double eps_tail, int n_atoms, const ContourConfig& cfg) {
    if (!(t >= 0.0)) throw DomainError("discretize: t must be >= 0");
    if (!(eps_tail > 0.0 && eps_tail < 1e-2))
        throw DomainError("discretize: eps_tail must lie in (0, 1e-2)");
    if (n_atoms < 1) throw DomainError("discretize: n_atoms must be positive");

    if (t == 0.0) return DiscreteMeasure::dirac(0.0, 1.0);  // mu_0 = delta_0

    switch (family.kind) {
        case SubordinatorFamily::Kind::drift_killing:
            return DiscreteMeasure::dirac(family.b * t, std::exp(-family.a * t));
        case SubordinatorFamily::Kind::stable:
            return discretize_stable(family.alpha, 1.0, t, eps_tail, n_atoms, cfg);
        case SubordinatorFamily::Kind::killed_stable: {
            // mu_t = e^{-at} nu_t: same grid as the unkilled family.
            DiscreteMeasure nu =
                discretize_stable(family.alpha, 1.0, t, eps_tail, n_atoms, cfg);
            return nu.scaled(std::exp(-family.a * t));
        }
    }
    throw DomainError("discretize: unknown family kind");
}

double mass(const SubordinatorFamily& family, double t) {
    if (!(t >= 0.0)) throw DomainError("mass: t must be >= 0");
    return std::exp(-t * family.a);  // f(0+) = a for every supported family
}

}  // namespace subfn
