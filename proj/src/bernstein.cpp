#include "subfn/bernstein.hpp"

#include <cmath>

#include "subfn/errors.hpp"
#include "subfn/gauss.hpp"

namespace subfn {

LevyMeasureSpec LevyMeasureSpec::zero() { return {}; }

LevyMeasureSpec LevyMeasureSpec::power(double c, double exponent) {
    if (!(c > 0.0)) throw DomainError("LevyMeasureSpec::power: c must be positive");
    if (!(exponent > -2.0 && exponent < -1.0))
        throw DomainError("LevyMeasureSpec::power: exponent must lie in (-2, -1)");
    LevyMeasureSpec m;
    m.kind = Kind::power_density;
    m.c = c;
    m.exponent = exponent;
    return m;
}

LevyMeasureSpec LevyMeasureSpec::atomic(DiscreteMeasure atoms) {
    LevyMeasureSpec m;
    m.kind = Kind::atomic;
    m.atoms = std::move(atoms);
    return m;
}

LevyTriplet stable_triplet(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("stable_triplet: alpha must lie in (0, 1)");
    // mu(dt) = (-1/Gamma(-alpha)) t^{-1-alpha} dt; Gamma(-alpha) < 0 on (0,1).
    const double c = -1.0 / std::tgamma(-alpha);
    return LevyTriplet{0.0, 0.0, LevyMeasureSpec::power(c, -1.0 - alpha)};
}

namespace {

// int (1 - e^{-lambda t}) c t^p dt over [lo, hi] by composite panels.
double jump_integral(double c, double p, double lambda, double lo, double hi,
                     int panels, int nodes, Grading grading) {
    if (!(hi > lo)) return 0.0;
    auto f = [&](double t) { return -std::expm1(-lambda * t) * c * std::pow(t, p); };
    const auto edges = (grading == Grading::logarithmic) ? log_edges(lo, hi, panels)
                                                         : uniform_edges(lo, hi, panels);
    return integrate_panels(edges, nodes, f);
}

double power_jump_part(double c, double p, double lambda, int panels, int nodes,
                       Grading grading) {
    // Head cutoff: int_0^tm lambda t * c t^p dt <= 1e-9.
    const double head_tol = 1e-9;
    const double tail_tol = 1e-9;
    const double t_min = std::pow(head_tol * (p + 2.0) / (lambda * c), 1.0 / (p + 2.0));
    // Tail cutoff: int_T^inf c t^p dt = c T^{p+1} / |p+1| <= 1e-9.
    const double t_max = std::pow(c / ((-p - 1.0) * tail_tol), 1.0 / (-p - 1.0));
    if (!(t_max > t_min)) return 0.0;

    // Split at t = 1 where both sides have natural bounds.
    double q = 0.0;
    if (t_min < 1.0 && t_max > 1.0) {
        q += jump_integral(c, p, lambda, t_min, 1.0, panels, nodes, grading);
        q += jump_integral(c, p, lambda, 1.0, t_max, panels, nodes, grading);
    } else {
        q += jump_integral(c, p, lambda, t_min, t_max, 2 * panels, nodes, grading);
    }
    return q;
}

}  // namespace

double eval(const LevyTriplet& f, double lambda, const QuadratureConfig& cfg) {
    if (!(lambda > 0.0)) throw DomainError("eval: lambda must be positive");
    cfg.validate();

    double q = 0.0;
    switch (f.levy_measure.kind) {
        case LevyMeasureSpec::Kind::zero:
            break;
        case LevyMeasureSpec::Kind::atomic: {
            double s = 0.0;
            for (const Atom& a : f.levy_measure.atoms.atoms())
                s += a.weight * -std::expm1(-lambda * a.location);
            q = s;
            break;
        }
        case LevyMeasureSpec::Kind::power_density: {
            const double c = f.levy_measure.c;
            const double p = f.levy_measure.exponent;
            const double q1 = power_jump_part(c, p, lambda, cfg.panels,
                                              cfg.nodes_per_panel, cfg.grading);
            const double q2 = power_jump_part(c, p, lambda, 2 * cfg.panels,
                                              cfg.nodes_per_panel, cfg.grading);
            if (std::abs(q2 - q1) > 1e-6 * std::max(std::abs(q2), 1e-300))
                throw ConvergenceError("eval: jump integral did not converge under refinement");
            q = q2;
            break;
        }
    }
    return f.a + f.b * lambda + q;
}

double eval_limit_at_zero(const LevyTriplet& f) { return f.a; }

bool check_bernstein_signs_fn(const std::function<double(double)>& f, int k_max,
                              std::span<const double> grid) {
    if (k_max < 1 || k_max > 4)
        throw DomainError("check_bernstein_signs: k_max must lie in [1, 4]");
    if (grid.size() < static_cast<std::size_t>(k_max) + 1)
        throw DomainError("check_bernstein_signs: grid too small for k_max");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw DomainError("check_bernstein_signs: grid must be strictly increasing");

    std::vector<double> dd(grid.begin(), grid.end());
    for (std::size_t i = 0; i < dd.size(); ++i) dd[i] = f(grid[i]);

    for (int k = 1; k <= k_max; ++k) {
        // In-place update: dd[i] becomes the k-th divided difference on
        // grid[i..i+k].
        const std::size_t m = dd.size() - static_cast<std::size_t>(k);
        for (std::size_t i = 0; i < m; ++i)
            dd[i] = (dd[i + 1] - dd[i]) / (grid[i + k] - grid[i]);
        dd.resize(m);

        double scale = 0.0;
        for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::abs(dd[i]));
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k-1}
        for (std::size_t i = 0; i < m; ++i)
            if (sign * dd[i] < -1e-8 * scale) return false;
    }
    return true;
}

bool check_bernstein_signs(const LevyTriplet& f, int k_max,
                           std::span<const double> grid,
                           const QuadratureConfig& cfg) {
    return check_bernstein_signs_fn(
        [&](double lambda) { return eval(f, lambda, cfg); }, k_max, grid);
}

}  // namespace subfn
