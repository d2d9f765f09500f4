#include "subfn/gauss.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "subfn/errors.hpp"

namespace subfn {

namespace {

// Legendre P_n and P_n' at x by upward recurrence.
void legendre(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    if (n == 0) { p = 1.0; dp = 0.0; return; }
    for (int k = 1; k < n; ++k) {
        const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

GaussRule build_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess, then Newton.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            legendre(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre(n, x, p, dp);
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1 || n > 128) throw DomainError("gauss_legendre: order out of [1,128]");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

std::vector<double> uniform_edges(double a, double b, int panels) {
    if (panels < 1) throw DomainError("uniform_edges: panels >= 1 required");
    std::vector<double> e(panels + 1);
    for (int k = 0; k <= panels; ++k)
        e[k] = a + (b - a) * static_cast<double>(k) / panels;
    e.back() = b;
    return e;
}

std::vector<double> log_edges(double a, double b, int panels) {
    if (!(a > 0.0) || !(b > a)) throw DomainError("log_edges: need 0 < a < b");
    if (panels < 1) throw DomainError("log_edges: panels >= 1 required");
    const double la = std::log(a), lb = std::log(b);
    std::vector<double> e(panels + 1);
    for (int k = 0; k <= panels; ++k)
        e[k] = std::exp(la + (lb - la) * static_cast<double>(k) / panels);
    e.front() = a;
    e.back() = b;
    return e;
}

double integrate_panels(const std::vector<double>& edges, int nodes_per_panel,
                        const std::function<double(double)>& f) {
    const GaussRule& rule = gauss_legendre(nodes_per_panel);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double mid = 0.5 * (edges[k] + edges[k + 1]);
        const double half = 0.5 * (edges[k + 1] - edges[k]);
        double panel = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
            panel += rule.weights[j] * f(mid + half * rule.nodes[j]);
        total += half * panel;
    }
    return total;
}

void panel_nodes(const std::vector<double>& edges, int nodes_per_panel,
                 std::vector<double>& abscissae, std::vector<double>& weights) {
    const GaussRule& rule = gauss_legendre(nodes_per_panel);
    abscissae.clear();
    weights.clear();
    abscissae.reserve((edges.size() - 1) * rule.nodes.size());
    weights.reserve(abscissae.capacity());
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double mid = 0.5 * (edges[k] + edges[k + 1]);
        const double half = 0.5 * (edges[k + 1] - edges[k]);
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            abscissae.push_back(mid + half * rule.nodes[j]);
            weights.push_back(half * rule.weights[j]);
        }
    }
}

}  // namespace subfn
