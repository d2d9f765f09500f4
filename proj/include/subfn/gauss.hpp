#pragma once

#include <functional>
#include <vector>

namespace subfn {

/// Gauss-Legendre rule on [-1, 1]. Nodes ascending.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached Gauss-Legendre rule, 1 <= n <= 128.
const GaussRule& gauss_legendre(int n);

/// Panel edges: `panels`+1 values, ascending.
std::vector<double> uniform_edges(double a, double b, int panels);

/// Logarithmically spaced edges; requires 0 < a < b.
std::vector<double> log_edges(double a, double b, int panels);

/// Composite Gauss-Legendre over consecutive panels [edges[k], edges[k+1]].
/// Terms are accumulated in ascending panel order.
double integrate_panels(const std::vector<double>& edges, int nodes_per_panel,
                        const std::function<double(double)>& f);

/// Flattened composite rule: (abscissa, weight) pairs in ascending order.
void panel_nodes(const std::vector<double>& edges, int nodes_per_panel,
                 std::vector<double>& abscissae, std::vector<double>& weights);

}  // namespace subfn
