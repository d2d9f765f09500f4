#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "subfn/state.hpp"

namespace subfn {

struct Atom {
    double location;
    double weight;
};

/// Finitely supported nonnegative measure on [0, inf). Locations strictly
/// increasing, weights >= 0. The empty measure is the zero measure.
class DiscreteMeasure {
  public:
    DiscreteMeasure() = default;
    explicit DiscreteMeasure(std::vector<Atom> atoms);

    static DiscreteMeasure dirac(double location, double weight = 1.0);

    [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }
    [[nodiscard]] std::size_t size() const { return atoms_.size(); }
    [[nodiscard]] bool empty() const { return atoms_.empty(); }

    /// Total mass, compensated ascending sum.
    [[nodiscard]] double mass() const;

    /// Mass strictly above `s`.
    [[nodiscard]] double mass_above(double s) const;

    /// New measure with every weight multiplied by c >= 0.
    [[nodiscard]] DiscreteMeasure scaled(double c) const;

  private:
    std::vector<Atom> atoms_;
};

enum class Grading { uniform, logarithmic };

struct QuadratureConfig {
    int panels = 48;
    int nodes_per_panel = 16;
    Grading grading = Grading::logarithmic;

    void validate() const;  // panels >= 1, nodes_per_panel >= 2
};

/// Sum_i weight_i * values[i], accumulated in ascending-location order.
/// Compensated summation engages beyond 1000 atoms (fixed-chunk scheme, so
/// the result does not depend on the thread count).
StateVector integrate_weighted(std::span<const StateVector> values,
                               const DiscreteMeasure& measure);

/// All pairwise location sums, weights multiplied, re-binned onto a grid of
/// spacing bin_width. Mass is exactly multiplicative.
DiscreteMeasure convolve(const DiscreteMeasure& m1, const DiscreteMeasure& m2,
                         double bin_width);

/// Sum_i weight_i * exp(-lambda * location_i); the total mass at lambda = 0.
double laplace_transform(const DiscreteMeasure& measure, double lambda);

}  // namespace subfn
