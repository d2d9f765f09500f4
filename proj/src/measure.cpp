#include "subfn/measure.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "subfn/errors.hpp"
#include "subfn/kernels.hpp"

namespace subfn {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const Atom& a = atoms_[i];
        if (!std::isfinite(a.location) || !std::isfinite(a.weight))
            throw DomainError("DiscreteMeasure: non-finite atom");
        if (a.location < 0.0) throw DomainError("DiscreteMeasure: negative location");
        if (a.weight < 0.0) throw DomainError("DiscreteMeasure: negative weight");
        if (i > 0 && !(atoms_[i - 1].location < a.location))
            throw DomainError("DiscreteMeasure: locations must be strictly increasing");
    }
}

DiscreteMeasure DiscreteMeasure::dirac(double location, double weight) {
    return DiscreteMeasure({{location, weight}});
}

double DiscreteMeasure::mass() const {
    double s = 0.0, comp = 0.0;
    for (const Atom& a : atoms_) {
        const double y = a.weight - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

double DiscreteMeasure::mass_above(double s) const {
    double m = 0.0, comp = 0.0;
    for (auto it = atoms_.rbegin(); it != atoms_.rend() && it->location > s; ++it) {
        const double y = it->weight - comp;
        const double t = m + y;
        comp = (t - m) - y;
        m = t;
    }
    return m;
}

DiscreteMeasure DiscreteMeasure::scaled(double c) const {
    if (!(c >= 0.0)) throw DomainError("DiscreteMeasure::scaled: factor must be >= 0");
    std::vector<Atom> out(atoms_);
    for (Atom& a : out) a.weight *= c;
    return DiscreteMeasure(std::move(out));
}

void QuadratureConfig::validate() const {
    if (panels < 1) throw DomainError("QuadratureConfig: panels >= 1 required");
    if (nodes_per_panel < 2) throw DomainError("QuadratureConfig: nodes_per_panel >= 2 required");
}

StateVector integrate_weighted(std::span<const StateVector> values,
                               const DiscreteMeasure& measure) {
    if (values.size() != measure.size())
        throw DimensionError("integrate_weighted: values/atoms length mismatch");
    if (values.empty()) return StateVector::finite({});
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!values[0].same_shape(values[i]))
            throw ShapeError("integrate_weighted: values must share one shape");

    std::vector<double> w(measure.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = measure.atoms()[i].weight;

    StateVector acc = values[0].zeros_like();
    kernels::weighted_sum(
        w, [&](std::size_t i) { return values[i].data(); }, acc.data(),
        kernels::default_exec());
    return acc;
}

DiscreteMeasure convolve(const DiscreteMeasure& m1, const DiscreteMeasure& m2,
                         double bin_width) {
    if (!(bin_width > 0.0)) throw DomainError("convolve: bin_width must be positive");
    if (m1.empty() || m2.empty()) return DiscreteMeasure();

    // Sparse re-binning: bin index -> accumulated weight. Iteration order of
    // the pairwise loop is fixed, so per-bin sums are deterministic.
    std::unordered_map<long long, double> bins;
    bins.reserve(m1.size() * std::min<std::size_t>(m2.size(), 64));
    for (const Atom& a : m1.atoms()) {
        for (const Atom& b : m2.atoms()) {
            const double loc = a.location + b.location;
            const long long idx = std::llround(loc / bin_width);
            bins[idx] += a.weight * b.weight;
        }
    }

    std::vector<Atom> atoms;
    atoms.reserve(bins.size());
    for (const auto& [idx, w] : bins)
        atoms.push_back({static_cast<double>(idx) * bin_width, w});
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    return DiscreteMeasure(std::move(atoms));
}

double laplace_transform(const DiscreteMeasure& measure, double lambda) {
    if (!(lambda >= 0.0)) throw DomainError("laplace_transform: lambda must be >= 0");
    double s = 0.0, comp = 0.0;
    for (const Atom& a : measure.atoms()) {
        const double term = a.weight * std::exp(-lambda * a.location);
        const double y = term - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

}  // namespace subfn
