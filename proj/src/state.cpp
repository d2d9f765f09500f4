#include "subfn/state.hpp"

#include <cmath>
#include <utility>

#include "subfn/errors.hpp"

namespace subfn {

namespace {

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite entry");
}

}  // namespace

StateVector StateVector::finite(std::vector<double> entries) {
    check_finite(entries, "StateVector::finite");
    StateVector s;
    s.kind_ = Kind::finite;
    s.rows_ = static_cast<int>(entries.size());
    s.cols_ = 1;
    s.data_ = std::move(entries);
    return s;
}

StateVector StateVector::grid1d(std::vector<double> samples, double spacing,
                                Extension ext) {
    if (!(spacing > 0.0)) throw DomainError("StateVector::grid1d: spacing must be positive");
    check_finite(samples, "StateVector::grid1d");
    StateVector s;
    s.kind_ = Kind::grid1d;
    s.rows_ = static_cast<int>(samples.size());
    s.cols_ = 1;
    s.spacing_ = spacing;
    s.ext_ = ext;
    s.data_ = std::move(samples);
    return s;
}

StateVector StateVector::grid2d(std::vector<double> samples, int rows, int cols,
                                double spacing, Extension ext) {
    if (!(spacing > 0.0)) throw DomainError("StateVector::grid2d: spacing must be positive");
    if (rows < 1 || cols < 1 || static_cast<std::size_t>(rows) * cols != samples.size())
        throw ShapeError("StateVector::grid2d: rows*cols != samples.size()");
    check_finite(samples, "StateVector::grid2d");
    StateVector s;
    s.kind_ = Kind::grid2d;
    s.rows_ = rows;
    s.cols_ = cols;
    s.spacing_ = spacing;
    s.ext_ = ext;
    s.data_ = std::move(samples);
    return s;
}

bool StateVector::same_shape(const StateVector& other) const {
    if (kind_ != other.kind_ || data_.size() != other.data_.size()) return false;
    if (kind_ == Kind::finite) return true;
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           spacing_ == other.spacing_ && ext_ == other.ext_;
}

StateVector StateVector::zeros_like() const {
    StateVector s(*this);
    std::fill(s.data_.begin(), s.data_.end(), 0.0);
    return s;
}

double sup_norm(const StateVector& x) {
    double m = 0.0;
    for (double v : x.data()) m = std::max(m, std::abs(v));
    return m;
}

namespace {

StateVector combine(const StateVector& a, const StateVector& b, double ca, double cb) {
    if (!a.same_shape(b)) throw ShapeError("StateVector arithmetic: shape mismatch");
    StateVector out(a);
    auto d = out.data();
    auto db = b.data();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = ca * d[i] + cb * db[i];
    return out;
}

}  // namespace

StateVector operator+(const StateVector& a, const StateVector& b) { return combine(a, b, 1.0, 1.0); }
StateVector operator-(const StateVector& a, const StateVector& b) { return combine(a, b, 1.0, -1.0); }

StateVector operator*(double c, const StateVector& x) {
    StateVector out(x);
    for (double& v : out.data()) v *= c;
    return out;
}

StateVector axpy(double a, const StateVector& x, const StateVector& y) {
    return combine(y, x, 1.0, a);
}

}  // namespace subfn
