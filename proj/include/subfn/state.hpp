#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace subfn {

/// How a grid-sampled function is continued beyond the sampled window.
enum class Extension { constant_edge, periodic };

/// Element of the state space X: a plain vector, or a function sampled on a
/// uniform 1d/2d grid. Immutable after construction except through data().
class StateVector {
  public:
    enum class Kind { finite, grid1d, grid2d };

    StateVector() = default;

    static StateVector finite(std::vector<double> entries);
    static StateVector grid1d(std::vector<double> samples, double spacing,
                              Extension ext);
    static StateVector grid2d(std::vector<double> samples, int rows, int cols,
                              double spacing, Extension ext);

    /// Same kind, dimensions, spacing and extension.
    [[nodiscard]] bool same_shape(const StateVector& other) const;

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::size_t size() const { return data_.size(); }
    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] double spacing() const { return spacing_; }
    [[nodiscard]] Extension extension() const { return ext_; }

    [[nodiscard]] std::span<const double> data() const { return data_; }
    [[nodiscard]] std::span<double> data() { return data_; }
    [[nodiscard]] double operator[](std::size_t i) const { return data_[i]; }

    /// Zero state of the same shape.
    [[nodiscard]] StateVector zeros_like() const;

  private:
    Kind kind_ = Kind::finite;
    std::vector<double> data_;
    int rows_ = 0;     // grid2d row count; grid1d/finite: size
    int cols_ = 1;     // grid2d column count
    double spacing_ = 0.0;
    Extension ext_ = Extension::constant_edge;
};

double sup_norm(const StateVector& x);

StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator*(double c, const StateVector& x);

/// a*x + y
StateVector axpy(double a, const StateVector& x, const StateVector& y);

}  // namespace subfn
