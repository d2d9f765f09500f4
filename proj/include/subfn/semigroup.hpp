#pragma once

#include <memory>

#include <Eigen/Dense>

#include "subfn/state.hpp"

namespace subfn {

/// A concrete equibounded C0-semigroup (T_t) with T_t = e^{-tA}:
/// either a symmetric positive semidefinite matrix A acting on finite
/// states, or the Gauss-Weierstrass heat family (A = -Laplacian) acting on
/// grid states. Immutable; the matrix eigendecomposition is cached at
/// construction.
class SemigroupSpec {
  public:
    enum class Kind { matrix, heat };

    /// Validates symmetry (max asymmetry 1e-12 * ||A||) and positive
    /// semidefiniteness (min eigenvalue >= -1e-10).
    static SemigroupSpec matrix(const Eigen::MatrixXd& A);

    /// Heat semigroup in dimension n in {1, 2}.
    static SemigroupSpec heat(int dimension);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] int heat_dimension() const { return heat_dim_; }
    [[nodiscard]] const Eigen::MatrixXd& matrix_A() const { return *A_; }
    [[nodiscard]] const Eigen::MatrixXd& eigenvectors() const { return *evec_; }
    [[nodiscard]] const Eigen::VectorXd& eigenvalues() const { return *eval_; }

  private:
    Kind kind_ = Kind::heat;
    int heat_dim_ = 1;
    std::shared_ptr<const Eigen::MatrixXd> A_;
    std::shared_ptr<const Eigen::MatrixXd> evec_;
    std::shared_ptr<const Eigen::VectorXd> eval_;
};

/// T_t x. Matrix: V e^{-t Lambda} V^T x. Heat: convolution with the sampled
/// Gauss-Weierstrass kernel truncated at radius 6 sqrt(2t), renormalized to
/// unit mass; below sqrt(2t) < h/4 the first-order x + t*Lap_h(x) is used.
StateVector apply(const SemigroupSpec& T, double t, const StateVector& x);

/// A x (the generator is -A). Matrix: A*x. Heat: negative discrete Laplacian.
StateVector generator_apply(const SemigroupSpec& T, const StateVector& x);

}  // namespace subfn
