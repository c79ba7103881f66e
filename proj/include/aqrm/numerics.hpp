#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

namespace aqrm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr int kMaxHermiteOrder = 1024;
inline constexpr int kMaxQuadratureOrder = 2048;
inline constexpr Eigen::Index kMaxEigenDimension = 8192;

/// L²-normalized oscillator eigenfunction ψ_n(ξ) via the normalized
/// three-term recurrence. Values stay finite for n ≤ 1024, |ξ| ≤ 40 (the
/// recurrence runs with a separate log-scale so ψ_0 underflow is harmless).
double hermite_function(int n, double xi);

/// Table T(n, i) = ψ_n(points[i]) for n < count.
Matrix hermite_function_table(int count, std::span<const double> points);

/// Gauss–Hermite rule for the weight exp(−x²).
///
/// `scaled_weights()` holds w_i·exp(x_i²), the weights to use when the
/// integrand already carries the Gaussian, e.g. ψ_n(x)·f(x)·ψ_m(x).
class QuadratureRule {
public:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                   std::vector<double> scaled_weights);

    int order() const noexcept { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const std::vector<double>& scaled_weights() const noexcept { return scaled_weights_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> scaled_weights_;
};

/// Q-point rule, exact for polynomials of degree ≤ 2Q−1. Nodes come from
/// the eigenvalues of the Jacobi matrix (Golub–Welsch) followed by one
/// Newton step; weights from the Christoffel numbers 1/(Q ψ_{Q−1}(x_i)²).
QuadratureRule gauss_hermite(int order);

/// Quadrature order used by the oscillator-basis solvers for basis size N.
int default_quadrature_order(int basis_size) noexcept;

using RealFunction = std::function<double(double)>;

/// ⟨n|f|m⟩ in the oscillator basis.
double basis_matrix_element(const RealFunction& f, int n, int m, const QuadratureRule& rule);

/// All ⟨n|f|m⟩ for n, m < size; exactly symmetric.
Matrix basis_matrix(const RealFunction& f, int size, const QuadratureRule& rule);

struct EigenDecomposition {
    Vector values;   ///< ascending
    Matrix vectors;  ///< orthonormal columns, same order as values
};

/// Dense symmetric eigensolver. Throws InvalidInputError on a non-square,
/// non-symmetric or oversized matrix, SolverError if the iteration fails.
EigenDecomposition sym_eigen(const Matrix& a);

/// Eigenvalues only (ascending), same checks as sym_eigen.
Vector sym_eigenvalues(const Matrix& a);

/// Trapezoid rule on an arbitrary ascending grid.
double trapezoid(std::span<const double> x, std::span<const double> y);

}  // namespace aqrm
