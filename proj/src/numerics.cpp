#include "aqrm/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "aqrm/error.hpp"

namespace aqrm {
namespace {

constexpr double kRescaleThreshold = 1e150;
constexpr double kRescaleFactor = 1e-150;
const double kLogRescale = 150.0 * std::log(10.0);

// Running state of the normalized recurrence. The true value of ψ_k is
// `current * exp(log_scale)`, with `previous` sharing the same scale.
struct ScaledRecurrence {
    double previous = 0.0;
    double current = 1.0;
    double log_scale = 0.0;
    int index = 0;

    explicit ScaledRecurrence(double xi)
        : log_scale(-0.5 * xi * xi - 0.25 * std::log(std::numbers::pi)) {}

    void step(double xi) {
        const double k = index;
        const double next = xi * std::sqrt(2.0 / (k + 1.0)) * current - std::sqrt(k / (k + 1.0)) * previous;
        previous = current;
        current = next;
        ++index;
        if (std::abs(current) > kRescaleThreshold) {
            current *= kRescaleFactor;
            previous *= kRescaleFactor;
            log_scale += kLogRescale;
        }
    }

    static double unscale(double value, double log_scale) {
        if (value == 0.0) return 0.0;
        if (log_scale > -700.0 && log_scale < 700.0) return value * std::exp(log_scale);
        return std::copysign(std::exp(log_scale + std::log(std::abs(value))), value);
    }

    double value() const { return unscale(current, log_scale); }
};

void check_hermite_order(int n) {
    if (n < 0 || n > kMaxHermiteOrder) {
        throw InvalidInputError("Hermite function order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxHermiteOrder) + "]");
    }
}

}  // namespace

double hermite_function(int n, double xi) {
    check_hermite_order(n);
    ScaledRecurrence rec(xi);
    while (rec.index < n) rec.step(xi);
    return rec.value();
}

Matrix hermite_function_table(int count, std::span<const double> points) {
    if (count < 0) throw InvalidInputError("negative Hermite table size");
    if (count > 0) check_hermite_order(count - 1);
    Matrix table(count, static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double xi = points[i];
        ScaledRecurrence rec(xi);
        for (int n = 0; n < count; ++n) {
            if (n > 0) rec.step(xi);
            table(n, static_cast<Eigen::Index>(i)) = rec.value();
        }
    }
    return table;
}

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                               std::vector<double> scaled_weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), scaled_weights_(std::move(scaled_weights)) {
    if (nodes_.empty() || nodes_.size() != weights_.size() || nodes_.size() != scaled_weights_.size()) {
        throw InvalidInputError("quadrature rule arrays must be non-empty and of equal length");
    }
}

QuadratureRule gauss_hermite(int order) {
    if (order < 1 || order > kMaxQuadratureOrder) {
        throw InvalidInputError("Gauss-Hermite order " + std::to_string(order) + " outside [1, " +
                                std::to_string(kMaxQuadratureOrder) + "]");
    }
    const int q = order;

    // Jacobi matrix of the orthonormal Hermite recurrence x ψ_k = sqrt((k+1)/2) ψ_{k+1} + sqrt(k/2) ψ_{k−1}.
    Matrix jacobi = Matrix::Zero(q, q);
    for (int k = 1; k < q; ++k) {
        jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
    }
    std::vector<double> nodes(q);
    {
        const Vector values = sym_eigenvalues(jacobi);
        for (int i = 0; i < q; ++i) nodes[i] = values(i);
    }

    std::vector<double> scaled(q);
    for (int i = 0; i < q; ++i) {
        double x = nodes[i];
        // Newton on ψ_Q(x) = 0, with ψ_Q′ = sqrt(2Q) ψ_{Q−1} − x ψ_Q.
        ScaledRecurrence rec(x);
        while (rec.index < q) rec.step(x);
        const double derivative = std::sqrt(2.0 * q) * rec.previous - x * rec.current;
        if (derivative != 0.0) x -= rec.current / derivative;
        nodes[i] = x;
    }
    for (int i = 0; i < q / 2; ++i) {
        const double mirrored = 0.5 * (nodes[q - 1 - i] - nodes[i]);
        nodes[i] = -mirrored;
        nodes[q - 1 - i] = mirrored;
    }
    if (q % 2 == 1) nodes[q / 2] = 0.0;

    std::vector<double> weights(q);
    for (int i = 0; i < q; ++i) {
        const double x = nodes[i];
        ScaledRecurrence rec(x);
        while (rec.index < q - 1) rec.step(x);
        // log w̃ = −log Q − 2 log|ψ_{Q−1}(x)|
        const double log_psi = rec.log_scale + std::log(std::abs(rec.current));
        const double log_scaled = -std::log(static_cast<double>(q)) - 2.0 * log_psi;
        scaled[i] = std::exp(log_scaled);
        weights[i] = std::exp(log_scaled - x * x);
    }
    return QuadratureRule(std::move(nodes), std::move(weights), std::move(scaled));
}

int default_quadrature_order(int basis_size) noexcept {
    return std::min(kMaxQuadratureOrder, std::max(192, 3 * basis_size + 32));
}

double basis_matrix_element(const RealFunction& f, int n, int m, const QuadratureRule& rule) {
    check_hermite_order(n);
    check_hermite_order(m);
    const auto& x = rule.nodes();
    const auto& w = rule.scaled_weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double psi_n = hermite_function(n, x[i]);
        const double psi_m = (m == n) ? psi_n : hermite_function(m, x[i]);
        sum += w[i] * psi_n * f(x[i]) * psi_m;
    }
    return sum;
}

Matrix basis_matrix(const RealFunction& f, int size, const QuadratureRule& rule) {
    if (size < 1) throw InvalidInputError("basis size must be >= 1");
    const auto& x = rule.nodes();
    const auto& w = rule.scaled_weights();
    const Matrix table = hermite_function_table(size, x);
    Vector weighted(rule.order());
    for (int i = 0; i < rule.order(); ++i) weighted(i) = w[i] * f(x[i]);
    Matrix out = table * weighted.asDiagonal() * table.transpose();
    return 0.5 * (out + out.transpose());
}

namespace {

void check_symmetric(const Matrix& a) {
    if (a.rows() != a.cols()) throw InvalidInputError("sym_eigen: matrix is not square");
    if (a.rows() == 0) throw InvalidInputError("sym_eigen: empty matrix");
    if (a.rows() > kMaxEigenDimension) {
        throw InvalidInputError("sym_eigen: dimension " + std::to_string(a.rows()) + " exceeds " +
                                std::to_string(kMaxEigenDimension));
    }
    if (!a.allFinite()) throw InvalidInputError("sym_eigen: matrix has non-finite entries");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw InvalidInputError("sym_eigen: matrix is not symmetric");
    }
}

Eigen::SelfAdjointEigenSolver<Matrix> solve_symmetric(const Matrix& a, int options) {
    check_symmetric(a);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a, options);
    if (solver.info() != Eigen::Success) {
        throw SolverError("sym_eigen: eigenvalue iteration did not converge (dimension " +
                          std::to_string(a.rows()) + ")");
    }
    return solver;
}

}  // namespace

EigenDecomposition sym_eigen(const Matrix& a) {
    const auto solver = solve_symmetric(a, Eigen::ComputeEigenvectors);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Vector sym_eigenvalues(const Matrix& a) { return solve_symmetric(a, Eigen::EigenvaluesOnly).eigenvalues(); }

double trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InvalidInputError("trapezoid: size mismatch");
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return sum;
}

}  // namespace aqrm
