#include "aqrm/bo_solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "aqrm/error.hpp"

namespace aqrm {
namespace {

void check_basis(int basis_size) {
    if (basis_size < 2) throw InvalidInputError("BO basis size must be >= 2");
    if (basis_size > kMaxHermiteOrder + 1 - kConvergenceStep) {
        throw InvalidInputError("BO basis size " + std::to_string(basis_size) + " exceeds the Hermite ceiling");
    }
}

Matrix assemble(const ModelParams& params, Branch branch, int basis_size, int quadrature_order) {
    const QuadratureRule rule = gauss_hermite(quadrature_order);
    Matrix h = basis_matrix([&](double xi) { return epsilon(params, branch, xi); }, basis_size, rule);
    for (int n = 0; n < basis_size; ++n) h(n, n) += n + 0.5;
    return h;
}

}  // namespace

Matrix build_bo_hamiltonian(const ModelParams& params, Branch branch, int basis_size, int quadrature_order) {
    check_basis(basis_size);
    const int q = quadrature_order > 0 ? quadrature_order : default_quadrature_order(basis_size);
    Matrix h = assemble(params, branch, basis_size, q);
#ifndef NDEBUG
    if (quadrature_order <= 0 && 2 * q <= kMaxQuadratureOrder) {
        const Matrix refined = assemble(params, branch, basis_size, 2 * q);
        assert((refined - h).cwiseAbs().maxCoeff() < 1e-10 && "quadrature not converged");
    }
#endif
    return h;
}

SpectrumResult solve_bo(const ModelParams& params, Branch branch, int basis_size, int levels,
                        int quadrature_order) {
    check_basis(basis_size);
    if (levels < 1 || levels > basis_size) {
        throw InvalidInputError("requested " + std::to_string(levels) + " levels from a basis of " +
                                std::to_string(basis_size));
    }
    const EigenDecomposition small = sym_eigen(build_bo_hamiltonian(params, branch, basis_size, quadrature_order));
    const int enlarged_q = quadrature_order > 0 ? quadrature_order : 0;
    const EigenDecomposition large =
        sym_eigen(build_bo_hamiltonian(params, branch, basis_size + kConvergenceStep, enlarged_q));

    SpectrumResult out;
    out.method = Method::BO;
    out.params = params;
    out.branch = branch;
    out.basis_size = basis_size;
    out.energies.assign(small.values.data(), small.values.data() + levels);
    out.convergence_delta = std::abs(large.values(0) - small.values(0));
    out.converged = out.convergence_delta < kConvergenceTolerance;
    return out;
}

double bo_grid_half_width(const ModelParams& params) noexcept {
    return std::sqrt(2.0) * params.g() * 1.5 + 6.0;
}

WavefunctionGrid bo_wavefunction(const ModelParams& params, Branch branch, int basis_size, int level,
                                 std::span<const double> grid, int quadrature_order) {
    check_basis(basis_size);
    if (level < 0 || level >= basis_size) {
        throw InvalidInputError("level " + std::to_string(level) + " out of range for basis " +
                                std::to_string(basis_size));
    }
    check_grid(grid);
    const double half = bo_grid_half_width(params);
    if (grid.front() > -half + 1e-12 || grid.back() < half - 1e-12) {
        throw PreconditionError("wavefunction grid must span at least [" + std::to_string(-half) + ", " +
                                std::to_string(half) + "]");
    }

    const EigenDecomposition eig = sym_eigen(build_bo_hamiltonian(params, branch, basis_size, quadrature_order));
    const Vector coeffs = eig.vectors.col(level);
    const Matrix table = hermite_function_table(basis_size, grid);
    const Vector envelope = table.transpose() * coeffs;

    WavefunctionGrid wf;
    wf.xi.assign(grid.begin(), grid.end());
    wf.level = level;
    wf.method = Method::BO;
    wf.up.resize(grid.size());
    wf.down.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const SpinVector spin = spin_eigenvector(params, branch, grid[i]);
        const double chi = envelope(static_cast<Eigen::Index>(i));
        wf.up[i] = spin.up * chi;
        wf.down[i] = spin.down * chi;
    }
    fix_wavefunction_sign(wf);
    return wf;
}

}  // namespace aqrm
