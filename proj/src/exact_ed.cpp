#include "aqrm/exact_ed.hpp"

#include <cmath>
#include <string>

#include "aqrm/bo_solver.hpp"
#include "aqrm/error.hpp"

namespace aqrm {
namespace {

void check_fock(int n_fock) {
    if (n_fock < 2) throw InvalidInputError("n_fock must be >= 2");
    if (2 * static_cast<Eigen::Index>(n_fock + kConvergenceStep) > kMaxEigenDimension) {
        throw InvalidInputError("n_fock " + std::to_string(n_fock) + " exceeds the eigensolver ceiling");
    }
}

}  // namespace

Matrix build_full_hamiltonian(const ModelParams& params, const FockSpinBasis& basis) {
    check_fock(basis.n_fock);
    const int nf = basis.n_fock;
    Matrix h = Matrix::Zero(basis.dimension(), basis.dimension());
    const double half_delta = 0.5 * params.delta();
    for (int n = 0; n < nf; ++n) {
        const int u = basis.index(n, Spin::Up);
        const int d = basis.index(n, Spin::Down);
        h(u, u) = n + params.eta();
        h(d, d) = n - params.eta();
        h(u, d) = h(d, u) = half_delta;
        if (n + 1 < nf) {
            const double hop = params.g() * std::sqrt(n + 1.0);
            const int u1 = basis.index(n + 1, Spin::Up);
            const int d1 = basis.index(n + 1, Spin::Down);
            h(u, u1) = h(u1, u) = hop;
            h(d, d1) = h(d1, d) = -hop;
        }
    }
    return h;
}

Matrix parity_operator(const FockSpinBasis& basis) {
    check_fock(basis.n_fock);
    Matrix p = Matrix::Zero(basis.dimension(), basis.dimension());
    for (int n = 0; n < basis.n_fock; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const int u = basis.index(n, Spin::Up);
        const int d = basis.index(n, Spin::Down);
        p(u, d) = p(d, u) = sign;
    }
    return p;
}

SpectrumResult solve_ed(const ModelParams& params, int n_fock, int levels) {
    check_fock(n_fock);
    if (levels < 1 || levels > 2 * n_fock) {
        throw InvalidInputError("requested " + std::to_string(levels) + " levels from n_fock " +
                                std::to_string(n_fock));
    }
    const EigenDecomposition small = sym_eigen(build_full_hamiltonian(params, {n_fock}));
    const EigenDecomposition large = sym_eigen(build_full_hamiltonian(params, {n_fock + kConvergenceStep}));

    SpectrumResult out;
    out.method = Method::ED;
    out.params = params;
    out.basis_size = n_fock;
    out.energies.assign(small.values.data(), small.values.data() + levels);
    out.convergence_delta = std::abs(large.values(0) - small.values(0));
    out.converged = out.convergence_delta < kConvergenceTolerance;
    return out;
}

WavefunctionGrid ed_wavefunction(const ModelParams& params, int n_fock, int level, std::span<const double> grid) {
    check_fock(n_fock);
    if (n_fock > kMaxHermiteOrder + 1) {
        throw InvalidInputError("n_fock " + std::to_string(n_fock) + " exceeds the Hermite ceiling");
    }
    if (level < 0 || level >= 2 * n_fock) {
        throw InvalidInputError("level " + std::to_string(level) + " out of range for n_fock " +
                                std::to_string(n_fock));
    }
    check_grid(grid);

    const FockSpinBasis basis{n_fock};
    const EigenDecomposition eig = sym_eigen(build_full_hamiltonian(params, basis));
    const Vector v = eig.vectors.col(level);
    const Matrix table = hermite_function_table(n_fock, grid);
    const Vector up = table.transpose() * v.head(n_fock);
    const Vector down = table.transpose() * v.tail(n_fock);

    WavefunctionGrid wf;
    wf.xi.assign(grid.begin(), grid.end());
    wf.level = level;
    wf.method = Method::ED;
    wf.up.assign(up.data(), up.data() + up.size());
    wf.down.assign(down.data(), down.data() + down.size());
    fix_wavefunction_sign(wf);
    return wf;
}

double parity_commutator_norm(const ModelParams& params, int n_fock) {
    const FockSpinBasis basis{n_fock};
    const Matrix h = build_full_hamiltonian(params, basis);
    const Matrix p = parity_operator(basis);
    return (h * p - p * h).norm() / h.norm();
}

}  // namespace aqrm
