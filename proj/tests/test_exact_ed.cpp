#include <doctest.h>

#include <cmath>

#include "aqrm/bo_solver.hpp"
#include "aqrm/error.hpp"
#include "aqrm/exact_ed.hpp"
#include "aqrm/potential.hpp"
#include "test_support.hpp"
#include "wavefunction_support.hpp"

using namespace aqrm;
using aqrm::test::close;

namespace {
const double kGc = coupling_scale(10.0);
}

TEST_CASE("full Hamiltonian layout") {
    const ModelParams p(10.0, 0.7, 0.3);
    const FockSpinBasis basis{3};
    const Matrix h = build_full_hamiltonian(p, basis);
    REQUIRE(h.rows() == 6);
    CHECK(h == h.transpose());
    // up block: n + η on the diagonal, +g sqrt(n+1) hopping
    CHECK(h(0, 0) == 0.3);
    CHECK(h(2, 2) == 2.3);
    CHECK(h(0, 1) == 0.7);
    CHECK(close(h(1, 2), 0.7 * std::sqrt(2.0), 1e-15));
    // down block: n − η, −g sqrt(n+1)
    CHECK(h(3, 3) == -0.3);
    CHECK(h(3, 4) == -0.7);
    // spin flip Δ/2 on matching Fock index only
    CHECK(h(0, 3) == 5.0);
    CHECK(h(2, 5) == 5.0);
    CHECK(h(0, 4) == 0.0);
}

TEST_CASE("ED decoupled limits") {
    const Vector v = sym_eigenvalues(build_full_hamiltonian(ModelParams(10.0, 0.0, 0.0), {2}));
    CHECK(close(v(0), -5.0, 1e-12));
    CHECK(close(v(1), -4.0, 1e-12));
    CHECK(close(v(2), 5.0, 1e-12));
    CHECK(close(v(3), 6.0, 1e-12));

    const SpectrumResult b = solve_ed(ModelParams(10.0, 0.0, 0.5), 30, 1);
    CHECK(close(b.energies[0], -std::sqrt(0.25 + 25.0), 1e-12));

    const SpectrumResult r = solve_ed(ModelParams(10.0, 0.0, 0.0), 100, 4);
    CHECK(r.method == Method::ED);
    CHECK(!r.branch.has_value());
    for (int i = 0; i < 4; ++i) CHECK(close(r.energies[i], -5.0 + i, 1e-12));
}

TEST_CASE("ED truncation self-convergence") {
    const ModelParams p(10.0, 2.0, 0.0);
    const double a = sym_eigenvalues(build_full_hamiltonian(p, {200}))(0);
    const double b = sym_eigenvalues(build_full_hamiltonian(p, {220}))(0);
    CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("ED gap structure at g = 1.5 g_c") {
    const SpectrumResult half = solve_ed(ModelParams(10.0, 1.5 * kGc, 0.5), 250, 3);
    CHECK(half.converged);
    CHECK(half.energies[1] - half.energies[0] > 0.1);
    CHECK(half.energies[2] - half.energies[1] < 1e-3);

    const SpectrumResult off = solve_ed(ModelParams(10.0, 1.5 * kGc, 0.8), 250, 4);
    for (int i = 0; i < 3; ++i) CHECK(off.energies[i + 1] - off.energies[i] > 5e-2);
}

TEST_CASE("ED levels decrease monotonically with the truncation") {
    for (const double eta : {0.0, 0.5}) {
        const ModelParams p(10.0, 1.5 * kGc, eta);
        Vector prev = sym_eigenvalues(build_full_hamiltonian(p, {20})).head(8);
        for (const int nf : {40, 80, 160, 250}) {
            const Vector cur = sym_eigenvalues(build_full_hamiltonian(p, {nf})).head(8);
            for (int k = 0; k < 8; ++k) CHECK(cur(k) <= prev(k) + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("ED spectrum does not depend on the basis layout") {
    const ModelParams p(10.0, 2.3, 0.7);
    const Vector blocks = sym_eigenvalues(build_full_hamiltonian(p, {80, FockSpinBasis::Ordering::SpinBlocks}));
    const Vector inter = sym_eigenvalues(build_full_hamiltonian(p, {80, FockSpinBasis::Ordering::Interleaved}));
    CHECK((blocks - inter).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("ED spectrum is even in eta") {
    // Negative η is not a valid ModelParams, so the mirrored matrix is built by hand.
    const ModelParams p(10.0, 1.7, 0.6);
    const int nf = 40;
    Matrix mirrored = build_full_hamiltonian(p, {nf});
    for (int n = 0; n < nf; ++n) {
        mirrored(n, n) = n - p.eta();
        mirrored(nf + n, nf + n) = n + p.eta();
    }
    CHECK((sym_eigenvalues(mirrored) - sym_eigenvalues(build_full_hamiltonian(p, {nf}))).cwiseAbs().maxCoeff() <
          1e-10);
}

TEST_CASE("eta = 0 eigenvectors carry definite parity") {
    const ModelParams p(10.0, 1.5 * kGc, 0.0);
    const FockSpinBasis basis{kDefaultFock};
    const EigenDecomposition eig = sym_eigen(build_full_hamiltonian(p, basis));
    const Matrix parity = parity_operator(basis);
    // tunnel doublets are split by ~1e-5, so rounding mixes them at the 1e-8 level
    for (int k = 0; k < 8; ++k) {
        const Vector v = eig.vectors.col(k);
        const Vector pv = parity * v;
        const double err = std::min((pv - v).norm(), (pv + v).norm());
        CAPTURE(k);
        CHECK(err < 1e-6);
    }
}

TEST_CASE("parity commutator") {
    CHECK(parity_commutator_norm(ModelParams(10.0, 2.0, 0.0), 100) < 1e-12);
    CHECK(parity_commutator_norm(ModelParams(10.0, 2.0, 0.2), 100) > 1e-3);
    CHECK(parity_commutator_norm(ModelParams(10.0, 2.0, 1.0), 100) > 1e-3);
    const Matrix p = parity_operator({10});
    CHECK((p * p - Matrix::Identity(20, 20)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ED input validation") {
    const ModelParams p(10.0, 1.0, 0.0);
    CHECK_THROWS_AS(solve_ed(p, 1, 1), InvalidInputError);
    CHECK_THROWS_AS(solve_ed(p, 10, 21), InvalidInputError);
    const auto grid = aqrm::test::linspace(-5.0, 5.0, 11);
    CHECK_THROWS_AS(ed_wavefunction(p, 10, 20, grid), InvalidInputError);
}

TEST_CASE("ED wavefunction in the decoupled limit") {
    const auto grid = aqrm::test::linspace(-8.0, 8.0, 321);
    const WavefunctionGrid wf = ed_wavefunction(ModelParams(10.0, 0.0, 0.0), 30, 0, grid);
    CHECK(wf.method == Method::ED);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(close(std::abs(wf.up[i]), hermite_function(0, grid[i]) / std::sqrt(2.0), 1e-12));
        CHECK(close(wf.down[i], -wf.up[i], 1e-12));
    }
    CHECK(std::abs(wf.norm() - 1.0) < 1e-6);
}

TEST_CASE("ED and BO ground states overlap at eta = 0.5, g = 1.5 g_c") {
    const ModelParams p(10.0, 1.5 * kGc, 0.5);
    const double half = bo_grid_half_width(p);
    const auto grid = aqrm::test::linspace(-half, half, 2001);
    const WavefunctionGrid ed = ed_wavefunction(p, kDefaultFock, 0, grid);
    const WavefunctionGrid bo = bo_wavefunction(p, Branch::Negative, kDefaultBoBasis, 0, grid);
    std::vector<double> product(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) product[i] = ed.up[i] * bo.up[i] + ed.down[i] * bo.down[i];
    CHECK(std::abs(trapezoid(grid, product)) > 0.999);
    CHECK(std::abs(ed.norm() - 1.0) < 1e-6);
}

TEST_CASE("eta = 0.8 second excited state sits in the higher well") {
    const ModelParams p(10.0, 1.5 * kGc, 0.8);
    const WellReport wells = find_wells(p);
    REQUIRE(wells.shape == WellShape::DoubleWell);
    // the higher minimum is the left one for η > 0
    REQUIRE(wells.minima[0].value > wells.minima[1].value);
    const double half = bo_grid_half_width(p);
    const auto grid = aqrm::test::linspace(-half, half, 2001);
    const WavefunctionGrid wf = ed_wavefunction(p, kDefaultFock, 2, grid);
    CHECK(aqrm::test::mass_left_of(grid, wf.density(), wells.barrier->xi) > 0.99);
}
