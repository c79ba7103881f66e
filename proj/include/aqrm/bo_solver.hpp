#pragma once

#include <span>

#include "aqrm/model.hpp"
#include "aqrm/numerics.hpp"
#include "aqrm/results.hpp"

namespace aqrm {

/// Default oscillator basis size; ground energies are converged to < 1e−8
/// for Δ = 10 and g ≤ 2 g_c.
inline constexpr int kDefaultBoBasis = 120;
/// Basis growth used for the convergence check.
inline constexpr int kConvergenceStep = 20;
inline constexpr double kConvergenceTolerance = 1e-8;

/// Matrix of H_0 + ε_branch in the first N oscillator states:
/// (n + ½)δ_nm + ⟨n|ε_branch|m⟩. `quadrature_order` 0 selects the default.
Matrix build_bo_hamiltonian(const ModelParams& params, Branch branch, int basis_size,
                            int quadrature_order = 0);

/// Lowest `levels` eigenvalues of build_bo_hamiltonian, with a convergence
/// check against the basis enlarged by kConvergenceStep.
SpectrumResult solve_bo(const ModelParams& params, Branch branch, int basis_size, int levels,
                        int quadrature_order = 0);

/// Minimum symmetric grid half-width accepted by bo_wavefunction.
double bo_grid_half_width(const ModelParams& params) noexcept;

/// Ψ_σ(ξ) = φ_branch,σ(ξ) Σ_n a_n ψ_n(ξ) for the requested level.
WavefunctionGrid bo_wavefunction(const ModelParams& params, Branch branch, int basis_size, int level,
                                 std::span<const double> grid, int quadrature_order = 0);

}  // namespace aqrm
