#pragma once

#include <span>

#include "aqrm/model.hpp"
#include "aqrm/numerics.hpp"
#include "aqrm/results.hpp"

namespace aqrm {

/// Fock truncation that keeps ED ground energies converged to < 1e−10 for
/// Δ = 10, g ≤ 2 g_c.
inline constexpr int kDefaultFock = 250;

enum class Spin { Up = 0, Down = 1 };

/// Truncated Fock ⊗ spin basis in the σz eigenbasis.
///
/// The serialized layout is SpinBlocks: |0↑⟩…|N−1↑⟩ then |0↓⟩…|N−1↓⟩.
/// Interleaved (|0↑⟩, |0↓⟩, |1↑⟩, …) exists to check layout independence.
struct FockSpinBasis {
    enum class Ordering { SpinBlocks, Interleaved };

    int n_fock = 2;
    Ordering ordering = Ordering::SpinBlocks;

    int dimension() const noexcept { return 2 * n_fock; }
    int index(int n, Spin s) const noexcept {
        const int spin = static_cast<int>(s);
        return ordering == Ordering::SpinBlocks ? spin * n_fock + n : 2 * n + spin;
    }
};

/// Full Hamiltonian a†a + (Δ/2)σx + g σz(a + a†) + η σz.
Matrix build_full_hamiltonian(const ModelParams& params, const FockSpinBasis& basis);

/// P = σx e^{iπa†a} in the same basis.
Matrix parity_operator(const FockSpinBasis& basis);

/// Lowest `levels` eigenvalues, converged flag from n_fock → n_fock + 20.
SpectrumResult solve_ed(const ModelParams& params, int n_fock, int levels);

/// Fock coefficients of each spin block projected onto ψ_n(ξ).
WavefunctionGrid ed_wavefunction(const ModelParams& params, int n_fock, int level,
                                 std::span<const double> grid);

/// ‖HP − PH‖_F / ‖H‖_F.
double parity_commutator_norm(const ModelParams& params, int n_fock);

}  // namespace aqrm
