#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "aqrm/model.hpp"

namespace aqrm {

enum class Method { BO, ED };

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view s);

/// Energy difference E_BO − E_ED that stems from the two Hamiltonians'
/// conventions: the position-space oscillator ½(−∂² + ξ²) equals a†a + ½.
inline constexpr double kZeroPointOffset = 0.5;

/// Lowest eigenenergies of one solve (units of ħω, ascending).
struct SpectrumResult {
    Method method = Method::BO;
    ModelParams params{1.0, 0.0, 0.0};
    std::optional<Branch> branch;  ///< empty for ED
    int basis_size = 0;            ///< N for BO, n_fock for ED
    std::vector<double> energies;
    bool converged = false;
    double convergence_delta = 0.0;  ///< |ΔE_0| when the basis grows by 20

    bool operator==(const SpectrumResult&) const = default;
};

/// Spin-resolved wavefunction sampled on a position grid.
struct WavefunctionGrid {
    std::vector<double> xi;
    std::vector<double> up;
    std::vector<double> down;
    int level = 0;
    Method method = Method::BO;

    /// ∫(up² + down²) dξ by the trapezoid rule.
    double norm() const;
    /// up² + down² per sample.
    std::vector<double> density() const;

    bool operator==(const WavefunctionGrid&) const = default;
};

/// Flips the overall sign so the largest-magnitude sample (across both
/// components) is positive.
void fix_wavefunction_sign(WavefunctionGrid& wf);

/// Throws InvalidInputError unless the grid is non-empty and strictly ascending.
void check_grid(std::span<const double> grid);

}  // namespace aqrm
