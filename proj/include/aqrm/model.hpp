#pragma once

#include <array>
#include <string_view>

namespace aqrm {

/// Dimensionless parameters of the asymmetric Rabi Hamiltonian
///   H = a†a + (Δ/2)σx + g σz (a + a†) + η σz,
/// all in units of the mode energy ħω.
///
/// Negative η is mirror-equivalent (ξ → −ξ plus a spin flip) and is rejected.
class ModelParams {
public:
    /// Throws InvalidInputError unless delta > 0, g ≥ 0, eta ≥ 0 and all are finite.
    ModelParams(double delta, double g, double eta);

    double delta() const noexcept { return delta_; }
    double g() const noexcept { return g_; }
    double eta() const noexcept { return eta_; }

    /// β = 2√2 g / Δ
    double beta() const noexcept;
    /// Coupling scale g_c = sqrt(1 + sqrt(1 + Δ²/16)) used for the g/g_c axis.
    double g_c() const noexcept;

    ModelParams with_g(double g) const { return {delta_, g, eta_}; }
    ModelParams with_eta(double eta) const { return {delta_, g_, eta}; }

    /// d(ξ) = √2 g ξ + η, the σz coefficient of the spin matrix.
    double bias_at(double xi) const noexcept;

    bool operator==(const ModelParams&) const = default;

private:
    double delta_;
    double g_;
    double eta_;
};

double coupling_scale(double delta) noexcept;

enum class Branch { Negative, Positive };

std::string_view to_string(Branch b) noexcept;
Branch parse_branch(std::string_view s);

/// Normalized eigenvector of the 2×2 spin matrix, (up, down) in the σz basis.
struct SpinVector {
    double up;
    double down;
};

/// Row-major 2×2 symmetric matrix.
using Matrix2 = std::array<std::array<double, 2>, 2>;

/// The spin-sector matrix [[d, Δ/2], [Δ/2, −d]] at position ξ.
Matrix2 spin_hamiltonian(const ModelParams& params, double xi) noexcept;

/// Adiabatic surface ε_±(ξ) = ±sqrt(d(ξ)² + Δ²/4). Regular at g = 0.
double epsilon(const ModelParams& params, Branch branch, double xi) noexcept;

/// Eigenvector of spin_hamiltonian for the chosen branch. The down component
/// is always positive (it never vanishes for Δ > 0), which makes the map
/// ξ → SpinVector continuous.
SpinVector spin_eigenvector(const ModelParams& params, Branch branch, double xi) noexcept;

}  // namespace aqrm
