#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aqrm/model.hpp"

namespace aqrm {

/// Coefficients of V_eff(ξ) = Σ c_k ξ^k about ξ = 0, k ≤ 4.
struct TaylorCoefficients {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;

    bool operator==(const TaylorCoefficients&) const = default;
};

enum class WellShape { SingleWell, DoubleWell };

struct StationaryPoint {
    double xi = 0.0;
    double value = 0.0;

    bool operator==(const StationaryPoint&) const = default;
};

struct WellReport {
    WellShape shape = WellShape::SingleWell;
    std::vector<StationaryPoint> minima;   ///< ascending ξ
    std::optional<StationaryPoint> barrier;
    std::optional<double> offset;          ///< V(higher minimum) − V(lower minimum)
    std::optional<int> matched_level;

    bool operator==(const WellReport&) const = default;
};

/// Lower adiabatic surface plus the oscillator potential: ξ²/2 + ε_−(ξ).
double v_eff(const ModelParams& params, double xi) noexcept;
double v_eff_derivative(const ModelParams& params, double xi) noexcept;
double v_eff_second_derivative(const ModelParams& params, double xi) noexcept;

/// Closed-form expansion coefficients. Requires g > 0 (PreconditionError
/// otherwise; at g = 0 the potential is exactly ξ²/2 − sqrt(η² + Δ²/4)).
TaylorCoefficients taylor_coefficients(const ModelParams& params);

/// Stationary points of V_eff on [−(√2g + 6), √2g + 6].
WellReport find_wells(const ModelParams& params);

/// n ≥ 1 with |2η − n| ≤ tolerance, if any.
std::optional<int> matching_condition(double eta, double tolerance = 1e-9);

/// Coupling at which V_eff turns from a single into a double well, located by
/// bisection of find_wells' classifier inside [g_low, g_high].
double double_well_onset(double delta, double eta, double g_low, double g_high);

struct PotentialProfile {
    ModelParams params{1.0, 0.0, 0.0};
    std::vector<double> xi;
    std::vector<double> value;
    std::optional<TaylorCoefficients> taylor;
    WellReport wells;

    bool operator==(const PotentialProfile&) const = default;
};

/// Samples V_eff at `points` equally spaced positions on [−range, range] and
/// attaches the Taylor coefficients (when g > 0) and the well report.
PotentialProfile sample_potential(const ModelParams& params, double range, int points);

}  // namespace aqrm
