#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "aqrm/bo_solver.hpp"
#include "aqrm/exact_ed.hpp"
#include "aqrm/model.hpp"
#include "aqrm/results.hpp"

namespace aqrm {

enum class ScanAxis { G, GOverGc, Eta };
enum class MethodSelection { BO, ED, Both };

std::string_view to_string(ScanAxis a) noexcept;
ScanAxis parse_axis(std::string_view s);
MethodSelection parse_method_selection(std::string_view s);

/// Gap below which two adjacent levels count as degenerate (units of ħω).
inline constexpr double kDefaultDegeneracyThreshold = 1e-3;
/// Classification is only defined for g ≥ this multiple of g_c.
inline constexpr double kStrongCouplingRatio = 1.2;
/// |E_BO − ½ − E_ED| above this marks the BO route as unreliable.
inline constexpr double kBoBreakdownThreshold = 1e-1;

/// Basis sizes and execution knobs shared by all sweeps.
struct SolverSettings {
    int bo_basis = kDefaultBoBasis;
    int n_fock = kDefaultFock;
    int quadrature_order = 0;  ///< 0 = default_quadrature_order(bo_basis)
    Branch branch = Branch::Negative;
    unsigned threads = 0;      ///< 0 = hardware concurrency
};

struct ScanPoint {
    double axis_value = 0.0;
    SpectrumResult result;

    bool operator==(const ScanPoint&) const = default;
};

struct ScanTable {
    ScanAxis axis = ScanAxis::G;
    Method method = Method::BO;
    int levels = 0;
    std::vector<ScanPoint> points;

    bool operator==(const ScanTable&) const = default;
};

/// Spectra along a coupling axis (raw g or g/g_c). One table per method,
/// BO first when both are requested. Points are solved independently and
/// assembled in input order; the output does not depend on thread count.
std::vector<ScanTable> scan_coupling(double delta, double eta, ScanAxis axis, std::span<const double> axis_values,
                                     MethodSelection methods, int levels, const SolverSettings& settings = {});

/// Adjacent differences E_{i+1} − E_i.
std::vector<double> gaps(const SpectrumResult& result);

struct DegeneracyReport {
    ModelParams params{1.0, 0.0, 0.0};
    double g_over_gc = 0.0;
    std::vector<double> gaps;
    std::optional<int> onset_level;
    double threshold = kDefaultDegeneracyThreshold;
    std::optional<int> predicted_onset;

    bool operator==(const DegeneracyReport&) const = default;
};

/// Lowest adjacent-gap index below `threshold` in the ED spectrum, next to the
/// level predicted by matching_condition(η).
DegeneracyReport classify_degeneracy(const ModelParams& params, int levels,
                                     double threshold = kDefaultDegeneracyThreshold,
                                     const SolverSettings& settings = {});

/// classify_degeneracy over a list of η values at fixed g.
std::vector<DegeneracyReport> degeneracy_map(double delta, double g, std::span<const double> etas, int levels,
                                             double threshold = kDefaultDegeneracyThreshold,
                                             const SolverSettings& settings = {});

struct MethodComparison {
    std::vector<double> differences;  ///< |E_BO,i − ½ − E_ED,i|
    double max_difference = 0.0;
    bool bo_reliable = true;          ///< max_difference ≤ kBoBreakdownThreshold
};

/// Level-by-level BO (settings.branch) versus ED at the configured basis sizes.
MethodComparison compare_methods(const ModelParams& params, int levels, const SolverSettings& settings = {});

}  // namespace aqrm
