#include "aqrm/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "aqrm/error.hpp"
#include "aqrm/potential.hpp"

namespace aqrm {
namespace {

// Runs task(i) for i < count on a small worker pool. Returns the lowest
// failing index together with its exception, if any.
std::optional<std::pair<std::size_t, std::exception_ptr>> parallel_for(std::size_t count, unsigned threads,
                                                                       const std::function<void(std::size_t)>& task) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, count));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) return std::make_pair(i, errors[i]);
    }
    return std::nullopt;
}

[[noreturn]] void rethrow_at_point(std::exception_ptr error, const std::string& where) {
    try {
        std::rethrow_exception(error);
    } catch (const Error& e) {
        throw Error(e.kind(), where + ": " + e.what());
    } catch (const std::exception& e) {
        throw SolverError(where + ": " + e.what());
    }
}

std::string describe(double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
}

}  // namespace

std::string_view to_string(ScanAxis a) noexcept {
    switch (a) {
        case ScanAxis::G: return "g";
        case ScanAxis::GOverGc: return "g-over-gc";
        case ScanAxis::Eta: return "eta";
    }
    return "g";
}

ScanAxis parse_axis(std::string_view s) {
    if (s == "g") return ScanAxis::G;
    if (s == "g-over-gc" || s == "g_over_gc") return ScanAxis::GOverGc;
    if (s == "eta") return ScanAxis::Eta;
    throw InvalidInputError("unknown axis '" + std::string(s) + "'");
}

MethodSelection parse_method_selection(std::string_view s) {
    if (s == "bo") return MethodSelection::BO;
    if (s == "ed") return MethodSelection::ED;
    if (s == "both") return MethodSelection::Both;
    throw InvalidInputError("unknown method '" + std::string(s) + "' (expected bo|ed|both)");
}

std::vector<ScanTable> scan_coupling(double delta, double eta, ScanAxis axis, std::span<const double> axis_values,
                                     MethodSelection methods, int levels, const SolverSettings& settings) {
    if (axis == ScanAxis::Eta) throw InvalidInputError("scan_coupling sweeps g or g/g_c, not eta");
    if (axis_values.empty()) throw InvalidInputError("scan needs at least one point");
    for (std::size_t i = 1; i < axis_values.size(); ++i) {
        if (!(axis_values[i] > axis_values[i - 1])) throw InvalidInputError("scan axis values must be strictly ascending");
    }
    if (levels < 1) throw InvalidInputError("scan needs at least one level");
    const ModelParams base(delta, 0.0, eta);
    const double scale = axis == ScanAxis::GOverGc ? base.g_c() : 1.0;
    // Validate every point before any solve.
    for (const double v : axis_values) (void)base.with_g(v * scale);

    std::vector<Method> order;
    if (methods != MethodSelection::ED) order.push_back(Method::BO);
    if (methods != MethodSelection::BO) order.push_back(Method::ED);

    std::vector<ScanTable> tables;
    for (const Method method : order) {
        ScanTable table{axis, method, levels, std::vector<ScanPoint>(axis_values.size())};
        const auto failure = parallel_for(axis_values.size(), settings.threads, [&](std::size_t i) {
            const ModelParams p = base.with_g(axis_values[i] * scale);
            table.points[i].axis_value = axis_values[i];
            table.points[i].result = method == Method::BO
                                         ? solve_bo(p, settings.branch, settings.bo_basis, levels, settings.quadrature_order)
                                         : solve_ed(p, settings.n_fock, levels);
        });
        if (failure) {
            rethrow_at_point(failure->second, std::string(to_string(method)) + " scan point " +
                                                  std::to_string(failure->first) + " (" +
                                                  std::string(to_string(axis)) + " = " +
                                                  describe(axis_values[failure->first]) + ")");
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

std::vector<double> gaps(const SpectrumResult& result) {
    if (result.energies.size() < 2) throw InvalidInputError("gaps need at least two energies");
    std::vector<double> out(result.energies.size() - 1);
    for (std::size_t i = 0; i + 1 < result.energies.size(); ++i) {
        out[i] = result.energies[i + 1] - result.energies[i];
    }
    return out;
}

DegeneracyReport classify_degeneracy(const ModelParams& params, int levels, double threshold,
                                     const SolverSettings& settings) {
    if (levels < 2) throw InvalidInputError("degeneracy classification needs at least two levels");
    if (!(threshold > 0.0)) throw InvalidInputError("degeneracy threshold must be > 0");
    const double ratio = params.g() / params.g_c();
    if (ratio < kStrongCouplingRatio) {
        throw PreconditionError("degeneracy classification requires g >= " + describe(kStrongCouplingRatio) +
                                " g_c (got g/g_c = " + describe(ratio) + ")");
    }
    DegeneracyReport report;
    report.params = params;
    report.g_over_gc = ratio;
    report.threshold = threshold;
    report.gaps = gaps(solve_ed(params, settings.n_fock, levels));
    for (std::size_t i = 0; i < report.gaps.size(); ++i) {
        if (report.gaps[i] < threshold) {
            report.onset_level = static_cast<int>(i);
            break;
        }
    }
    report.predicted_onset = matching_condition(params.eta());
    return report;
}

std::vector<DegeneracyReport> degeneracy_map(double delta, double g, std::span<const double> etas, int levels,
                                             double threshold, const SolverSettings& settings) {
    if (etas.empty()) throw InvalidInputError("degeneracy map needs at least one eta");
    std::vector<ModelParams> params;
    params.reserve(etas.size());
    for (const double eta : etas) params.emplace_back(delta, g, eta);
    std::vector<DegeneracyReport> out(etas.size());
    const auto failure = parallel_for(etas.size(), settings.threads, [&](std::size_t i) {
        out[i] = classify_degeneracy(params[i], levels, threshold, settings);
    });
    if (failure) rethrow_at_point(failure->second, "eta = " + describe(etas[failure->first]));
    return out;
}

MethodComparison compare_methods(const ModelParams& params, int levels, const SolverSettings& settings) {
    const SpectrumResult bo = solve_bo(params, settings.branch, settings.bo_basis, levels, settings.quadrature_order);
    const SpectrumResult ed = solve_ed(params, settings.n_fock, levels);
    MethodComparison out;
    out.differences.resize(levels);
    for (int i = 0; i < levels; ++i) {
        out.differences[i] = std::abs(bo.energies[i] - kZeroPointOffset - ed.energies[i]);
    }
    out.max_difference = *std::max_element(out.differences.begin(), out.differences.end());
    out.bo_reliable = out.max_difference <= kBoBreakdownThreshold;
    return out;
}

}  // namespace aqrm
