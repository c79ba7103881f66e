#include "aqrm/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aqrm/error.hpp"

namespace aqrm {
namespace {

constexpr double kRootTolerance = 1e-10;

double bisect(const ModelParams& params, double lo, double hi) {
    double f_lo = v_eff_derivative(params, lo);
    while (hi - lo > kRootTolerance) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = v_eff_derivative(params, mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double v_eff(const ModelParams& params, double xi) noexcept {
    return 0.5 * xi * xi + epsilon(params, Branch::Negative, xi);
}

double v_eff_derivative(const ModelParams& params, double xi) noexcept {
    const double d = params.bias_at(xi);
    return xi - std::sqrt(2.0) * params.g() * d / std::hypot(d, 0.5 * params.delta());
}

double v_eff_second_derivative(const ModelParams& params, double xi) noexcept {
    const double d = params.bias_at(xi);
    const double h2 = 0.25 * params.delta() * params.delta();
    const double r = std::hypot(d, 0.5 * params.delta());
    return 1.0 - 2.0 * params.g() * params.g() * h2 / (r * r * r);
}

TaylorCoefficients taylor_coefficients(const ModelParams& params) {
    const double g = params.g();
    if (!(g > 0.0)) {
        throw PreconditionError(
            "Taylor coefficients need g > 0; at g = 0 use V(xi) = xi^2/2 - sqrt(eta^2 + delta^2/4)");
    }
    const double delta = params.delta();
    const double eta = params.eta();
    const double beta = params.beta();
    const double s = 2.0 * g * g + beta * beta * eta * eta;
    const double sqrt2 = std::sqrt(2.0);

    TaylorCoefficients c;
    c.c0 = -delta / (2.0 * sqrt2 * g) * std::sqrt(s);
    c.c1 = -4.0 * g * g * eta / delta / std::sqrt(s);
    c.c2 = 0.5 - 4.0 * sqrt2 * std::pow(g, 5) / delta * std::pow(s, -1.5);
    c.c3 = 64.0 * std::pow(g, 8) * eta / std::pow(delta, 3) * std::pow(s, -2.5);
    c.c4 = (32.0 * sqrt2 * std::pow(g, 11) / std::pow(delta, 3) -
            512.0 * sqrt2 * std::pow(g, 11) * eta * eta / std::pow(delta, 5)) *
           std::pow(s, -3.5);
    return c;
}

WellReport find_wells(const ModelParams& params) {
    const double sqrt2g = std::sqrt(2.0) * params.g();
    const double half_width = sqrt2g + 6.0;

    // V″ < 0 exactly where |d| < d_c, so V′ is monotone on each piece
    // between the (at most two) inflection points and has ≤ 3 roots.
    std::vector<double> breaks{-half_width, half_width};
    const double h = 0.5 * params.delta();
    const double curvature_scale = std::cbrt(2.0 * params.g() * params.g() * h * h);
    if (params.g() > 0.0 && curvature_scale > h) {
        const double d_c = std::sqrt(curvature_scale * curvature_scale - h * h);
        for (const double d : {-d_c, d_c}) {
            const double xi = (d - params.eta()) / sqrt2g;
            if (xi > -half_width && xi < half_width) breaks.push_back(xi);
        }
    }
    std::sort(breaks.begin(), breaks.end());

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i];
        const double b = breaks[i + 1];
        const double fa = v_eff_derivative(params, a);
        const double fb = v_eff_derivative(params, b);
        if (fa == 0.0) {
            if (roots.empty() || roots.back() != a) roots.push_back(a);
        } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
            roots.push_back(bisect(params, a, b));
        }
        if (fb == 0.0) roots.push_back(b);
    }
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    WellReport report;
    std::vector<StationaryPoint> maxima;
    for (const double xi : roots) {
        const StationaryPoint p{xi, v_eff(params, xi)};
        if (v_eff_second_derivative(params, xi) > 0.0) {
            report.minima.push_back(p);
        } else {
            maxima.push_back(p);
        }
    }
    if (report.minima.size() == 2 && maxima.size() == 1) {
        report.shape = WellShape::DoubleWell;
        report.barrier = maxima.front();
        report.offset = std::abs(report.minima[1].value - report.minima[0].value);
        report.matched_level = matching_condition(params.eta());
    } else if (report.minima.size() != 1) {
        throw SolverError("find_wells: unexpected stationary-point structure (" +
                          std::to_string(report.minima.size()) + " minima)");
    }
    return report;
}

std::optional<int> matching_condition(double eta, double tolerance) {
    if (!(tolerance > 0.0)) throw InvalidInputError("matching tolerance must be > 0");
    const double twice = 2.0 * eta;
    const double n = std::round(twice);
    if (n >= 1.0 && std::abs(twice - n) <= tolerance) return static_cast<int>(n);
    return std::nullopt;
}

double double_well_onset(double delta, double eta, double g_low, double g_high) {
    if (!(g_low < g_high)) throw InvalidInputError("onset search needs g_low < g_high");
    auto shape_at = [&](double g) { return find_wells(ModelParams(delta, g, eta)).shape; };
    const WellShape low_shape = shape_at(g_low);
    if (low_shape == shape_at(g_high)) {
        throw PreconditionError("no single/double-well transition in [" + std::to_string(g_low) + ", " +
                                std::to_string(g_high) + "]");
    }
    double lo = g_low;
    double hi = g_high;
    while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (shape_at(mid) == low_shape ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

PotentialProfile sample_potential(const ModelParams& params, double range, int points) {
    if (!(range > 0.0) || !std::isfinite(range)) throw InvalidInputError("potential range must be > 0");
    if (points < 2) throw InvalidInputError("potential needs at least 2 points");
    PotentialProfile profile{params, {}, {}, std::nullopt, find_wells(params)};
    profile.xi.resize(points);
    profile.value.resize(points);
    for (int i = 0; i < points; ++i) {
        const double xi = -range + 2.0 * range * i / (points - 1);
        profile.xi[i] = xi;
        profile.value[i] = v_eff(params, xi);
    }
    if (params.g() > 0.0) profile.taylor = taylor_coefficients(params);
    return profile;
}

}  // namespace aqrm
