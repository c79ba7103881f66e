#pragma once

#include <array>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "aqrm/model.hpp"
#include "aqrm/potential.hpp"

namespace aqrm::test {

using Big = boost::multiprecision::cpp_bin_float_50;

inline Big v_eff_big(const ModelParams& p, const Big& xi) {
    const Big d = boost::multiprecision::sqrt(Big(2)) * Big(p.g()) * xi + Big(p.eta());
    const Big h = Big(p.delta()) / 2;
    return xi * xi / 2 - boost::multiprecision::sqrt(d * d + h * h);
}

/// Five-point central differences of V_eff at ξ = 0, evaluated in 50 digits.
inline TaylorCoefficients finite_difference_taylor(const ModelParams& p, double step = 1e-6) {
    const Big h(step);
    const std::array<Big, 5> f{v_eff_big(p, -2 * h), v_eff_big(p, -h), v_eff_big(p, Big(0)), v_eff_big(p, h),
                               v_eff_big(p, 2 * h)};
    TaylorCoefficients c;
    c.c0 = static_cast<double>(f[2]);
    c.c1 = static_cast<double>((f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h));
    c.c2 = static_cast<double>((-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h) / 2);
    c.c3 = static_cast<double>((-f[0] + 2 * f[1] - 2 * f[3] + f[4]) / (2 * h * h * h) / 6);
    c.c4 = static_cast<double>((f[0] - 4 * f[1] + 6 * f[2] - 4 * f[3] + f[4]) / (h * h * h * h) / 24);
    return c;
}

inline std::array<double, 5> as_array(const TaylorCoefficients& c) { return {c.c0, c.c1, c.c2, c.c3, c.c4}; }

}  // namespace aqrm::test
