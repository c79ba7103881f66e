#include "aqrm/results.hpp"

#include <cmath>
#include <string>

#include "aqrm/error.hpp"
#include "aqrm/numerics.hpp"

namespace aqrm {

std::string_view to_string(Method m) noexcept { return m == Method::BO ? "bo" : "ed"; }

Method parse_method(std::string_view s) {
    if (s == "bo" || s == "BO") return Method::BO;
    if (s == "ed" || s == "ED") return Method::ED;
    throw InvalidInputError("unknown method '" + std::string(s) + "'");
}

double WavefunctionGrid::norm() const { return trapezoid(xi, density()); }

std::vector<double> WavefunctionGrid::density() const {
    std::vector<double> rho(xi.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = up[i] * up[i] + down[i] * down[i];
    return rho;
}

void fix_wavefunction_sign(WavefunctionGrid& wf) {
    double best = 0.0;
    for (std::size_t i = 0; i < wf.xi.size(); ++i) {
        if (std::abs(wf.up[i]) > std::abs(best)) best = wf.up[i];
        if (std::abs(wf.down[i]) > std::abs(best)) best = wf.down[i];
    }
    if (best < 0.0) {
        for (auto& v : wf.up) v = -v;
        for (auto& v : wf.down) v = -v;
    }
}

void check_grid(std::span<const double> grid) {
    if (grid.empty()) throw InvalidInputError("wavefunction grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw InvalidInputError("wavefunction grid has non-finite points");
        if (i > 0 && !(grid[i] > grid[i - 1])) throw InvalidInputError("wavefunction grid must be strictly ascending");
    }
}

}  // namespace aqrm
