#include "aqrm/model.hpp"

#include <cmath>
#include <string>

#include "aqrm/error.hpp"

namespace aqrm {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid_input";
        case ErrorKind::SolverFailure: return "solver_failure";
        case ErrorKind::PreconditionViolation: return "precondition_violation";
    }
    return "unknown";
}

ModelParams::ModelParams(double delta, double g, double eta) : delta_(delta), g_(g), eta_(eta) {
    if (!std::isfinite(delta) || !std::isfinite(g) || !std::isfinite(eta)) {
        throw InvalidInputError("model parameters must be finite");
    }
    if (!(delta > 0.0)) throw InvalidInputError("delta must be > 0, got " + std::to_string(delta));
    if (g < 0.0) throw InvalidInputError("g must be >= 0, got " + std::to_string(g));
    if (eta < 0.0) {
        throw InvalidInputError("eta must be >= 0 (negative eta is the mirror image), got " +
                                std::to_string(eta));
    }
}

double ModelParams::beta() const noexcept { return 2.0 * std::sqrt(2.0) * g_ / delta_; }

double ModelParams::g_c() const noexcept { return coupling_scale(delta_); }

double ModelParams::bias_at(double xi) const noexcept { return std::sqrt(2.0) * g_ * xi + eta_; }

double coupling_scale(double delta) noexcept {
    return std::sqrt(1.0 + std::sqrt(1.0 + delta * delta / 16.0));
}

std::string_view to_string(Branch b) noexcept {
    return b == Branch::Negative ? "negative" : "positive";
}

Branch parse_branch(std::string_view s) {
    if (s == "neg" || s == "negative") return Branch::Negative;
    if (s == "pos" || s == "positive") return Branch::Positive;
    throw InvalidInputError("unknown branch '" + std::string(s) + "' (expected neg|pos)");
}

Matrix2 spin_hamiltonian(const ModelParams& params, double xi) noexcept {
    const double d = params.bias_at(xi);
    const double off = 0.5 * params.delta();
    return {{{d, off}, {off, -d}}};
}

double epsilon(const ModelParams& params, Branch branch, double xi) noexcept {
    const double d = params.bias_at(xi);
    const double r = std::hypot(d, 0.5 * params.delta());
    return branch == Branch::Negative ? -r : r;
}

SpinVector spin_eigenvector(const ModelParams& params, Branch branch, double xi) noexcept {
    const double d = params.bias_at(xi);
    const double half = 0.5 * params.delta();
    const double e = epsilon(params, branch, xi);

    // Both (Δ/2, ε − d) and (ε + d, Δ/2) are eigenvectors; pick the one
    // whose non-constant entry is a sum of like-signed terms.
    double up = 0.0;
    double down = 0.0;
    const bool first_form = (branch == Branch::Negative) ? (d > 0.0) : (d < 0.0);
    if (first_form) {
        up = half;
        down = e - d;
    } else {
        up = e + d;
        down = half;
    }
    const double norm = std::hypot(up, down);
    up /= norm;
    down /= norm;
    if (down < 0.0) {
        up = -up;
        down = -down;
    }
    return {up, down};
}

}  // namespace aqrm
