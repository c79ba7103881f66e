#include <doctest.h>

#include <cmath>

#include "aqrm/error.hpp"
#include "aqrm/model.hpp"
#include "aqrm/numerics.hpp"
#include "test_support.hpp"

using namespace aqrm;
using aqrm::test::close;

namespace {
const double kDZeroXi = -0.5 / (2.0 * std::sqrt(2.0));  // d(ξ) = 0 for g = 2, η = 0.5
}

TEST_CASE("model parameters are validated") {
    CHECK_NOTHROW(ModelParams(10.0, 0.0, 0.0));
    CHECK_THROWS_AS(ModelParams(0.0, 1.0, 0.0), InvalidInputError);
    CHECK_THROWS_AS(ModelParams(-1.0, 1.0, 0.0), InvalidInputError);
    CHECK_THROWS_AS(ModelParams(10.0, -0.1, 0.0), InvalidInputError);
    CHECK_THROWS_AS(ModelParams(10.0, 1.0, -0.5), InvalidInputError);
    CHECK_THROWS_AS(ModelParams(10.0, NAN, 0.0), InvalidInputError);
}

TEST_CASE("derived beta and g_c follow the parameters") {
    const ModelParams p(10.0, 2.0, 0.5);
    CHECK(p.beta() == doctest::Approx(2.0 * std::sqrt(2.0) * 2.0 / 10.0).epsilon(1e-15));
    CHECK(p.g_c() == doctest::Approx(1.921609326467597).epsilon(1e-14));
    const ModelParams q = p.with_g(3.0);
    CHECK(q.beta() == doctest::Approx(2.0 * std::sqrt(2.0) * 3.0 / 10.0).epsilon(1e-15));
    CHECK(q.g_c() == p.g_c());
}

TEST_CASE("spin_hamiltonian entries") {
    const auto a = spin_hamiltonian(ModelParams(10.0, 0.0, 0.0), 1.3);
    CHECK(a[0][0] == 0.0);
    CHECK(a[1][1] == 0.0);
    CHECK(a[0][1] == 5.0);
    CHECK(a[1][0] == 5.0);

    const auto b = spin_hamiltonian(ModelParams(10.0, 1.0, 0.5), 0.0);
    CHECK(b[0][0] == 0.5);
    CHECK(b[1][1] == -0.5);
    CHECK(b[0][1] == b[1][0]);

    const auto c = spin_hamiltonian(ModelParams(10.0, 2.0, 0.5), kDZeroXi);
    CHECK(close(c[0][0], 0.0, 1e-15));
    CHECK(close(c[1][1], 0.0, 1e-15));
    CHECK(c[0][1] == 5.0);
}

TEST_CASE("epsilon examples") {
    CHECK(epsilon(ModelParams(10.0, 3.7, 0.0), Branch::Negative, 0.0) == -5.0);
    CHECK(close(epsilon(ModelParams(10.0, 2.0, 0.5), Branch::Positive, kDZeroXi), 5.0, 1e-14));

    // Decoupled limit: ε_− is constant and equals the lower eigenvalue of the
    // 2×2 matrix, which is diagonalized independently here.
    const ModelParams decoupled(10.0, 0.0, 0.5);
    const double closed_form = -std::sqrt(0.25 + 25.0);
    for (const double xi : {-7.0, 0.0, 2.5}) {
        CHECK(close(epsilon(decoupled, Branch::Negative, xi), closed_form, 1e-14));
        const auto h = spin_hamiltonian(decoupled, xi);
        Matrix m(2, 2);
        m << h[0][0], h[0][1], h[1][0], h[1][1];
        CHECK(close(sym_eigen(m).values(0), closed_form, 1e-13));
    }
    CHECK(close(closed_form, -5.0249378105604451, 1e-15));
}

TEST_CASE("spin eigenvectors at the d = 0 point") {
    const ModelParams p(10.0, 2.0, 0.5);
    const double r = 1.0 / std::sqrt(2.0);
    const SpinVector plus = spin_eigenvector(p, Branch::Positive, kDZeroXi);
    CHECK(close(plus.up, r, 1e-14));
    CHECK(close(plus.down, r, 1e-14));
    const SpinVector minus = spin_eigenvector(p, Branch::Negative, kDZeroXi);
    CHECK(close(minus.up, -r, 1e-14));
    CHECK(close(minus.down, r, 1e-14));
}

namespace {

double residual(const ModelParams& p, Branch b, double xi) {
    const auto h = spin_hamiltonian(p, xi);
    const SpinVector v = spin_eigenvector(p, b, xi);
    const double e = epsilon(p, b, xi);
    const double r0 = h[0][0] * v.up + h[0][1] * v.down - e * v.up;
    const double r1 = h[1][0] * v.up + h[1][1] * v.down - e * v.down;
    return std::max(std::abs(r0), std::abs(r1));
}

}  // namespace

TEST_CASE("spin eigenvector residual at xi = 3") {
    const ModelParams p(10.0, 2.0, 0.5);
    CHECK(residual(p, Branch::Negative, 3.0) < 1e-12);
    CHECK(residual(p, Branch::Positive, 3.0) < 1e-12);
}

TEST_CASE("spin-sector properties over random draws") {
    aqrm::test::ParamGenerator gen(20240917);
    for (int i = 0; i < 1000; ++i) {
        const ModelParams p = gen.params();
        const double xi = gen.uniform(-30.0, 30.0);
        const double scale = std::max(1.0, std::abs(epsilon(p, Branch::Positive, xi)));
        CAPTURE(p.delta());
        CAPTURE(p.g());
        CAPTURE(p.eta());
        CAPTURE(xi);

        CHECK(epsilon(p, Branch::Negative, xi) == -epsilon(p, Branch::Positive, xi));
        CHECK(std::abs(epsilon(p, Branch::Positive, xi)) >= 0.5 * p.delta());
        CHECK(residual(p, Branch::Negative, xi) < 1e-12 * scale);
        CHECK(residual(p, Branch::Positive, xi) < 1e-12 * scale);

        const SpinVector a = spin_eigenvector(p, Branch::Negative, xi);
        const SpinVector b = spin_eigenvector(p, Branch::Positive, xi);
        CHECK(std::abs(a.up * a.up + a.down * a.down - 1.0) < 1e-12);
        CHECK(std::abs(a.up * b.up + a.down * b.down) < 1e-12);
        CHECK(a.down > 0.0);
        CHECK(b.down > 0.0);

        const ModelParams symmetric(p.delta(), p.g(), 0.0);
        CHECK(epsilon(symmetric, Branch::Negative, xi) == epsilon(symmetric, Branch::Negative, -xi));
    }
}

TEST_CASE("equality in |epsilon| >= delta/2 only at d = 0") {
    const ModelParams p(10.0, 2.0, 0.5);
    CHECK(std::abs(epsilon(p, Branch::Negative, kDZeroXi)) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(std::abs(epsilon(p, Branch::Negative, kDZeroXi + 1e-3)) > 5.0);
}

TEST_CASE("spin eigenvector is continuous in xi") {
    const ModelParams p(10.0, 2.0, 0.5);
    for (const Branch b : {Branch::Negative, Branch::Positive}) {
        SpinVector prev = spin_eigenvector(p, b, -20.0);
        for (int i = 1; i <= 40000; ++i) {
            const double xi = -20.0 + 40.0 * i / 40000;
            const SpinVector v = spin_eigenvector(p, b, xi);
            REQUIRE(std::abs(v.up - prev.up) + std::abs(v.down - prev.down) < 5e-3);
            prev = v;
        }
    }
}

TEST_CASE("branch names") {
    CHECK(parse_branch("neg") == Branch::Negative);
    CHECK(parse_branch("positive") == Branch::Positive);
    CHECK_THROWS_AS(parse_branch("up"), InvalidInputError);
}
