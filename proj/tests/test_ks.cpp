#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "quatks/kodaira.hpp"
#include "support/helpers.hpp"

using namespace quatks;
using testsupport::Gen;

namespace {

constexpr double PI = std::numbers::pi;

// Random trace-zero matrix with positive determinant Delta: a free, b nonzero,
// c forced by a d - b c = Delta with d = -a.
MuMatrix random_mu(Gen& gen) {
    double a = gen.uniform(-2, 2);
    double b = gen.uniform(0.5, 2.0) * (gen.unit() < 0.5 ? 1 : -1);
    double delta = gen.uniform(0.5, 25.0);
    double c = -(a * a + delta) / b;
    return MuMatrix{a, b, c, -a, delta};
}

// Residual of the defining linear system: for each matrix unit beta' = E_rc,
// tr(mu^-1 beta_j adj(beta')) should equal 1 exactly when (r,c) = (j,1).
double max_residual(const MuMatrix& mu, const Mat2d& beta1, const Mat2d& beta2) {
    const double det = mu.det();
    // mu^-1 = adj(mu)/det with adj [[d,-b],[-c,a]].
    Mat2d inv = {{{mu.d / det, -mu.b / det}, {-mu.c / det, mu.a / det}}};
    auto adj = [](const Mat2d& m) -> Mat2d {
        return {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}};
    };
    auto mul = [](const Mat2d& x, const Mat2d& y) -> Mat2d {
        Mat2d z{};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                for (int t = 0; t < 2; ++t) z[r][c] += x[r][t] * y[t][c];
        return z;
    };
    double worst = 0;
    const Mat2d* betas[2] = {&beta1, &beta2};
    for (int jidx = 0; jidx < 2; ++jidx)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                Mat2d unit{};
                unit[r][c] = 1.0;
                Mat2d prod = mul(mul(inv, *betas[jidx]), adj(unit));
                double lhs = prod[0][0] + prod[1][1];
                double rhs = (r == jidx && c == 0) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(lhs - rhs));
            }
    return worst;
}

}  // namespace

TEST_CASE("solve_beta reproduces the closed forms") {
    Gen gen(314159);
    for (int trial = 0; trial < 200; ++trial) {
        MuMatrix mu = random_mu(gen);
        auto [beta1, beta2] = solve_beta(mu);
        CHECK(std::abs(beta1[0][0]) <= 1e-12);
        CHECK(std::abs(beta1[1][0]) <= 1e-12);
        CHECK(beta1[0][1] == doctest::Approx(mu.b).epsilon(1e-12));
        CHECK(beta1[1][1] == doctest::Approx(mu.d).epsilon(1e-12));
        CHECK(std::abs(beta2[0][0]) <= 1e-12);
        CHECK(std::abs(beta2[1][0]) <= 1e-12);
        CHECK(beta2[0][1] == doctest::Approx(-mu.a).epsilon(1e-12));
        CHECK(beta2[1][1] == doctest::Approx(-mu.c).epsilon(1e-12));
        CHECK(max_residual(mu, beta1, beta2) <= 1e-12);
    }
}

TEST_CASE("solve_beta on the split reference matrix") {
    MuMatrix mu{0, 1, -1, 0, 1};  // [[0,1],[-1,0]], det 1
    auto [beta1, beta2] = solve_beta(mu);
    CHECK(beta1[0][1] == doctest::Approx(1.0));
    CHECK(beta1[1][1] == doctest::Approx(0.0));
    CHECK(beta2[0][1] == doctest::Approx(0.0));
    CHECK(beta2[1][1] == doctest::Approx(1.0));
    CHECK(std::abs(beta1[0][0]) + std::abs(beta1[1][0]) <= 1e-14);
    CHECK(std::abs(beta2[0][0]) + std::abs(beta2[1][0]) <= 1e-14);
}

TEST_CASE("ks images carry the 1/(2 pi i) prefactor and the solved coefficients") {
    Gen gen(777);
    MuMatrix mu = random_mu(gen);
    auto images = ks_images(mu);
    Cplx expected_prefactor(0.0, -1.0 / (2.0 * PI));  // 1/(2 pi i)
    for (const KSImage& im : images) {
        CHECK(std::abs(im.prefactor - expected_prefactor) <= 1e-15);
    }
    CHECK(images[0].c1 == Cplx(mu.b, 0));
    CHECK(images[0].c2 == Cplx(mu.d, 0));
    CHECK(images[1].c1 == Cplx(-mu.a, 0));
    CHECK(images[1].c2 == Cplx(-mu.c, 0));
    // det [[b, -a],[d, -c]] = ad - bc = det(mu).
    double det_coeff = mu.b * (-mu.c) - (-mu.a) * mu.d;
    CHECK(det_coeff == doctest::Approx(mu.det()).epsilon(1e-12));
}

TEST_CASE("psi constant") {
    MuMatrix mu{0, 3, -2, 0, 6};  // det 6
    Cplx psi = psi_constant(mu);
    CHECK(psi.imag() == doctest::Approx(0.0));
    CHECK(psi.real() == doctest::Approx(-6.0 / (4.0 * PI * PI)).epsilon(1e-14));
    CHECK(std::abs(psi) == doctest::Approx(0.15198177546350666).epsilon(1e-12));

    // Declared discriminant must match the determinant.
    MuMatrix wrong{0, 3, -2, 0, 5};
    CHECK_THROWS_AS((void)psi_constant(wrong), std::domain_error);
}

TEST_CASE("psi at d_B = 1 matches the elliptic constant squared") {
    MuMatrix mu{0, 1, -1, 0, 1};
    Cplx psi = psi_constant(mu);
    double elliptic = 1.0 / (2.0 * PI);
    CHECK(std::abs(psi) == doctest::Approx(elliptic * elliptic).epsilon(1e-14));
}

TEST_CASE("metric identity at various tau and discriminants") {
    Gen gen(99);
    for (long d : {1L, 6L, 14L, 22L}) {
        for (int trial = 0; trial < 50; ++trial) {
            Cplx tau(gen.uniform(-2, 2), gen.uniform(0.1, 10));
            IdentityCheck chk = check_metric_identity(tau, Int(d));
            INFO("d_B=", d, " tau=", tau.real(), "+", tau.imag(), "i");
            CHECK(chk.pass);
            CHECK(chk.rel_err <= 1e-12);
            CHECK(chk.lhs == doctest::Approx(d * tau.imag() * tau.imag() / (PI * PI)));
        }
    }
}

TEST_CASE("perfect squares") {
    CHECK(is_perfect_square(Int(0)));
    CHECK(is_perfect_square(Int(1)));
    CHECK(is_perfect_square(Int(4)));
    CHECK(is_perfect_square(Int(144)));
    CHECK_FALSE(is_perfect_square(Int(6)));
    CHECK_FALSE(is_perfect_square(Int(14)));
    CHECK_FALSE(is_perfect_square(Int(22)));
    CHECK_FALSE(is_perfect_square(Int(-4)));
}

TEST_CASE("mu_matrix from the real embedding") {
    QuatAlgebra A(Rat(-1), Rat(3));
    std::array<QuatElement, 4> basis = {QuatElement::one(A), QuatElement(A, 0, 1, 0, 0),
                                        QuatElement(A, 0, 0, 1, 0),
                                        QuatElement(A, Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2))};
    Order o(A, basis);
    MuElement mu(QuatElement(A, 0, 3, 1, 0), Int(6));
    RealEmbedding emb = real_embedding(A);
    MuMatrix m = mu_matrix(emb, mu);
    CHECK(m.a + m.d == doctest::Approx(0.0));
    CHECK(m.det() == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(m.d_B == doctest::Approx(6.0));

    auto [beta1, beta2] = solve_beta(m);
    CHECK(max_residual(m, beta1, beta2) <= 1e-12);
    Cplx psi = psi_constant(m);
    CHECK(std::abs(psi) == doctest::Approx(6.0 / (4.0 * PI * PI)).epsilon(1e-12));
}
