#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quatks/riemann.hpp"
#include "support/helpers.hpp"

using namespace quatks;
using testsupport::Gen;

namespace {

QuatElement el(const QuatAlgebra& A, long x0, long x1, long x2, long x3) {
    return QuatElement(A, Rat(x0), Rat(x1), Rat(x2), Rat(x3));
}

std::array<QuatElement, 4> maximal_basis(const QuatAlgebra& A) {
    return {QuatElement::one(A), el(A, 0, 1, 0, 0), el(A, 0, 0, 1, 0),
            QuatElement(A, Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2))};
}

std::array<QuatElement, 4> m2z_basis(const QuatAlgebra& A) {
    return {QuatElement(A, Rat(1, 2), Rat(1, 2), 0, 0), QuatElement(A, Rat(1, 2), Rat(-1, 2), 0, 0),
            QuatElement(A, 0, 0, Rat(1, 2), Rat(1, 2)), QuatElement(A, 0, 0, Rat(1, 2), Rat(-1, 2))};
}

struct Fixture {
    QuatAlgebra A;
    Order o;
    MuElement mu;
};

Fixture disc6() {
    QuatAlgebra A(Rat(-1), Rat(3));
    return {A, Order(A, maximal_basis(A)), MuElement(el(A, 0, 3, 1, 0), Int(6))};
}

Fixture disc1() {
    QuatAlgebra A(Rat(1), Rat(1));
    return {A, Order(A, m2z_basis(A)), MuElement(el(A, 0, 0, 0, 1), Int(1))};
}

Fixture disc14() {
    QuatAlgebra A(Rat(-1), Rat(7));
    return {A, Order(A, maximal_basis(A)), MuElement(el(A, 0, 7, 1, 2), Int(14))};
}

double mat_abs_diff(const Mat2d& x, const Mat2d& y) {
    double m = 0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m = std::max(m, std::abs(x[r][c] - y[r][c]));
    return m;
}

Mat2d mat_mul(const Mat2d& x, const Mat2d& y) {
    Mat2d z{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int t = 0; t < 2; ++t) z[r][c] += x[r][t] * y[t][c];
    return z;
}

}  // namespace

TEST_CASE("riemann gram matrices are integral, alternating, unimodular") {
    for (const Fixture& f : {disc1(), disc6(), disc14()}) {
        SymplecticGram g = riemann_gram(f.o, f.mu);
        CHECK(g.is_skew());
        CHECK(g.det() == 1);
        for (int i = 0; i < 4; ++i) CHECK(g.m[i][i] == 0);
    }
}

TEST_CASE("gram matrix matches the defining pairing on random lattice points") {
    Gen gen(17);
    Fixture f = disc6();
    SymplecticGram g = riemann_gram(f.o, f.mu);
    for (int trial = 0; trial < 60; ++trial) {
        std::array<long, 4> c1{}, c2{};
        for (int t = 0; t < 4; ++t) {
            c1[t] = gen.irange(-5, 5);
            c2[t] = gen.irange(-5, 5);
        }
        QuatElement q1 = QuatElement::scalar(f.A, 0), q2 = q1;
        for (int t = 0; t < 4; ++t) {
            q1 = q1 + Rat(c1[t]) * f.o.basis()[t];
            q2 = q2 + Rat(c2[t]) * f.o.basis()[t];
        }
        Rat pairing = -reduced_trace(f.mu.mu_inverse() * q1 * conjugate_main(q2));
        Int via_gram = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) via_gram += g.m[i][j] * c1[i] * c2[j];
        CHECK(Rat(via_gram) == pairing);
        // Alternating: pairing of q with itself vanishes.
        CHECK(reduced_trace(f.mu.mu_inverse() * q1 * conjugate_main(q1)) == 0);
    }
}

TEST_CASE("gram entries stay integral on sublattices; determinant sees the index") {
    QuatAlgebra A(Rat(-1), Rat(3));
    MuElement mu(el(A, 0, 3, 1, 0), Int(6));
    std::array<QuatElement, 4> lipschitz = {QuatElement::one(A), el(A, 0, 1, 0, 0),
                                            el(A, 0, 0, 1, 0), el(A, 0, 0, 0, 1)};
    SymplecticGram g = riemann_gram(Order(A, lipschitz), mu);
    CHECK(g.is_skew());
    CHECK(g.det() == 4);  // (index 2)^2
}

TEST_CASE("riemann gram rejects lattices where the form is fractional") {
    QuatAlgebra A(Rat(-1), Rat(3));
    MuElement mu(el(A, 0, 3, 1, 0), Int(6));
    std::array<QuatElement, 4> bad = {QuatElement::one(A), el(A, 0, 1, 0, 0), el(A, 0, 0, 1, 0),
                                      QuatElement(A, 0, 0, 0, Rat(1, 2))};
    CHECK_THROWS_AS((void)riemann_gram(Order(A, bad), mu), std::domain_error);
    try {
        (void)riemann_gram(Order(A, bad), mu);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("not integral") != std::string::npos);
    }
}

TEST_CASE("real embedding is an algebra homomorphism") {
    Gen gen(123);
    for (const auto& A :
         {QuatAlgebra(Rat(1), Rat(1)), QuatAlgebra(Rat(-1), Rat(3)), QuatAlgebra(Rat(2), Rat(-5)),
          QuatAlgebra(Rat(-1), Rat(7)), QuatAlgebra(Rat(3), Rat(7))}) {
        RealEmbedding emb = real_embedding(A);
        for (int trial = 0; trial < 30; ++trial) {
            QuatElement p = gen.quat(A), q = gen.quat(A);
            Mat2d lhs = emb.apply(p * q);
            Mat2d rhs = mat_mul(emb.apply(p), emb.apply(q));
            CHECK(mat_abs_diff(lhs, rhs) < 1e-9);
            // Reduced trace and norm become trace and determinant.
            Mat2d m = emb.apply(p);
            CHECK(std::abs(m[0][0] + m[1][1] - reduced_trace(p).get_d()) < 1e-9);
            CHECK(std::abs(m[0][0] * m[1][1] - m[0][1] * m[1][0] - reduced_norm(p).get_d()) <
                  1e-9);
        }
    }
}

TEST_CASE("real embedding picks the split generator") {
    // a = 1 > 0: i goes diagonal.
    RealEmbedding e1 = real_embedding(QuatAlgebra(Rat(1), Rat(1)));
    CHECK(e1.img_i[0][0] == doctest::Approx(1.0));
    CHECK(e1.img_i[1][1] == doctest::Approx(-1.0));
    CHECK(e1.img_j[0][1] == doctest::Approx(1.0));
    CHECK(e1.img_j[1][0] == doctest::Approx(1.0));
    // a = -1 < 0 < b: j goes diagonal instead.
    RealEmbedding e2 = real_embedding(QuatAlgebra(Rat(-1), Rat(3)));
    CHECK(e2.img_j[0][0] == doctest::Approx(std::sqrt(3.0)));
    CHECK(e2.img_j[1][1] == doctest::Approx(-std::sqrt(3.0)));
    // Definite algebras cannot be embedded in M_2(R).
    CHECK_THROWS_AS((void)real_embedding(QuatAlgebra(Rat(-1), Rat(-1))), std::invalid_argument);
}

TEST_CASE("period lattice requires tau in the upper half plane") {
    Fixture f = disc6();
    RealEmbedding emb = real_embedding(f.A);
    CHECK_THROWS_AS((void)period_lattice(f.o, emb, Cplx(0.0, -1.0)), std::invalid_argument);
    CHECK_THROWS_AS((void)period_lattice(f.o, emb, Cplx(2.0, 0.0)), std::invalid_argument);
}

TEST_CASE("covolume equals Im(tau)^2 d_B") {
    Gen gen(2024);
    for (const Fixture& f : {disc1(), disc6(), disc14()}) {
        RealEmbedding emb = real_embedding(f.A);
        Int d = reduced_discriminant(f.o);
        for (int trial = 0; trial < 40; ++trial) {
            Cplx tau(gen.uniform(-2, 2), gen.uniform(0.1, 10));
            double cov = covolume(period_lattice(f.o, emb, tau));
            double expect = tau.imag() * tau.imag() * d.get_d();
            CHECK(std::abs(cov - expect) <= 1e-9 * expect);
        }
    }
}

TEST_CASE("covolume scales by |Im|^2 between tau = i and tau = 2i") {
    Fixture f = disc6();
    RealEmbedding emb = real_embedding(f.A);
    double c1 = covolume(period_lattice(f.o, emb, Cplx(0, 1)));
    double c2 = covolume(period_lattice(f.o, emb, Cplx(0, 2)));
    CHECK(c2 == doctest::Approx(4.0 * c1).epsilon(1e-12));
    CHECK(c1 == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("covolume is invariant under conjugating the splitting") {
    Fixture f = disc6();
    RealEmbedding emb = real_embedding(f.A);
    const Mat2d mats[] = {
        {{{1, 1}, {0, 1}}},        // unipotent
        {{{0, 1}, {1, 0}}},        // swap, det -1
        {{{2, 0}, {0, 0.5}}},      // diagonal, det 1
        {{{1, 0}, {0.5, 1}}},      // lower unipotent
    };
    Cplx tau(0.7, 1.3);
    double base = covolume(period_lattice(f.o, emb, tau));
    for (const Mat2d& c : mats) {
        RealEmbedding emb2 = conjugate_embedding(emb, c);
        double cov = covolume(period_lattice(f.o, emb2, tau));
        CHECK(cov == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("faltings norm: closed form vs lattice computation") {
    Gen gen(808);
    for (const Fixture& f : {disc1(), disc6(), disc14()}) {
        RealEmbedding emb = real_embedding(f.A);
        Int d = reduced_discriminant(f.o);
        for (int trial = 0; trial < 30; ++trial) {
            Cplx tau(gen.uniform(-2, 2), gen.uniform(0.1, 10));
            double closed = faltings_norm_sq_closed(tau, d);
            double numeric = faltings_norm_sq_numeric(period_lattice(f.o, emb, tau));
            CHECK(numeric == doctest::Approx(closed).epsilon(1e-9));
        }
    }
    CHECK(petersson_norm(Cplx(0.3, 1.7)) == doctest::Approx(3.4));
}

TEST_CASE("positivity holds for exactly one sign of mu") {
    for (const Fixture& f : {disc1(), disc6(), disc14()}) {
        RealEmbedding emb = real_embedding(f.A);
        Cplx tau(0.3, 1.7);
        PositivityResult res = check_positivity(f.o, f.mu, emb, tau, 500, 42);
        CHECK(res.ok());
        CHECK(res.min_value > 0);
        MuElement flipped(-f.mu.mu, f.mu.d_B);
        PositivityResult res2 = check_positivity(f.o, flipped, emb, tau, 500, 42);
        CHECK(res2.ok());
        CHECK(res2.sign == -res.sign);
    }
}

TEST_CASE("positivity is stable across tau and seeds") {
    Fixture f = disc6();
    RealEmbedding emb = real_embedding(f.A);
    Gen gen(5150);
    for (int trial = 0; trial < 10; ++trial) {
        Cplx tau(gen.uniform(-2, 2), gen.uniform(0.1, 10));
        PositivityResult res = check_positivity(f.o, f.mu, emb, tau, 200, 1000 + trial);
        CHECK(res.ok());
    }
}
