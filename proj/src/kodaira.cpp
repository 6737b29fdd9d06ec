#include "quatks/kodaira.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace quatks {

namespace {

constexpr double kPi = std::numbers::pi;

// adjugate = degree-2 main involution on M_2(R)
Mat2d adj2(const Mat2d& m) { return {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}; }

Mat2d mul2(const Mat2d& a, const Mat2d& b) {
    Mat2d r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

double tr2(const Mat2d& m) { return m[0][0] + m[1][1]; }

Mat2d unit(int r, int c) {
    Mat2d m{};
    m[r][c] = 1.0;
    return m;
}

}  // namespace

MuMatrix mu_matrix(const RealEmbedding& emb, const MuElement& mu, double tol) {
    Mat2d s = emb.apply(mu.mu);
    MuMatrix m{s[0][0], s[0][1], s[1][0], s[1][1], mu.d_B.get_d()};
    double scale = std::max({1.0, std::abs(m.a), std::abs(m.b), std::abs(m.c),
                             std::abs(m.d)});
    if (std::abs(m.a + m.d) > tol * scale)
        throw std::domain_error("sigma(mu) is not trace-free");
    if (std::abs(m.det() - m.d_B) > tol * std::max(1.0, m.d_B))
        throw std::domain_error("det sigma(mu) != d_B");
    return m;
}

std::pair<Mat2d, Mat2d> solve_beta(const MuMatrix& mu) {
    double det = mu.det();
    if (det == 0) throw std::invalid_argument("solve_beta needs invertible mu");
    Mat2d mu_inv = {{{mu.d / det, -mu.b / det}, {-mu.c / det, mu.a / det}}};

    auto solve_one = [&](int j) {
        // Unknown beta (row-major entries t0..t3); one equation per matrix
        // unit beta': tr(mu^-1 beta adj(beta')) = entry (j,1) of beta'.
        double A[4][4];
        double rhs[4];
        int eq = 0;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                Mat2d bp = unit(r, c);
                for (int t = 0; t < 4; ++t) {
                    Mat2d basis = unit(t / 2, t % 2);
                    A[eq][t] = tr2(mul2(mul2(mu_inv, basis), adj2(bp)));
                }
                rhs[eq] = (r == j && c == 0) ? 1.0 : 0.0;
                ++eq;
            }
        // partial-pivot gaussian elimination
        for (int col = 0; col < 4; ++col) {
            int pivot = col;
            for (int row = col + 1; row < 4; ++row)
                if (std::abs(A[row][col]) > std::abs(A[pivot][col])) pivot = row;
            if (A[pivot][col] == 0.0)
                throw std::domain_error("beta system is singular");
            if (pivot != col) {
                for (int k = 0; k < 4; ++k) std::swap(A[pivot][k], A[col][k]);
                std::swap(rhs[pivot], rhs[col]);
            }
            for (int row = col + 1; row < 4; ++row) {
                double f = A[row][col] / A[col][col];
                for (int k = col; k < 4; ++k) A[row][k] -= f * A[col][k];
                rhs[row] -= f * rhs[col];
            }
        }
        double x[4];
        for (int row = 3; row >= 0; --row) {
            double acc = rhs[row];
            for (int k = row + 1; k < 4; ++k) acc -= A[row][k] * x[k];
            x[row] = acc / A[row][row];
        }
        return Mat2d{{{x[0], x[1]}, {x[2], x[3]}}};
    };

    return {solve_one(0), solve_one(1)};
}

std::array<KSImage, 2> ks_images(const MuMatrix& mu) {
    Cplx pref = 1.0 / (2.0 * kPi * Cplx(0.0, 1.0));
    KSImage dz1{pref, Cplx(mu.b), Cplx(mu.d)};
    KSImage dz2{pref, Cplx(-mu.a), Cplx(-mu.c)};
    return {dz1, dz2};
}

Cplx psi_constant(const MuMatrix& mu, double tol) {
    double det = mu.det();
    if (std::abs(det - mu.d_B) > tol * std::max(1.0, mu.d_B)) {
        std::ostringstream os;
        os << "psi constant: det sigma(mu) = " << det << " but d_B = " << mu.d_B;
        throw std::domain_error(os.str());
    }
    Cplx two_pi_i(0.0, 2.0 * kPi);
    return det / (two_pi_i * two_pi_i);
}

IdentityCheck check_metric_identity(Cplx tau, const Int& d_B, double tol) {
    IdentityCheck out;
    double im = tau.imag();
    out.lhs = d_B.get_d() * im * im / (kPi * kPi);
    double psi_abs = d_B.get_d() / (4.0 * kPi * kPi);
    double pet = petersson_norm(tau);
    out.rhs = psi_abs * pet * pet;
    out.rel_err = std::abs(out.lhs - out.rhs) / std::max(std::abs(out.rhs), 1e-300);
    out.pass = out.rel_err <= tol;
    return out;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace quatks
