#include "quatks/riemann.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace quatks {

namespace {

Mat2d mat2_mul(const Mat2d& a, const Mat2d& b) {
    Mat2d r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2d mat2_inv(const Mat2d& a) {
    double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det == 0) throw std::invalid_argument("singular 2x2 matrix");
    return {{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
}

// det and solve for small real systems (partial pivoting).
double det4d(std::array<std::array<double, 4>, 4> a) {
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 4; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        if (a[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int row = col + 1; row < 4; ++row) {
            double f = a[row][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
        }
    }
    return det;
}

std::array<double, 4> solve4d(std::array<std::array<double, 4>, 4> a,
                              std::array<double, 4> b) {
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 4; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        if (a[pivot][col] == 0.0) throw std::domain_error("singular real system");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (int row = col + 1; row < 4; ++row) {
            double f = a[row][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::array<double, 4> x{};
    for (int row = 3; row >= 0; --row) {
        double acc = b[row];
        for (int k = row + 1; k < 4; ++k) acc -= a[row][k] * x[k];
        x[row] = acc / a[row][row];
    }
    return x;
}

}  // namespace

Int SymplecticGram::det() const {
    Mat4 q;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q[i][j] = Rat(m[i][j]);
    Rat d = det4(q);
    return d.get_num();
}

bool SymplecticGram::is_skew() const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m[i][j] != -m[j][i]) return false;
    return true;
}

SymplecticGram riemann_gram(const Order& o, const MuElement& mu) {
    SymplecticGram g;
    QuatElement mu_inv = mu.mu_inverse();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat e = -reduced_trace(mu_inv * o.basis()[i] * conjugate_main(o.basis()[j]));
            if (!is_integer(e)) {
                std::ostringstream os;
                os << "riemann form is not integral at basis pair (" << i + 1 << "," << j + 1
                   << "): E = " << format_rational(e);
                throw std::domain_error(os.str());
            }
            g.m[i][j] = e.get_num();
        }
    return g;
}

Mat2d RealEmbedding::apply(const QuatElement& q) const {
    double x0 = q.x[0].get_d(), x1 = q.x[1].get_d(), x2 = q.x[2].get_d(),
           x3 = q.x[3].get_d();
    Mat2d r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = x0 * (i == j ? 1.0 : 0.0) + x1 * img_i[i][j] + x2 * img_j[i][j] +
                      x3 * img_k[i][j];
    return r;
}

RealEmbedding real_embedding(const QuatAlgebra& alg) {
    if (!is_indefinite(alg))
        throw std::invalid_argument("real embedding needs an indefinite algebra");
    RealEmbedding emb;
    if (alg.a > 0) {
        double ra = std::sqrt(alg.a.get_d());
        emb.img_i = {{{ra, 0.0}, {0.0, -ra}}};
        emb.img_j = {{{0.0, 1.0}, {alg.b.get_d(), 0.0}}};
    } else {
        double rb = std::sqrt(alg.b.get_d());
        emb.img_j = {{{rb, 0.0}, {0.0, -rb}}};
        emb.img_i = {{{0.0, 1.0}, {alg.a.get_d(), 0.0}}};
    }
    emb.img_k = mat2_mul(emb.img_i, emb.img_j);
    return emb;
}

RealEmbedding conjugate_embedding(const RealEmbedding& emb, const Mat2d& c) {
    Mat2d cinv = mat2_inv(c);
    RealEmbedding out;
    out.img_i = mat2_mul(mat2_mul(c, emb.img_i), cinv);
    out.img_j = mat2_mul(mat2_mul(c, emb.img_j), cinv);
    out.img_k = mat2_mul(mat2_mul(c, emb.img_k), cinv);
    return out;
}

PeriodLattice period_lattice(const Order& o, const RealEmbedding& emb, Cplx tau) {
    if (!(tau.imag() > 0))
        throw std::invalid_argument("period lattice needs Im(tau) > 0");
    PeriodLattice lat;
    lat.tau = tau;
    for (int c = 0; c < 4; ++c) {
        Mat2d s = emb.apply(o.basis()[c]);
        Cplx z1 = s[0][0] * tau + s[0][1];
        Cplx z2 = s[1][0] * tau + s[1][1];
        lat.cols[c] = {z1.real(), z1.imag(), z2.real(), z2.imag()};
    }
    return lat;
}

double covolume(const PeriodLattice& lat) {
    std::array<std::array<double, 4>, 4> m{};
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) m[row][col] = lat.cols[col][row];
    double det = det4d(m);
    if (det == 0.0) throw std::domain_error("period lattice is degenerate");
    return std::abs(det);
}

double faltings_norm_sq_closed(Cplx tau, const Int& d_B) {
    double im = tau.imag();
    return d_B.get_d() * im * im / (std::numbers::pi * std::numbers::pi);
}

double faltings_norm_sq_numeric(const PeriodLattice& lat) {
    return covolume(lat) / (std::numbers::pi * std::numbers::pi);
}

double petersson_norm(Cplx tau) { return 2.0 * tau.imag(); }

PositivityResult check_positivity(const Order& o, const MuElement& mu,
                                  const RealEmbedding& emb, Cplx tau, int samples,
                                  std::uint64_t seed) {
    PeriodLattice lat = period_lattice(o, emb, tau);

    // Column matrix B and the matrix P of multiplication by i on lattice
    // coordinates: P = B^-1 J B with J the complex structure on R^4.
    std::array<std::array<double, 4>, 4> B{};
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) B[row][col] = lat.cols[col][row];
    std::array<std::array<double, 4>, 4> P{};
    for (int col = 0; col < 4; ++col) {
        std::array<double, 4> v = {B[0][col], B[1][col], B[2][col], B[3][col]};
        std::array<double, 4> jv = {-v[1], v[0], -v[3], v[2]};
        std::array<double, 4> pcol = solve4d(B, jv);
        for (int row = 0; row < 4; ++row) P[row][col] = pcol[row];
    }

    SymplecticGram gram;
    try {
        gram = riemann_gram(o, mu);
    } catch (const std::domain_error&) {
        return {};
    }
    std::array<std::array<double, 4>, 4> E{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) E[i][j] = gram.m[i][j].get_d();

    auto sweep = [&](double flip) {
        double min_h = std::numeric_limits<double>::infinity();
        std::mt19937_64 rng(seed);
        auto uniform = [&rng]() {
            return -1.0 + 2.0 * ((rng() >> 11) * 0x1.0p-53);
        };
        for (int t = 0; t < samples; ++t) {
            std::array<double, 4> c{};
            double norm = 0;
            do {
                for (double& v : c) v = uniform();
                norm = c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
            } while (norm < 1e-6);
            // H(z,z) = E(iz, z) = (P c)^t (flip E) c
            std::array<double, 4> pc{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) pc[i] += P[i][j] * c[j];
            double h = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) h += pc[i] * flip * E[i][j] * c[j];
            min_h = std::min(min_h, h);
        }
        return min_h;
    };

    PositivityResult res;
    double with_plus = sweep(1.0);
    if (with_plus > 0) {
        res.sign = 1;
        res.min_value = with_plus;
        return res;
    }
    double with_minus = sweep(-1.0);
    if (with_minus > 0) {
        res.sign = -1;
        res.min_value = with_minus;
    }
    return res;
}

}  // namespace quatks
