#pragma once

#include "quatks/riemann.hpp"

namespace quatks {

// sigma(mu) = [[a,b],[c,d]] together with the discriminant it should square
// to: trace 0 and ad - bc = d_B (so sigma(mu)^2 = -d_B by Cayley-Hamilton).
struct MuMatrix {
    double a, b, c, d;
    double d_B;

    double det() const { return a * d - b * c; }
};

MuMatrix mu_matrix(const RealEmbedding& emb, const MuElement& mu, double tol = 1e-9);

// Kodaira-Spencer image of dz_j: prefactor * (c1 d/dz1 + c2 d/dz2) (x) dtau.
struct KSImage {
    Cplx prefactor;  // +-1/(2 pi i)
    Cplx c1, c2;
};

// Solves the 4x4 linear system tr(mu^-1 beta_j conj2(beta')) = l_{j1}(beta')
// over the matrix units beta' (conj2 = adjugate, the degree-2 main
// involution). Closed forms: beta_1 = [[0,b],[0,d]], beta_2 = [[0,-a],[0,-c]].
std::pair<Mat2d, Mat2d> solve_beta(const MuMatrix& mu);

// Images of dz1 and dz2: coefficients (b,d) resp. (-a,-c), both with the
// prefactor 1/(2 pi i).
std::array<KSImage, 2> ks_images(const MuMatrix& mu);

// psi((dz1 ^ dz2)^(x)2) = (ad - bc)/(2 pi i)^2 (dtau)^(x)2; the scalar here.
// Throws if |det - d_B| exceeds tol relative.
Cplx psi_constant(const MuMatrix& mu, double tol = 1e-9);

struct IdentityCheck {
    double lhs = 0, rhs = 0, rel_err = 0;
    bool pass = false;
};

// Faltings-vs-Petersson: d_B Im(tau)^2 / pi^2 == |psi| * (2 Im tau)^2.
IdentityCheck check_metric_identity(Cplx tau, const Int& d_B, double tol = 1e-12);

// Exact integer squareness (used to note that d_B/(2 pi i)^2 has no square
// root of the form n/(2 pi i) with n an integer unless d_B is a square).
bool is_perfect_square(const Int& n);

}  // namespace quatks
