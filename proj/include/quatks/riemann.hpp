#pragma once

#include <complex>
#include <cstdint>

#include "quatks/order.hpp"

namespace quatks {

using Mat2d = std::array<std::array<double, 2>, 2>;
using Cplx = std::complex<double>;

// Integer symplectic gram matrix of the Riemann form on an order basis:
// E(e_i (tau,1)^t, e_j (tau,1)^t) = -trd(mu^-1 e_i conj(e_j)).
struct SymplecticGram {
    std::array<std::array<Int, 4>, 4> m;

    Int det() const;
    bool is_skew() const;
};

// Throws std::domain_error naming the offending (i,j) if an entry is not an
// integer (happens for non-maximal lattices / bad mu).
SymplecticGram riemann_gram(const Order& o, const MuElement& mu);

// Fixed splitting B (x) R = M_2(R) for an indefinite algebra:
// if a > 0: i -> diag(sqrt a, -sqrt a), j -> [[0,1],[b,0]];
// otherwise (b > 0) the same recipe with the roles of i and j swapped.
struct RealEmbedding {
    Mat2d img_i;
    Mat2d img_j;
    Mat2d img_k;  // img_i * img_j

    Mat2d apply(const QuatElement& q) const;
};

RealEmbedding real_embedding(const QuatAlgebra& alg);

// sigma' = C sigma C^-1: still an algebra embedding; used to test covolume
// invariance under determinant +-1 conjugation.
RealEmbedding conjugate_embedding(const RealEmbedding& emb, const Mat2d& c);

// Lattice sigma(O)(tau,1)^t in C^2, flattened to R^4 as
// (Re z1, Im z1, Re z2, Im z2) per column.
struct PeriodLattice {
    Cplx tau;
    std::array<std::array<double, 4>, 4> cols;  // cols[c] = flattened column c
};

// Requires Im(tau) > 0.
PeriodLattice period_lattice(const Order& o, const RealEmbedding& emb, Cplx tau);

// |det| of the flattened column matrix; expected Im(tau)^2 * d_B for a
// maximal order.
double covolume(const PeriodLattice& lat);

// Faltings metric of dz1 ^ dz2, closed form: d_B * Im(tau)^2 / pi^2.
double faltings_norm_sq_closed(Cplx tau, const Int& d_B);

// Same quantity from the lattice: covolume / pi^2.
double faltings_norm_sq_numeric(const PeriodLattice& lat);

// Petersson norm of dtau: 2 * Im(tau).
double petersson_norm(Cplx tau);

struct PositivityResult {
    int sign = 0;        // +1 / -1: which of +-mu makes H positive; 0 = neither
    double min_value = 0;  // smallest H(z,z) over the samples for that sign
    bool ok() const { return sign != 0; }
};

// Samples random nonzero real combinations z of the lattice columns and
// checks H(z,z) = E(iz, z) > 0, sweeping mu -> -mu if needed.
PositivityResult check_positivity(const Order& o, const MuElement& mu,
                                  const RealEmbedding& emb, Cplx tau, int samples,
                                  std::uint64_t seed);

}  // namespace quatks
