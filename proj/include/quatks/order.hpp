#pragma once

#include <optional>
#include <vector>

#include "quatks/hilbert.hpp"
#include "quatks/quat.hpp"

namespace quatks {

// Z-lattice of rank 4 in a rational quaternion algebra, given by a basis.
// The constructor only checks linear independence; the full order axioms
// are the business of verify_order.
class Order {
public:
    Order(QuatAlgebra alg, std::array<QuatElement, 4> basis);

    const QuatAlgebra& algebra() const { return alg_; }
    const std::array<QuatElement, 4>& basis() const { return basis_; }

    // Coordinates of q over the lattice basis (exact solve).
    Vec4 coords_of(const QuatElement& q) const;

    QuatElement element_from_coords(const Vec4& c) const;

    // q lies in the lattice, i.e. has integer coordinates.
    bool contains(const QuatElement& q) const;

private:
    QuatAlgebra alg_;
    std::array<QuatElement, 4> basis_;
    Mat4 coord_mat_;  // columns = basis coordinates over (1,i,j,k)
};

// Outcome of the order axioms, one flag per axiom plus a human-readable
// witness for the first failure.
struct OrderReport {
    bool independent = false;
    bool contains_one = false;
    bool closed = false;
    bool trace_integral = false;
    bool norm_integral = false;
    std::string witness;

    bool ok() const {
        return independent && contains_one && closed && trace_integral && norm_integral;
    }
};

OrderReport verify_order(const QuatAlgebra& alg, const std::array<QuatElement, 4>& basis);

// Reduced discriminant D: D^2 = |det(trd(e_i e_j))|. Throws std::domain_error
// if the determinant is not the square of an integer (i.e. not an order).
Int reduced_discriminant(const Order& o);

// |det(trd(e_i conj(e_j)))| = #(O^# / O) under the pairing (x,y) -> trd(x conj(y)).
// Equals reduced_discriminant(o)^2.
Int dual_lattice_index(const Order& o);

// Maximality via reduced_discriminant(o) == discriminant of the algebra.
bool is_maximal(const Order& o);

// Polarization element: mu in O with trd(mu) = 0 and nrd(mu) = d_B,
// equivalently mu^2 = -d_B.
struct MuElement {
    QuatElement mu;
    Int d_B;

    MuElement(QuatElement m, Int d);
    QuatElement mu_inverse() const;  // -mu / d_B
};

// Search for mu by coordinates over the order basis, each coordinate running
// through 0, 1, -1, 2, -2, ... up to |c| <= bound; first hit in that
// lexicographic order wins (deterministic). Default bound: d_B.
// Requires an indefinite algebra and a maximal order.
std::optional<MuElement> find_mu(const Order& o,
                                 std::optional<long> bound = std::nullopt);

// Positive involution beta -> mu^-1 conj(beta) mu.
QuatElement star_involution(const QuatElement& q, const MuElement& mu);

// The star involution maps the order into itself.
bool check_star_stabilizes(const Order& o, const MuElement& mu);

}  // namespace quatks
