#pragma once

#include <vector>

#include "quatks/quat.hpp"

namespace quatks {

// A place of Q: the real place or a finite prime p.
struct Place {
    bool finite;
    Int p;  // meaningful only when finite

    static Place real() { return {false, 0}; }
    static Place prime(Int p_) { return {true, std::move(p_)}; }

    bool operator==(const Place& o) const {
        return finite == o.finite && (!finite || p == o.p);
    }
    std::string str() const { return finite ? p.get_str() : "inf"; }
};

// Hilbert symbol (a,b)_v in {+1,-1}: +1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution over the completion at v. Legendre-symbol formula at
// odd p, unit-class formula at 2, sign test at the real place.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Places where (a,b)_v = -1. Always an even number of them (and the result
// is asserted even); finite places sorted by p, real place last if present.
std::vector<Place> ramified_places(const Rat& a, const Rat& b);

// Reduced discriminant d_B of (a,b | Q): the (squarefree) product of the
// finite ramified primes. 1 for the matrix algebra.
Int discriminant(const QuatAlgebra& alg);

// True iff B is split at the real place, i.e. B (x) R = M_2(R).
inline bool is_indefinite(const QuatAlgebra& alg) { return alg.a > 0 || alg.b > 0; }

}  // namespace quatks
