#pragma once

#include <string>

#include "quatks/rational.hpp"

namespace quatks {

// Rational quaternion algebra (a,b | Q): basis 1, i, j, k with
// i^2 = a, j^2 = b, k = ij = -ji.
struct QuatAlgebra {
    Rat a;
    Rat b;

    QuatAlgebra(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0 || b == 0)
            throw std::invalid_argument("quaternion algebra needs nonzero a, b");
    }

    bool operator==(const QuatAlgebra& o) const { return a == o.a && b == o.b; }
};

// Element x0 + x1 i + x2 j + x3 k with exact rational coordinates.
struct QuatElement {
    QuatAlgebra alg;
    Vec4 x;  // coordinates over (1, i, j, k)

    QuatElement(QuatAlgebra alg_, Vec4 x_) : alg(std::move(alg_)), x(std::move(x_)) {}
    QuatElement(QuatAlgebra alg_, Rat x0, Rat x1, Rat x2, Rat x3)
        : alg(std::move(alg_)), x{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

    static QuatElement one(const QuatAlgebra& alg) { return {alg, 1, 0, 0, 0}; }
    static QuatElement scalar(const QuatAlgebra& alg, const Rat& c) {
        return {alg, c, 0, 0, 0};
    }

    bool is_zero() const { return x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0; }
    bool operator==(const QuatElement& o) const { return alg == o.alg && x == o.x; }

    std::string str() const;
};

QuatElement operator+(const QuatElement& p, const QuatElement& q);
QuatElement operator-(const QuatElement& p, const QuatElement& q);
QuatElement operator-(const QuatElement& q);
QuatElement operator*(const QuatElement& p, const QuatElement& q);
QuatElement operator*(const Rat& c, const QuatElement& q);

// Main involution: x0 - x1 i - x2 j - x3 k.
QuatElement conjugate_main(const QuatElement& q);

// trd(q) = q + conj(q) = 2 x0.
Rat reduced_trace(const QuatElement& q);

// nrd(q) = q * conj(q) = x0^2 - a x1^2 - b x2^2 + ab x3^2.
Rat reduced_norm(const QuatElement& q);

// Inverse conj(q)/nrd(q); throws std::domain_error for nrd(q) == 0.
QuatElement inverse(const QuatElement& q);

}  // namespace quatks
