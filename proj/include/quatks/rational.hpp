#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace quatks {

using Rat = mpq_class;
using Int = mpz_class;

using Vec4 = std::array<Rat, 4>;
using Mat4 = std::array<std::array<Rat, 4>, 4>;

// Parse "n" or "n/d" (optional sign, arbitrary precision). Throws on
// malformed input or zero denominator.
Rat parse_rational(const std::string& s);

// Inverse of parse_rational: "n" when the denominator is 1, else "n/d".
std::string format_rational(const Rat& q);

// Tolerates non-canonical input like mpq_class(8, 2).
inline bool is_integer(const Rat& q) {
    if (q.get_den() == 1) return true;
    Rat c = q;
    c.canonicalize();
    return c.get_den() == 1;
}

// Exact determinant by Gaussian elimination with exact pivots.
Rat det4(const Mat4& m);

// Solve m * x = rhs exactly. Throws std::domain_error on singular m.
Vec4 solve4(const Mat4& m, const Vec4& rhs);

inline Mat4 zeros4() {
    Mat4 m;
    for (auto& row : m)
        for (auto& e : row) e = 0;
    return m;
}

}  // namespace quatks
