#pragma once
// Test-only helpers: deterministic value generators and an independent
// brute-force oracle for local solvability of z^2 = a x^2 + b y^2.
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "quatks/quat.hpp"

namespace testsupport {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(uint64_t seed) : rng(seed) {}

    long irange(long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
    }

    double unit() { return (rng() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    quatks::Rat rat(long max_num = 9, long max_den = 3) {
        long n = irange(-max_num, max_num);
        long d = irange(1, max_den);
        quatks::Rat q(n, d);
        q.canonicalize();
        return q;
    }

    quatks::Rat rat_nonzero(long max_num = 9, long max_den = 3) {
        for (;;) {
            quatks::Rat q = rat(max_num, max_den);
            if (q != 0) return q;
        }
    }

    quatks::QuatElement quat(const quatks::QuatAlgebra& alg, long max_num = 9, long max_den = 3) {
        return quatks::QuatElement(alg, rat(max_num, max_den), rat(max_num, max_den),
                                   rat(max_num, max_den), rat(max_num, max_den));
    }
};

// Decides whether z^2 = a x^2 + b y^2 has a nontrivial solution over the
// p-adic integers by exhaustive search for primitive solutions modulo p^3.
//
// Soundness: valuations of a and b are first reduced to {0,1} (dividing out
// p^2 factors changes x or y by units), and if both end up with valuation 1
// we use the equivalence (a,b) ~ (a,-ab) to bring b back to valuation 0.
// After that normalization a primitive solution mod p^3 always lifts: some
// variable with a unit coefficient is itself a unit, and the derivative of
// the defining polynomial in that variable has valuation <= 1, so agreement
// mod p^3 is enough for the Newton iteration to converge.  Conversely an
// honest p-adic solution can be scaled to a primitive one and reduced.
inline bool hilbert_solvable_bruteforce(long a, long b, long p) {
    if (a == 0 || b == 0) throw std::invalid_argument("oracle needs nonzero a, b");
    const long p2 = p * p;
    auto reduce = [p2](long v) {
        while (v % p2 == 0) v /= p2;
        return v;
    };
    a = reduce(a);
    b = reduce(b);
    if (a % p == 0 && b % p == 0) {
        b = reduce(-(a / p) * (b / p));  // (a,b) ~ (a,-ab), then drop the square p^2
    }

    const long M = p * p * p;
    std::vector<uint8_t> square(M, 0), unit_square(M, 0);
    for (long z = 0; z < M; ++z) {
        long c = (z * z) % M;
        square[c] = 1;
        if (z % p != 0) unit_square[c] = 1;
    }
    auto normalize = [M](long v) {
        long r = v % M;
        return r < 0 ? r + M : r;
    };
    for (long x = 0; x < M; ++x) {
        const long ax2 = a * ((x * x) % M);
        const bool x_unit = (x % p != 0);
        for (long y = 0; y < M; ++y) {
            long c = normalize(ax2 + b * ((y * y) % M));
            if ((x_unit || y % p != 0) ? square[c] : unit_square[c]) return true;
        }
    }
    return false;
}

}  // namespace testsupport
