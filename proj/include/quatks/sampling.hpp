#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace quatks {

// Deterministic uniform doubles from the raw mt19937_64 stream (the standard
// distributions are implementation-defined, which would break byte-stable
// reports across library versions).
struct Sampler {
    std::mt19937_64 rng;

    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    double unit() { return (rng() >> 11) * 0x1.0p-53; }  // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Upper half plane box used by the verification sweeps.
    std::complex<double> tau() { return {uniform(-2.0, 2.0), uniform(0.1, 10.0)}; }
};

}  // namespace quatks
