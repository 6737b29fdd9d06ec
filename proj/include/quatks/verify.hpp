#pragma once

#include <ostream>

#include "quatks/catalog.hpp"

namespace quatks {

struct VerifySummary {
    int checks = 0;
    int failures = 0;
    bool pass() const { return failures == 0; }
};

// The whole pipeline over the catalog: order axioms, discriminants, dual
// index, mu, star involution, Riemann gram, positivity, covolume sweep,
// Kodaira-Spencer solve, metric identities, local module suite, elliptic
// suite. Emits JSON Lines to `out`, deterministic under a fixed seed.
VerifySummary run_verify_all(const RunConfig& cfg, std::ostream& out);

}  // namespace quatks
