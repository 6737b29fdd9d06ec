#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatks/order.hpp"

namespace quatks {

// One order from the JSON catalog. Rationals are stored as "num/den" strings
// (or plain integers); basis is 4 elements x 4 coordinates over (1,i,j,k),
// row-major; mu is an optional hint with the same coordinate convention.
struct CatalogEntry {
    std::string id;
    Rat a, b;
    std::array<Vec4, 4> basis;
    Int expected_d_B;
    std::optional<Vec4> mu;

    Order make_order() const;
    QuatAlgebra make_algebra() const { return {a, b}; }
};

// Parses and validates (unique nonempty ids, well-formed rationals,
// expected_d_B positive). Throws std::runtime_error naming the entry and
// field on malformed input.
std::vector<CatalogEntry> load_catalog(const std::string& path);

struct RunConfig {
    std::string catalog_path;  // empty = resolve via env / default
    std::string out_path;      // empty = stdout
    std::uint64_t seed = 12345;
    double tol = 1e-9;
    int tau_samples = 100;
    int positivity_samples = 1000;
    int padic_N = 20;
};

// --catalog flag beats QUATKS_CATALOG beats ./data/catalog.json.
std::string resolve_catalog_path(const std::string& flag_value);

}  // namespace quatks
