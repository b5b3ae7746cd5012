#pragma once

#include <cstddef>

namespace qorder {

// Enumeration limits. Defaults can be overridden with the QORDER_CAP
// environment variable, which scales every cap to the given value.
struct Caps {
    std::size_t powerset = 100000;       // candidate count for presheaf enumeration
    std::size_t memberships = 1000000;   // |Q|^|X| for membership scans
    std::size_t adjoints = 1000000;      // adjoint search results
    std::size_t subset_bits = 12;        // largest fibre scanned for order-completeness

    static Caps defaults() { return Caps{}; }
    static Caps from_env();
};

}  // namespace qorder
