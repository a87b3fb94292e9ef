#pragma once

#include <stdexcept>
#include <string>

namespace hopfchrom {

// Base for everything this library throws.
struct hopf_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input (graph6, JSON, CLI selectors).
struct parse_error : hopf_error {
    using hopf_error::hopf_error;
};

// A configured cap was exceeded. Caps fail loudly, they never degrade.
struct resource_error : hopf_error {
    using hopf_error::hopf_error;
};

// An exact-arithmetic or theorem-level consistency check failed. This always
// signals a bug (or a deliberately broken test fixture), never bad user input.
struct consistency_error : hopf_error {
    using hopf_error::hopf_error;
};

// Caps shared across modules. Env overrides are applied by the CLI only;
// library users set fields directly.
struct Caps {
    int vertex_cap = 12;        // graphs / canonicalization
    long long group_cap = 1000000;  // enumerated group order
    int degree_cap = 8;         // Hopf-operation degree (graph instance)
    long long oracle_cap = 5000;    // wreath-group order in the oracle
    int symfunc_degree_cap = 12;    // symmetric-function multiplication
};

inline Caps& global_caps() {
    static Caps caps;
    return caps;
}

}  // namespace hopfchrom
