#pragma once

// The partial order mu < nu iff mu * nu = nu on Idem(A_k), computed three
// independent ways (convolution, Fourier idempotent order, combinatorial
// descriptor rules), plus Hasse-diagram construction and DOT export.

#include <string>
#include <vector>

#include "sekine/idempotents.hpp"

namespace sekine {

struct OrderRelation {
    int n = 0;
    std::vector<char> bits; // row-major n x n

    explicit OrderRelation(int size = 0)
        : n(size), bits(static_cast<std::size_t>(size) * size, 0) {}

    bool at(int i, int j) const {
        return bits[static_cast<std::size_t>(i) * n + j] != 0;
    }
    void set(int i, int j, bool v) {
        bits[static_cast<std::size_t>(i) * n + j] = v ? 1 : 0;
    }
};

/// mu < nu by the definition: ||mu * nu - nu||_inf < tol.
bool precedes(const Functional& mu, const Functional& nu, double tol = 1e-8);

/// mu < nu iff mu^(pi) nu^(pi) = nu^(pi) at every label.
bool precedes_fourier(const Functional& mu, const Functional& nu, double tol = 1e-8);

/// Pure combinatorial decision on descriptors. The Haar state is the
/// maximum; for the rest:
///   I1 < I1/I2/I3  iff Gamma containment,
///   I2 < I2        iff q' | q and l = l' (mod q'),
///   I3 < I2        iff p | k/q' and l = l' (mod q'),
///   I3 < I3        iff equal descriptors,
/// and no other cross-family relation holds.
bool theoretic_precedes(const IdempotentDescriptor& a, const IdempotentDescriptor& b,
                        int k);

/// Pairwise relation via precedes(); asserts the partial-order axioms and
/// that the counit/Haar state are the unique minimum/maximum (throws
/// std::logic_error otherwise).
OrderRelation build_order(const Catalog& catalog, double tol = 1e-8);

/// Pairwise relation via theoretic_precedes (no convolutions).
OrderRelation build_order_theoretic(const Catalog& catalog);

/// Cover edges (transitive reduction). Rejects relations that are not
/// partial orders (cycles, missing transitivity).
std::vector<std::pair<int, int>> cover_edges(const OrderRelation& rel);

struct HasseDiagram {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers; // (lower, upper)

    int node_count() const { return static_cast<int>(labels.size()); }
};

HasseDiagram hasse(const OrderRelation& rel, std::vector<std::string> labels);
HasseDiagram hasse(const Catalog& catalog, const OrderRelation& rel);

/// Deterministic DOT text, one node line per member and one edge line per
/// cover relation, edges pointing from smaller to larger.
std::string export_dot(const HasseDiagram& hd);

} // namespace sekine
