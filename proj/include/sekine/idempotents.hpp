#pragma once

// The complete catalog of idempotent states on A_k:
//
//   Idem(A_k) = {h} u I1 u I2 u I3
//
//   I1: h_Gamma, uniform on a subgroup Gamma of Z_k x Z_k, kappa = 0
//   I2: h_{Gamma,l}, Gamma = Z_k x qZ_k (q|k, q>1), diagonal kappa on the
//       congruence class r = l (mod q)
//   I3: h_{Gamma,l,tau}, Gamma = pZ_k x qZ_k (pq = k, p>1), circulant
//       +-1-signed kappa block on rows and columns = l (mod q)

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sekine/functionals.hpp"

namespace sekine {

struct Subgroup {
    int k = 0;
    std::vector<std::pair<int, int>> elements; // sorted, contains (0,0)

    bool contains(int i, int j) const;
    int order() const { return static_cast<int>(elements.size()); }
    bool subset_of(const Subgroup& other) const;

    /// Canonical basis [a,b;0,d] (Hermite form) of the lifted lattice in
    /// Z^2 (the preimage of the subgroup, which contains kZ^2).
    std::array<int, 4> hermite_basis() const;

    bool operator==(const Subgroup& o) const {
        return k == o.k && elements == o.elements;
    }
};

/// The subgroup generated by the given elements.
Subgroup span_subgroup(int k, const std::vector<std::pair<int, int>>& gens);

/// Every subgroup of Z_k x Z_k exactly once, ordered by (order, elements).
/// Two-generator closure over all element pairs with deduplication.
std::vector<Subgroup> enumerate_subgroups(int k);

/// Sign pattern tau = (tau_j)_{j in qZ_k}, tau_0 = +1, stored densely as
/// signs[t] = tau_{t q}.
struct TauVector {
    int k = 0;
    int q = 0;
    std::vector<int> signs;

    int span() const { return static_cast<int>(signs.size()); } // p = k/q
    int at(long long j) const; // j must be a multiple of q

    bool operator==(const TauVector& o) const {
        return k == o.k && q == o.q && signs == o.signs;
    }
};

/// All sign patterns with tau_0 = +1 whose DFT sum_{j in qZ_k} tau_j eta^{ij}
/// is real and nonnegative for every i in Z_{k/q} (equivalently: the
/// circulant kappa block they induce is positive semi-definite). Requires
/// q|k and p = k/q > 1. Lexicographic order, all-plus pattern first.
std::vector<TauVector> enumerate_tau(int k, int q, double tol = 1e-9);

struct HaarDesc {};
struct HaarSubDesc {
    Subgroup gamma;
};
struct TypeIIDesc {
    int q = 0;
    int l = 0;
};
struct TypeIIIDesc {
    int p = 0;
    int q = 0;
    int l = 0;
    TauVector tau;
};

using IdempotentDescriptor =
    std::variant<HaarDesc, HaarSubDesc, TypeIIDesc, TypeIIIDesc>;

bool same_descriptor(const IdempotentDescriptor& a, const IdempotentDescriptor& b);

/// Canonical display names: "h", "eps", "h_G[a,b;0,d]", "h_{q,l}",
/// "h_{p,l,+-...}".
std::string descriptor_name(const IdempotentDescriptor& d);

/// h_Gamma = (1/#Gamma) sum_{(i,j) in Gamma} d~_{i,j}.
Functional build_haar_sub(const Subgroup& gamma);

/// h_{Gamma,l} with Gamma = Z_k x qZ_k: alpha = 1/(2#Gamma) on Gamma,
/// kappa_{r,r} = q/2k for r = l (mod q). Rejects q<=1, non-divisors, bad l.
Functional build_type2(int k, int q, int l);

/// h_{Gamma,l,tau} with Gamma = pZ_k x qZ_k, q = k/p: alpha = 1/2k on
/// Gamma, kappa_{r,s} = (q/2k) tau_{s-r} for r,s = l (mod q).
Functional build_type3(int k, int p, int l, const TauVector& tau);

struct CatalogEntry {
    IdempotentDescriptor descriptor;
    Functional state;
};

struct Catalog {
    int k = 0;
    std::vector<CatalogEntry> members;

    std::size_t size() const { return members.size(); }
    /// Index of the counit (trivial subgroup) and of the Haar state.
    std::size_t counit_index() const;
    std::size_t haar_index() const;
};

/// Build, verify (idempotency at 1e-9) and pairwise-separate (L_inf > 1e-6)
/// the full catalog. Order: h, then I1 by subgroup, then I2 by (q,l), then
/// I3 by (p,l,tau). Throws std::logic_error if verification fails.
Catalog enumerate_catalog(int k);

/// Nearest catalog member within tol (L_inf), or nullopt.
std::optional<IdempotentDescriptor> classify(const Functional& f,
                                             const Catalog& catalog,
                                             double tol = 1e-6);

/// Index of the nearest member within tol, or nullopt.
std::optional<std::size_t> classify_index(const Functional& f,
                                          const Catalog& catalog,
                                          double tol = 1e-6);

} // namespace sekine
