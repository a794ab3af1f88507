#pragma once

// The elements rho_{p,q} = sum_{m,n} eta^{mp+nq} d_{m,n} and
// sigma_{p,q} = sum_i eta^{iq} e_{i,i+p}, the 2x2 unitary representations
// pi_{p,q} built from them, the one-dimensional characters, and the
// inventory of irreducibles.

#include <array>
#include <vector>

#include "sekine/algebra.hpp"

namespace sekine {

struct RepLabel {
    CyclicIndex p;
    CyclicIndex q;
};

AlgebraElement rho(int k, long long p, long long q);
AlgebraElement sigma(int k, long long p, long long q);

/// [[rho_{p,q}, sigma_{p,-q}], [sigma_{p,q}, rho_{p,-q}]]
struct RepMatrix {
    RepLabel label;
    std::array<AlgebraElement, 4> u; // row-major

    const AlgebraElement& at(int i, int j) const { return u[2 * i + j]; }
};

RepMatrix pi(int k, long long p, long long q);

/// Max-abs residual of pi* pi - 1 and pi pi* - 1 over the four entries.
double unitarity_residual(const RepMatrix& rep);

/// The one-dimensional characters carried by pi_{p,0} (and pi_{p,k/2} when
/// k is even): rho +- sigma at those labels.
std::vector<AlgebraElement> decompose_characters(int k, long long p);

struct IrrepInventory {
    long one_dim_count;
    long two_dim_count;
};

/// k odd: (2k, k(k-1)/2); k even: (4k, k(k-2)/2). Verifies the dimension
/// identity one_dim + 4*two_dim = 2k^2 before returning.
IrrepInventory irrep_inventory(int k);

} // namespace sekine
