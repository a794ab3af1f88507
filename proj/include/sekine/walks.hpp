#pragma once

// Convolution powers of states: convergence detection, Cesaro averaging,
// the alpha_{0,0} > 0 sufficient condition and per-label spectral summaries.

#include <cstdint>
#include <optional>

#include "sekine/idempotents.hpp"

namespace sekine {

struct SpectralEntry {
    int p = 0;
    int q = 0;
    Complex lambda1;
    Complex lambda2;
};

struct SpectralReport {
    std::vector<SpectralEntry> entries; // (p,q) row-major
    double max_modulus = 0.0;
    /// true iff every eigenvalue lies in {|z| < 1 - tol} u {|z - 1| < tol},
    /// which is what makes the matrix power sequence converge.
    bool contractive_or_one = false;
};

SpectralReport spectral_report(const Functional& mu, double tol = 1e-9);

struct WalkReport {
    bool converged = false;
    long steps_used = 0; // first step of the convergent streak, or last step tried
    std::optional<Functional> limit;
    std::optional<IdempotentDescriptor> limit_descriptor;
    std::vector<double> trace; // || mu^{n+1} - mu^n ||_inf per step
    SpectralReport spectral;
};

/// Iterates mu^{*n}. Convergence is declared after three consecutive steps
/// with ||mu^{n+1} - mu^n|| < tol; a repeated-squaring probe at n = 2^m
/// detects periodic walks early (mu^{2n} = mu^n while one more step still
/// moves). Throws if mu is not a state.
WalkReport walk(const Functional& mu, long max_steps = 100000, double tol = 1e-10,
                const Catalog* catalog = nullptr);

/// (1/N) sum_{n=1..N} mu^{*n}, by running sum.
Functional cesaro(const Functional& mu, long N);

/// The exact Cesaro limit of {mu^{*n}}: computed as the limit of the lazy
/// walk (eps + mu)/2, whose powers converge to the spectral projection at
/// eigenvalue 1 — the same functional the Cesaro averages tend to — at a
/// geometric rate instead of O(1/N).
Functional cesaro_limit(const Functional& mu, double tol = 1e-12,
                        long max_steps = 400000);

/// alpha_{0,0} > 0 (sufficient for convergence of the walk).
bool check_sufficient(const Functional& mu, double tol = 1e-12);

/// Weaker sufficient condition: at every label (p,q) the support of alpha
/// hits at least two distinct values eta^{ip+jq}.
bool check_weak_sufficient(const Functional& mu, double tol = 1e-12);

/// Deterministic random state: alpha uniform nonnegative, kappa = G*G for
/// a Gaussian complex G, rescaled to total mass one. force_alpha00 blends
/// in enough counit to guarantee alpha_{0,0} >= 0.01.
Functional random_state(int k, std::uint64_t seed, bool force_alpha00 = false);

} // namespace sekine
