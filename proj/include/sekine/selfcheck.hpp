#pragma once

// Axiom suites behind the CLI selfcheck command: algebra laws on the full
// basis, representation relations, convolution-vs-oracle and Fourier
// multiplicativity on random functionals, catalog verification and the
// three-way order cross-check.

#include <cstdint>
#include <string>
#include <vector>

namespace sekine {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
};

struct SelfcheckOptions {
    int samples = 20;
    double tol = 1e-9;
    std::uint64_t seed = 20250810;
    /// Negative control: recompute the convolution closed form with the
    /// root-of-unity sign flipped; the oracle comparison must then fail.
    bool inject_eta_sign_bug = false;
    /// The order cross-check costs O(|catalog|^2) convolutions; skippable
    /// for large k.
    bool include_order_cross_check = true;
};

std::vector<CheckResult> selfcheck(int k, const SelfcheckOptions& opts = {});

bool all_pass(const std::vector<CheckResult>& results);

} // namespace sekine
