#include "sekine/walks.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace sekine {

SpectralReport spectral_report(const Functional& mu, double tol) {
    SpectralReport rep;
    rep.entries.reserve(static_cast<std::size_t>(mu.k) * mu.k);
    rep.contractive_or_one = true;
    for (int p = 0; p < mu.k; ++p)
        for (int q = 0; q < mu.k; ++q) {
            const Eigen::Matrix2cd m = fourier(mu, p, q).m;
            const Complex tr = m(0, 0) + m(1, 1);
            const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
            const Complex disc = std::sqrt(tr * tr - 4.0 * det);
            SpectralEntry e{p, q, (tr + disc) / 2.0, (tr - disc) / 2.0};
            for (const Complex lambda : {e.lambda1, e.lambda2}) {
                rep.max_modulus = std::max(rep.max_modulus, std::abs(lambda));
                const bool inside = std::abs(lambda) < 1.0 - tol;
                const bool at_one = std::abs(lambda - 1.0) < tol;
                if (!inside && !at_one) rep.contractive_or_one = false;
            }
            rep.entries.push_back(e);
        }
    return rep;
}

WalkReport walk(const Functional& mu, long max_steps, double tol,
                const Catalog* catalog) {
    if (!is_state(mu).pass)
        throw std::invalid_argument("sekine: walk requires a state");

    WalkReport rep;
    rep.spectral = spectral_report(mu);

    Functional cur = mu; // mu^{*n}
    long n = 1;
    int streak = 0;
    long first_small = 0;
    long next_probe = 1;

    while (n < max_steps) {
        const Functional next = convolve(cur, mu); // mu^{*(n+1)}
        const double d = linf_distance(next, cur);
        rep.trace.push_back(d);
        if (d < tol) {
            if (streak == 0) first_small = n;
            ++streak;
            if (streak >= 3) {
                rep.converged = true;
                rep.limit = next;
                rep.steps_used = first_small;
                break;
            }
        } else {
            streak = 0;
        }
        if (n == next_probe) {
            // mu^{*2n} == mu^{*n} while a single step still moves: periodic
            const Functional doubled = convolve(cur, cur);
            if (linf_distance(doubled, cur) < tol && d > 10.0 * tol) {
                rep.converged = false;
                rep.steps_used = n;
                return rep;
            }
            next_probe *= 2;
        }
        cur = next;
        ++n;
    }
    if (!rep.converged) rep.steps_used = n;
    if (rep.converged && catalog) rep.limit_descriptor = classify(*rep.limit, *catalog);
    return rep;
}

Functional cesaro(const Functional& mu, long N) {
    if (N < 1) throw std::invalid_argument("sekine: cesaro requires N >= 1");
    Functional power = mu;
    Functional sum = mu;
    for (long n = 2; n <= N; ++n) {
        power = convolve(power, mu);
        sum += power;
    }
    return (1.0 / static_cast<double>(N)) * sum;
}

Functional cesaro_limit(const Functional& mu, double tol, long max_steps) {
    if (!is_state(mu).pass)
        throw std::invalid_argument("sekine: cesaro_limit requires a state");
    // Lazy walk: mixing with the counit keeps the fixed space of every
    // Fourier matrix and pulls all other unimodular eigenvalues strictly
    // inside the disk, so plain iteration converges to the Cesaro limit.
    const Functional lazy = 0.5 * (counit_functional(mu.k) + mu);
    Functional cur = lazy;
    int streak = 0;
    for (long n = 1; n < max_steps; ++n) {
        const Functional next = convolve(cur, lazy);
        if (linf_distance(next, cur) < tol) {
            if (++streak >= 3) return next;
        } else {
            streak = 0;
        }
        cur = next;
    }
    throw std::runtime_error("sekine: cesaro_limit did not settle");
}

bool check_sufficient(const Functional& mu, double tol) {
    return mu.alpha(0, 0).real() > tol;
}

bool check_weak_sufficient(const Functional& mu, double tol) {
    const int k = mu.k;
    std::vector<std::pair<int, int>> support;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (std::abs(mu.alpha(i, j)) > tol) support.push_back({i, j});
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            std::set<int> exponents;
            for (const auto& [i, j] : support)
                exponents.insert(mod_reduce(
                    static_cast<long long>(i) * p + static_cast<long long>(j) * q, k));
            if (exponents.size() < 2) return false;
        }
    return true;
}

Functional random_state(int k, std::uint64_t seed, bool force_alpha00) {
    if (k < 2) throw std::invalid_argument("sekine: group order k must be >= 2");
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Functional f = Functional::zero(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) f.alpha(i, j) = uniform(gen);
    Matrix g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g(i, j) = Complex(gauss(gen), gauss(gen));
    f.kappa = g.adjoint() * g;

    const double total = (f.alpha.sum() + f.kappa.trace()).real();
    f *= 1.0 / total;
    if (force_alpha00 && f.alpha(0, 0).real() < 0.01) {
        f *= 0.99;
        f.alpha(0, 0) += 0.01;
    }
    return f;
}

} // namespace sekine
