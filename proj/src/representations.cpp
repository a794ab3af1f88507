#include "sekine/representations.hpp"

#include <stdexcept>

namespace sekine {

AlgebraElement rho(int k, long long p, long long q) {
    AlgebraElement a = AlgebraElement::zero(k);
    const Roots w(k);
    for (int m = 0; m < k; ++m)
        for (int n = 0; n < k; ++n) a.dcoef(m, n) = w(m * p + n * q);
    return a;
}

AlgebraElement sigma(int k, long long p, long long q) {
    AlgebraElement a = AlgebraElement::zero(k);
    const Roots w(k);
    for (int i = 0; i < k; ++i) a.mcoef(i, mod_reduce(i + p, k)) = w(i * q);
    return a;
}

RepMatrix pi(int k, long long p, long long q) {
    return {{CyclicIndex(k, p), CyclicIndex(k, q)},
            {rho(k, p, q), sigma(k, p, -q), sigma(k, p, q), rho(k, p, -q)}};
}

double unitarity_residual(const RepMatrix& rep) {
    const int k = rep.u[0].k;
    const AlgebraElement one = unit(k), nil = AlgebraElement::zero(k);
    double res = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            AlgebraElement left = AlgebraElement::zero(k);  // (pi* pi)_{ij}
            AlgebraElement right = AlgebraElement::zero(k); // (pi pi*)_{ij}
            for (int l = 0; l < 2; ++l) {
                left += adjoint(rep.at(l, i)) * rep.at(l, j);
                right += rep.at(i, l) * adjoint(rep.at(j, l));
            }
            const AlgebraElement& want = i == j ? one : nil;
            res = std::max({res, linf_distance(left, want), linf_distance(right, want)});
        }
    return res;
}

std::vector<AlgebraElement> decompose_characters(int k, long long p) {
    std::vector<AlgebraElement> out;
    out.push_back(rho(k, p, 0) + sigma(k, p, 0));
    out.push_back(rho(k, p, 0) - sigma(k, p, 0));
    if (k % 2 == 0) {
        out.push_back(rho(k, p, k / 2) + sigma(k, p, k / 2));
        out.push_back(rho(k, p, k / 2) - sigma(k, p, k / 2));
    }
    return out;
}

IrrepInventory irrep_inventory(int k) {
    if (k < 2) throw std::invalid_argument("sekine: group order k must be >= 2");
    const long lk = k;
    IrrepInventory inv{};
    if (k % 2 == 1) {
        inv = {2 * lk, lk * (lk - 1) / 2};
    } else {
        inv = {4 * lk, lk * (lk - 2) / 2};
    }
    if (inv.one_dim_count + 4 * inv.two_dim_count != 2 * lk * lk)
        throw std::logic_error("sekine: irreducible dimension count mismatch");
    return inv;
}

} // namespace sekine
