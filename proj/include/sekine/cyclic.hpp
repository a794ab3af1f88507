#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace sekine {

using Complex = std::complex<double>;

/// Reduce x into [0, k).
constexpr int mod_reduce(long long x, int k) {
    long long r = x % k;
    return static_cast<int>(r < 0 ? r + k : r);
}

/// Residue class in Z_k. Every operation keeps the value reduced.
struct CyclicIndex {
    int modulus;
    int value;

    CyclicIndex(int k, long long v) : modulus(k), value(mod_reduce(v, k)) {}

    CyclicIndex operator+(const CyclicIndex& o) const {
        return {modulus, static_cast<long long>(value) + o.value};
    }
    CyclicIndex operator-(const CyclicIndex& o) const {
        return {modulus, static_cast<long long>(value) - o.value};
    }
    CyclicIndex operator-() const { return {modulus, -static_cast<long long>(value)}; }
    CyclicIndex scaled(long long m) const { return {modulus, value * m}; }
    bool operator==(const CyclicIndex& o) const {
        return modulus == o.modulus && value == o.value;
    }
};

/// Powers of the primitive k-th root of unity eta = e^{2*pi*i/k}.
/// Exponents are reduced mod k before touching the unit circle, so large or
/// negative exponents lose no precision.
class Roots {
public:
    explicit Roots(int k) : k_(k), pow_(static_cast<std::size_t>(k)) {
        for (int m = 0; m < k; ++m)
            pow_[static_cast<std::size_t>(m)] =
                std::polar(1.0, 2.0 * std::numbers::pi * m / k);
    }

    Complex operator()(long long e) const {
        return pow_[static_cast<std::size_t>(mod_reduce(e, k_))];
    }

    int order() const { return k_; }

private:
    int k_;
    std::vector<Complex> pow_;
};

} // namespace sekine
