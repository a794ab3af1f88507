#include "sekine/algebra.hpp"

#include <stdexcept>

namespace sekine {

namespace {

void require_valid_order(int k) {
    if (k < 2) throw std::invalid_argument("sekine: group order k must be >= 2");
}

void require_same_order(int a, int b) {
    if (a != b) throw std::invalid_argument("sekine: mismatched group orders");
}

} // namespace

AlgebraElement AlgebraElement::zero(int k) {
    require_valid_order(k);
    return {k, Matrix::Zero(k, k), Matrix::Zero(k, k)};
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    require_same_order(k, o.k);
    dcoef += o.dcoef;
    mcoef += o.mcoef;
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    require_same_order(k, o.k);
    dcoef -= o.dcoef;
    mcoef -= o.mcoef;
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
    dcoef *= s;
    mcoef *= s;
    return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

AlgebraElement unit(int k) {
    require_valid_order(k);
    return {k, Matrix::Ones(k, k), Matrix::Identity(k, k)};
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_order(a.k, b.k);
    return {a.k, a.dcoef.cwiseProduct(b.dcoef), a.mcoef * b.mcoef};
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b);
}

AlgebraElement adjoint(const AlgebraElement& a) {
    return {a.k, a.dcoef.conjugate(), a.mcoef.adjoint()};
}

Complex counit(const AlgebraElement& a) { return a.dcoef(0, 0); }

Complex haar_state(const AlgebraElement& a) {
    const double k = a.k;
    return a.dcoef.sum() / (2.0 * k * k) + a.mcoef.trace() / (2.0 * k);
}

double linf_distance(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_order(a.k, b.k);
    return std::max((a.dcoef - b.dcoef).cwiseAbs().maxCoeff(),
                    (a.mcoef - b.mcoef).cwiseAbs().maxCoeff());
}

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol) {
    return linf_distance(a, b) <= tol;
}

AlgebraElement basis_element(const BasisLabel& b) {
    AlgebraElement a = AlgebraElement::zero(b.k);
    if (b.is_matrix_unit())
        a.mcoef(b.row(), b.col()) = 1.0;
    else
        a.dcoef(b.row(), b.col()) = 1.0;
    return a;
}

int basis_product(int k, int a, int b) {
    const int kk = k * k;
    const bool ea = a >= kk, eb = b >= kk;
    if (ea != eb) return -1;
    if (!ea) return a == b ? a : -1;
    const int r = (a - kk) / k, s = (a - kk) % k;
    const int u = (b - kk) / k, v = (b - kk) % k;
    return s == u ? kk + r * k + v : -1;
}

void TensorElement::add(int left, int right, Complex c) {
    if (c == Complex{}) return;
    coef[{left, right}] += c;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    require_same_order(k, o.k);
    for (const auto& [key, c] : o.coef) coef[key] += c;
    return *this;
}

TensorElement& TensorElement::operator*=(Complex s) {
    for (auto& [key, c] : coef) c *= s;
    return *this;
}

namespace {

// Delta(d_{i,j}) = sum_{m,n} d_{m,n} (x) d_{i-m,j-n}
//                + (1/k) sum_{m,n} eta^{i(m-n)} e_{m,n} (x) e_{m+j,n+j}
void delta_d(TensorElement& t, int k, int i, int j, Complex scale, const Roots& w) {
    const int kk = k * k;
    for (int m = 0; m < k; ++m)
        for (int n = 0; n < k; ++n) {
            t.add(m * k + n, mod_reduce(i - m, k) * k + mod_reduce(j - n, k), scale);
            t.add(kk + m * k + n,
                  kk + mod_reduce(m + j, k) * k + mod_reduce(n + j, k),
                  scale * w(static_cast<long long>(i) * (m - n)) / double(k));
        }
}

// Delta(e_{i,j}) = sum_{m,n} eta^{m(i-j)} d_{-m,-n} (x) e_{i-n,j-n}
//                + sum_{m,n} eta^{m(j-i)} e_{i-n,j-n} (x) d_{m,n}
void delta_e(TensorElement& t, int k, int i, int j, Complex scale, const Roots& w) {
    const int kk = k * k;
    for (int m = 0; m < k; ++m)
        for (int n = 0; n < k; ++n) {
            const int e_code = kk + mod_reduce(i - n, k) * k + mod_reduce(j - n, k);
            t.add(mod_reduce(-m, k) * k + mod_reduce(-n, k), e_code,
                  scale * w(static_cast<long long>(m) * (i - j)));
            t.add(e_code, m * k + n, scale * w(static_cast<long long>(m) * (j - i)));
        }
}

} // namespace

TensorElement comultiply(const AlgebraElement& a) {
    TensorElement t(a.k);
    const Roots w(a.k);
    for (int i = 0; i < a.k; ++i)
        for (int j = 0; j < a.k; ++j) {
            if (a.dcoef(i, j) != Complex{}) delta_d(t, a.k, i, j, a.dcoef(i, j), w);
            if (a.mcoef(i, j) != Complex{}) delta_e(t, a.k, i, j, a.mcoef(i, j), w);
        }
    return t;
}

TensorElement tensor_product(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_order(a.k, b.k);
    const int k = a.k, kk = k * k;
    auto coef_of = [&](const AlgebraElement& x, int code) {
        return code < kk ? x.dcoef(code / k, code % k)
                         : x.mcoef((code - kk) / k, (code - kk) % k);
    };
    TensorElement t(k);
    for (int l = 0; l < 2 * kk; ++l) {
        const Complex cl = coef_of(a, l);
        if (cl == Complex{}) continue;
        for (int r = 0; r < 2 * kk; ++r) t.add(l, r, cl * coef_of(b, r));
    }
    return t;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
    require_same_order(a.k, b.k);
    TensorElement t(a.k);
    for (const auto& [ka, ca] : a.coef)
        for (const auto& [kb, cb] : b.coef) {
            const int left = basis_product(a.k, ka.first, kb.first);
            if (left < 0) continue;
            const int right = basis_product(a.k, ka.second, kb.second);
            if (right < 0) continue;
            t.add(left, right, ca * cb);
        }
    return t;
}

TensorElement tensor_adjoint(const TensorElement& t) {
    const int kk = t.k * t.k;
    auto star = [&](int code) {
        if (code < kk) return code; // d_{i,j}* = d_{i,j}
        const int r = (code - kk) / t.k, s = (code - kk) % t.k;
        return kk + s * t.k + r; // e_{r,s}* = e_{s,r}
    };
    TensorElement out(t.k);
    for (const auto& [key, c] : t.coef)
        out.add(star(key.first), star(key.second), std::conj(c));
    return out;
}

double linf_distance(const TensorElement& a, const TensorElement& b) {
    require_same_order(a.k, b.k);
    double d = 0.0;
    for (const auto& [key, c] : a.coef) {
        auto it = b.coef.find(key);
        d = std::max(d, std::abs(c - (it == b.coef.end() ? Complex{} : it->second)));
    }
    for (const auto& [key, c] : b.coef)
        if (!a.coef.count(key)) d = std::max(d, std::abs(c));
    return d;
}

bool approx_equal(const TensorElement& a, const TensorElement& b, double tol) {
    return linf_distance(a, b) <= tol;
}

} // namespace sekine
