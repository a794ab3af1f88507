#include "sekine/functionals.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
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

Functional Functional::zero(int k) {
    require_valid_order(k);
    return {k, Matrix::Zero(k, k), Matrix::Zero(k, k)};
}

Functional& Functional::operator+=(const Functional& o) {
    require_same_order(k, o.k);
    alpha += o.alpha;
    kappa += o.kappa;
    return *this;
}

Functional& Functional::operator-=(const Functional& o) {
    require_same_order(k, o.k);
    alpha -= o.alpha;
    kappa -= o.kappa;
    return *this;
}

Functional& Functional::operator*=(Complex s) {
    alpha *= s;
    kappa *= s;
    return *this;
}

Functional operator+(Functional a, const Functional& b) { return a += b; }
Functional operator-(Functional a, const Functional& b) { return a -= b; }
Functional operator*(Complex s, Functional a) { return a *= s; }

Functional counit_functional(int k) { return dual_d(k, 0, 0); }

Functional haar_functional(int k) {
    require_valid_order(k);
    const double kd = k;
    return {k, Matrix::Constant(k, k, 1.0 / (2.0 * kd * kd)),
            Matrix::Identity(k, k) / (2.0 * kd)};
}

Functional dual_d(int k, int i, int j) {
    Functional f = Functional::zero(k);
    f.alpha(mod_reduce(i, k), mod_reduce(j, k)) = 1.0;
    return f;
}

Functional dual_e(int k, int r, int s) {
    Functional f = Functional::zero(k);
    f.kappa(mod_reduce(r, k), mod_reduce(s, k)) = 1.0;
    return f;
}

Complex evaluate(const Functional& f, const AlgebraElement& a) {
    require_same_order(f.k, a.k);
    return f.alpha.cwiseProduct(a.dcoef).sum() + f.kappa.cwiseProduct(a.mcoef).sum();
}

Complex evaluate(const Functional& f, const BasisLabel& b) {
    require_same_order(f.k, b.k);
    return b.is_matrix_unit() ? f.kappa(b.row(), b.col()) : f.alpha(b.row(), b.col());
}

Complex tensor_pair_apply(const Functional& f, const Functional& g,
                          const TensorElement& t) {
    require_same_order(f.k, g.k);
    require_same_order(f.k, t.k);
    Complex acc = 0.0;
    for (const auto& [key, c] : t.coef)
        acc += c * evaluate(f, BasisLabel{t.k, key.first}) *
               evaluate(g, BasisLabel{t.k, key.second});
    return acc;
}

AlgebraElement apply_left(const Functional& f, const TensorElement& t) {
    require_same_order(f.k, t.k);
    AlgebraElement out = AlgebraElement::zero(t.k);
    const int kk = t.k * t.k;
    for (const auto& [key, c] : t.coef) {
        const Complex v = c * evaluate(f, BasisLabel{t.k, key.first});
        const int code = key.second;
        if (code < kk)
            out.dcoef(code / t.k, code % t.k) += v;
        else
            out.mcoef((code - kk) / t.k, (code - kk) % t.k) += v;
    }
    return out;
}

AlgebraElement apply_right(const TensorElement& t, const Functional& f) {
    require_same_order(f.k, t.k);
    AlgebraElement out = AlgebraElement::zero(t.k);
    const int kk = t.k * t.k;
    for (const auto& [key, c] : t.coef) {
        const Complex v = c * evaluate(f, BasisLabel{t.k, key.second});
        const int code = key.first;
        if (code < kk)
            out.dcoef(code / t.k, code % t.k) += v;
        else
            out.mcoef((code - kk) / t.k, (code - kk) % t.k) += v;
    }
    return out;
}

namespace detail {

Functional convolve_with_eta_sign(const Functional& mu, const Functional& nu,
                                  int eta_sign) {
    require_same_order(mu.k, nu.k);
    const int k = mu.k;
    const Roots w(k);
    auto root = [&](long long e) { return w(eta_sign >= 0 ? e : -e); };

    Functional out = Functional::zero(k);

    // gamma_{i,j} = sum_{m,n} alpha_{m,n} beta_{i-m,j-n}
    //             + (1/k) sum_{r,s} eta^{i(r-s)} kappa_{r,s} omega_{r+j,s+j}
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Complex acc = 0.0;
            for (int m = 0; m < k; ++m)
                for (int n = 0; n < k; ++n)
                    acc += mu.alpha(m, n) *
                           nu.alpha(mod_reduce(i - m, k), mod_reduce(j - n, k));
            Complex acc2 = 0.0;
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s)
                    acc2 += root(static_cast<long long>(i) * (r - s)) * mu.kappa(r, s) *
                            nu.kappa(mod_reduce(r + j, k), mod_reduce(s + j, k));
            out.alpha(i, j) = acc + acc2 / double(k);
        }

    // theta_{r,s} = sum_{i,j} eta^{i(s-r)} ( alpha_{i,j} omega_{r+j,s+j}
    //                                      + beta_{i,j} kappa_{r-j,s-j} )
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) {
            Complex acc = 0.0;
            for (int i = 0; i < k; ++i) {
                const Complex phase = root(static_cast<long long>(i) * (s - r));
                for (int j = 0; j < k; ++j)
                    acc += phase *
                           (mu.alpha(i, j) *
                                nu.kappa(mod_reduce(r + j, k), mod_reduce(s + j, k)) +
                            nu.alpha(i, j) *
                                mu.kappa(mod_reduce(r - j, k), mod_reduce(s - j, k)));
            }
            out.kappa(r, s) = acc;
        }
    return out;
}

} // namespace detail

Functional convolve(const Functional& mu, const Functional& nu) {
    return detail::convolve_with_eta_sign(mu, nu, +1);
}

Functional convolve_oracle(const Functional& mu, const Functional& nu) {
    require_same_order(mu.k, nu.k);
    const int k = mu.k;
    Functional out = Functional::zero(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            out.alpha(i, j) = tensor_pair_apply(
                mu, nu, comultiply(basis_element(BasisLabel::d(k, i, j))));
            out.kappa(i, j) = tensor_pair_apply(
                mu, nu, comultiply(basis_element(BasisLabel::e(k, i, j))));
        }
    return out;
}

Functional convolve_power(const Functional& mu, long n) {
    if (n < 1) throw std::invalid_argument("sekine: convolution power needs n >= 1");
    // repeated squaring; the counit is the unit of the convolution algebra
    Functional acc = counit_functional(mu.k);
    Functional base = mu;
    for (long e = n; e > 0; e >>= 1) {
        if (e & 1) acc = convolve(acc, base);
        if (e > 1) base = convolve(base, base);
    }
    return acc;
}

double linf_distance(const Functional& a, const Functional& b) {
    require_same_order(a.k, b.k);
    return std::max((a.alpha - b.alpha).cwiseAbs().maxCoeff(),
                    (a.kappa - b.kappa).cwiseAbs().maxCoeff());
}

bool approx_equal(const Functional& a, const Functional& b, double tol) {
    return linf_distance(a, b) <= tol;
}

StateReport is_state(const Functional& f, double tol) {
    StateReport r;
    r.max_alpha_imag = f.alpha.imag().cwiseAbs().maxCoeff();
    r.min_alpha_real = f.alpha.real().minCoeff();
    r.kappa_hermitian_defect =
        (f.kappa - f.kappa.adjoint().eval()).cwiseAbs().maxCoeff();
    const Matrix herm = 0.5 * (f.kappa + f.kappa.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    r.min_kappa_eigenvalue = es.eigenvalues().minCoeff();
    r.normalization_defect = std::abs(f.alpha.sum() + f.kappa.trace() - 1.0);

    r.alpha_nonnegative = r.max_alpha_imag <= tol && r.min_alpha_real >= -tol;
    r.kappa_hermitian = r.kappa_hermitian_defect <= tol;
    r.kappa_psd = r.kappa_hermitian && r.min_kappa_eigenvalue >= -tol;
    r.normalized = r.normalization_defect <= tol;
    r.pass = r.alpha_nonnegative && r.kappa_psd && r.normalized;
    return r;
}

IdempotencyReport idempotency_report(const Functional& f, double tol) {
    const int k = f.k;
    const Roots w(k);
    IdempotencyReport rep;
    rep.tol = tol;

    // alpha_{i,j} = sum_{r,s} alpha_{i-r,j-s} alpha_{r,s}
    //             + (1/k) sum_{r,s} eta^{i(r-s)} kappa_{r,s} kappa_{r+j,s+j}
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Complex rhs = 0.0;
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s)
                    rhs += f.alpha(mod_reduce(i - r, k), mod_reduce(j - s, k)) *
                           f.alpha(r, s);
            Complex quad = 0.0;
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s)
                    quad += w(static_cast<long long>(i) * (r - s)) * f.kappa(r, s) *
                            f.kappa(mod_reduce(r + j, k), mod_reduce(s + j, k));
            rep.residual_a =
                std::max(rep.residual_a, std::abs(f.alpha(i, j) - rhs - quad / double(k)));
        }

    // kappa_{r,s} = sum_{i,j} eta^{i(s-r)} alpha_{i,j}
    //               ( kappa_{r+j,s+j} + kappa_{r-j,s-j} )
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) {
            Complex rhs = 0.0;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    rhs += w(static_cast<long long>(i) * (s - r)) * f.alpha(i, j) *
                           (f.kappa(mod_reduce(r + j, k), mod_reduce(s + j, k)) +
                            f.kappa(mod_reduce(r - j, k), mod_reduce(s - j, k)));
            rep.residual_b = std::max(rep.residual_b, std::abs(f.kappa(r, s) - rhs));
        }

    rep.residual_c = std::abs(f.alpha.sum() + f.kappa.trace() - 1.0);
    rep.fixed_point = linf_distance(convolve(f, f), f);
    rep.state = is_state(f, tol);
    rep.pass = rep.state.pass && rep.residual_a <= tol && rep.residual_b <= tol &&
               rep.residual_c <= tol && rep.fixed_point <= tol;
    return rep;
}

FourierMatrix fourier(const Functional& f, long long p, long long q) {
    const int k = f.k;
    FourierMatrix fm{mod_reduce(p, k), mod_reduce(q, k), Eigen::Matrix2cd::Zero()};
    fm.m(0, 0) = evaluate(f, rho(k, p, q));
    fm.m(0, 1) = evaluate(f, sigma(k, p, -q));
    fm.m(1, 0) = evaluate(f, sigma(k, p, q));
    fm.m(1, 1) = evaluate(f, rho(k, p, -q));
    return fm;
}

std::vector<FourierMatrix> fourier_all(const Functional& f) {
    std::vector<FourierMatrix> out;
    out.reserve(static_cast<std::size_t>(f.k) * f.k);
    for (int p = 0; p < f.k; ++p)
        for (int q = 0; q < f.k; ++q) out.push_back(fourier(f, p, q));
    return out;
}

double operator_norm(const Eigen::Matrix2cd& m) {
    return m.jacobiSvd().singularValues()(0);
}

} // namespace sekine
