#pragma once

// Linear functionals on A_k in the dual basis {d~_{i,j}} u {e~_{r,s}}:
//
//   mu = sum alpha_{i,j} d~_{i,j} + sum kappa_{r,s} e~_{r,s}.
//
// Provides the closed-form convolution, the tensor-comultiplication oracle
// it is checked against, state/idempotency verification and the Fourier
// transform at the representations pi_{p,q}.

#include <vector>

#include "sekine/algebra.hpp"
#include "sekine/representations.hpp"

namespace sekine {

struct Functional {
    int k = 0;
    Matrix alpha; // k x k, coefficient of d~_{i,j}
    Matrix kappa; // k x k, coefficient of e~_{r,s}

    static Functional zero(int k);

    Functional& operator+=(const Functional& o);
    Functional& operator-=(const Functional& o);
    Functional& operator*=(Complex s);
};

Functional operator+(Functional a, const Functional& b);
Functional operator-(Functional a, const Functional& b);
Functional operator*(Complex s, Functional a);

/// The counit eps = d~_{0,0}.
Functional counit_functional(int k);

/// h = (1/2k^2) sum d~_{i,j} + (1/2k) sum e~_{r,r}.
Functional haar_functional(int k);

Functional dual_d(int k, int i, int j);
Functional dual_e(int k, int r, int s);

Complex evaluate(const Functional& f, const AlgebraElement& a);
Complex evaluate(const Functional& f, const BasisLabel& b);

/// (f (x) g)(t) for a sparse tensor t.
Complex tensor_pair_apply(const Functional& f, const Functional& g,
                          const TensorElement& t);

/// (f (x) id)(t) and (id (x) f)(t).
AlgebraElement apply_left(const Functional& f, const TensorElement& t);
AlgebraElement apply_right(const TensorElement& t, const Functional& f);

namespace detail {
/// Closed-form convolution with an explicit sign on the root of unity.
/// Production code always passes +1; the -1 path exists only as the
/// selfcheck negative control (a deliberately broken formula the oracle
/// comparison must catch).
Functional convolve_with_eta_sign(const Functional& mu, const Functional& nu,
                                  int eta_sign);
} // namespace detail

/// mu * nu through the closed-form coefficient formulas.
Functional convolve(const Functional& mu, const Functional& nu);

/// mu * nu computed as (mu (x) nu) Delta on every basis element. Slower;
/// kept as the independent correctness oracle for convolve().
Functional convolve_oracle(const Functional& mu, const Functional& nu);

/// mu^{*n} by repeated squaring. Rejects n < 1.
Functional convolve_power(const Functional& mu, long n);

double linf_distance(const Functional& a, const Functional& b);
bool approx_equal(const Functional& a, const Functional& b, double tol = 1e-8);

struct StateReport {
    double max_alpha_imag = 0.0;   // largest |Im alpha_{i,j}|
    double min_alpha_real = 0.0;   // smallest Re alpha_{i,j}
    double kappa_hermitian_defect = 0.0; // ||kappa - kappa*||_max
    double min_kappa_eigenvalue = 0.0;   // of the Hermitian part
    double normalization_defect = 0.0;   // |sum alpha + tr kappa - 1|
    bool alpha_nonnegative = false;
    bool kappa_hermitian = false;
    bool kappa_psd = false;
    bool normalized = false;
    bool pass = false;
};

StateReport is_state(const Functional& f, double tol = 1e-9);

struct IdempotencyReport {
    double residual_a = 0.0;    // max | lhs - rhs | over the alpha equations
    double residual_b = 0.0;    // max | lhs - rhs | over the kappa equations
    double residual_c = 0.0;    // | sum alpha + tr kappa - 1 |
    double fixed_point = 0.0;   // || f * f - f ||_inf through convolve()
    StateReport state;
    double tol = 0.0;
    bool pass = false;
};

/// Checks the three idempotency equations directly (written out from the
/// coefficient identities, independently of convolve) plus the convolution
/// fixed-point residual; pass requires all of them and state positivity.
IdempotencyReport idempotency_report(const Functional& f, double tol = 1e-9);

/// mu^(pi_{p,q}) = [[mu(rho_{p,q}), mu(sigma_{p,-q})],
///                  [mu(sigma_{p,q}), mu(rho_{p,-q})]]
struct FourierMatrix {
    int p = 0;
    int q = 0;
    Eigen::Matrix2cd m;
};

FourierMatrix fourier(const Functional& f, long long p, long long q);

/// All k^2 labels in row-major (p,q) order; entry p*k+q holds label (p,q).
std::vector<FourierMatrix> fourier_all(const Functional& f);

/// Largest singular value.
double operator_norm(const Eigen::Matrix2cd& m);

} // namespace sekine
