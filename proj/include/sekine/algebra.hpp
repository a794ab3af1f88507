#pragma once

// The 2k^2-dimensional *-algebra
//
//   A_k = (+)_{i,j in Z_k} C d_{i,j}  (+)  M_k(C)
//
// with its product, involution, unit, comultiplication, counit and Haar
// state. The d_{i,j} are orthogonal central projections (so the d-part
// multiplies pointwise) and e_{r,s} are the matrix units of the M_k(C)
// block.

#include <Eigen/Dense>
#include <map>
#include <utility>

#include "sekine/cyclic.hpp"

namespace sekine {

using Matrix = Eigen::MatrixXcd;

/// a = sum dcoef(i,j) d_{i,j} + sum mcoef(r,s) e_{r,s}
struct AlgebraElement {
    int k = 0;
    Matrix dcoef; // k x k, coefficient of d_{i,j}
    Matrix mcoef; // k x k, coefficient of the matrix unit e_{r,s}

    static AlgebraElement zero(int k);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(Complex s);
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(Complex s, AlgebraElement a);

/// 1 = sum_{i,j} d_{i,j} + sum_r e_{r,r}. Rejects k < 2.
AlgebraElement unit(int k);

/// d-part pointwise, matrix block by matrix product. Rejects mismatched k.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

/// d-part conjugated entrywise, matrix block conjugate-transposed.
AlgebraElement adjoint(const AlgebraElement& a);

/// The counit is the coefficient functional of d_{0,0}.
Complex counit(const AlgebraElement& a);

/// h(a) = (1/2k^2) sum dcoef + (1/2k) tr mcoef.
Complex haar_state(const AlgebraElement& a);

double linf_distance(const AlgebraElement& a, const AlgebraElement& b);
bool approx_equal(const AlgebraElement& a, const AlgebraElement& b,
                  double tol = 1e-9);

/// Basis labels of A_k: codes [0, k^2) are d_{i,j} (row-major),
/// codes [k^2, 2k^2) are e_{r,s}.
struct BasisLabel {
    int k = 0;
    int code = 0;

    static BasisLabel d(int k, int i, int j) { return {k, i * k + j}; }
    static BasisLabel e(int k, int r, int s) { return {k, k * k + r * k + s}; }

    bool is_matrix_unit() const { return code >= k * k; }
    int row() const { return (is_matrix_unit() ? code - k * k : code) / k; }
    int col() const { return (is_matrix_unit() ? code - k * k : code) % k; }
};

AlgebraElement basis_element(const BasisLabel& b);

/// Product of two basis elements is another basis element or zero:
/// d_{i,j} d_{m,n} = [i=m][j=n] d_{i,j},  e_{r,s} e_{u,v} = [s=u] e_{r,v},
/// mixed products vanish. Returns the code, or -1 for zero.
int basis_product(int k, int a, int b);

/// Sparse element of A_k (x) A_k, keyed by pairs of basis codes.
struct TensorElement {
    int k = 0;
    std::map<std::pair<int, int>, Complex> coef;

    explicit TensorElement(int kk = 0) : k(kk) {}

    void add(int left, int right, Complex c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator*=(Complex s);
};

/// Delta, extended linearly from Eqs. on the d and e basis vectors.
TensorElement comultiply(const AlgebraElement& a);

TensorElement tensor_product(const AlgebraElement& a, const AlgebraElement& b);
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);
TensorElement tensor_adjoint(const TensorElement& t);

double linf_distance(const TensorElement& a, const TensorElement& b);
bool approx_equal(const TensorElement& a, const TensorElement& b,
                  double tol = 1e-9);

} // namespace sekine
