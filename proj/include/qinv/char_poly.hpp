#pragma once

#include <variant>
#include <vector>

#include "qinv/matrix.hpp"

namespace qinv {

/// Coefficients p0..pn of p_A(x) = det(A - xI); p0 = det(A), pn = (-1)^n.
template <commutative_ring R>
struct CharPoly {
    std::vector<typename R::elem> p;
    int degree() const { return static_cast<int>(p.size()) - 1; }
};

/// Division-free characteristic polynomial (Samuelson-Berkowitz). Valid over
/// any commutative ring; O(n^4) ring operations.
template <commutative_ring R>
CharPoly<R> char_poly(const Matrix<R>& A) {
    if (A.rows() != A.cols()) throw dimension_error("characteristic polynomial of a non-square matrix");
    const R& ring = A.ring();
    const int n = A.rows();

    // vec holds det(A_k - xI) for the trailing principal k x k block,
    // highest-degree coefficient first.
    std::vector<typename R::elem> vec{ring.neg(ring.one()), A.at(n - 1, n - 1)};
    for (int i = n - 2; i >= 0; --i) {
        const int k = n - i;
        std::vector<typename R::elem> t(k + 1, ring.zero());
        t[0] = ring.neg(ring.one());
        t[1] = A.at(i, i);
        // t[j] = row * M^(j-2) * col, computed by iterating v <- M v.
        std::vector<typename R::elem> v(k - 1);
        for (int r = 0; r < k - 1; ++r) v[r] = A.at(i + 1 + r, i);
        for (int j = 2; j <= k; ++j) {
            auto acc = ring.zero();
            for (int r = 0; r < k - 1; ++r) acc = ring.add(acc, ring.mul(A.at(i, i + 1 + r), v[r]));
            t[j] = acc;
            if (j < k) {
                std::vector<typename R::elem> w(k - 1, ring.zero());
                for (int r = 0; r < k - 1; ++r)
                    for (int c = 0; c < k - 1; ++c)
                        w[r] = ring.add(w[r], ring.mul(A.at(i + 1 + r, i + 1 + c), v[c]));
                v = std::move(w);
            }
        }
        std::vector<typename R::elem> next(k + 1, ring.zero());
        for (int ii = 0; ii <= k; ++ii) {
            auto acc = ring.zero();
            for (int j = 0; j <= std::min(ii, k - 1); ++j) acc = ring.add(acc, ring.mul(t[ii - j], vec[j]));
            next[ii] = std::move(acc);
        }
        vec = std::move(next);
    }

    CharPoly<R> cp;
    cp.p.assign(vec.rbegin(), vec.rend());
    return cp;
}

template <commutative_ring R>
typename R::elem det(const Matrix<R>& A) {
    return char_poly(A).p[0];
}

/// p0 I + p1 A + ... + pn A^n, evaluated by Horner's rule.
template <commutative_ring R>
Matrix<R> char_poly_eval(const CharPoly<R>& cp, const Matrix<R>& A) {
    const int n = cp.degree();
    Matrix<R> B = scalar_mul(cp.p[n], Matrix<R>::identity(A.ring(), A.rows()));
    for (int k = n - 1; k >= 0; --k)
        B = mat_add(matmul(A, B), scalar_mul(cp.p[k], Matrix<R>::identity(A.ring(), A.rows())));
    return B;
}

/// adj(A) = -(p1 I + p2 A + ... + pn A^(n-1)).
template <commutative_ring R>
Matrix<R> adjugate(const Matrix<R>& A) {
    if (A.rows() != A.cols()) throw dimension_error("adjugate of a non-square matrix");
    const CharPoly<R> cp = char_poly(A);
    const int n = cp.degree();
    Matrix<R> B = scalar_mul(cp.p[n], Matrix<R>::identity(A.ring(), n));
    for (int k = n - 1; k >= 1; --k)
        B = mat_add(matmul(A, B), scalar_mul(cp.p[k], Matrix<R>::identity(A.ring(), n)));
    return mat_neg(B);
}

template <commutative_ring R>
struct NotInvertible {
    typename R::elem det;
};

template <commutative_ring R>
using InverseResult = std::variant<Matrix<R>, NotInvertible<R>>;

template <commutative_ring R>
Matrix<R> inverse_or_throw(const Matrix<R>& A);

/// det(A)^-1 * adj(A) when det(A) is a unit; NotInvertible{det} otherwise.
template <commutative_ring R>
InverseResult<R> inverse(const Matrix<R>& A) {
    if (A.rows() != A.cols()) throw dimension_error("inverse of a non-square matrix");
    const CharPoly<R> cp = char_poly(A);
    auto inv_det = A.ring().try_invert(cp.p[0]);
    if (!inv_det) return NotInvertible<R>{cp.p[0]};
    const int n = cp.degree();
    Matrix<R> B = scalar_mul(cp.p[n], Matrix<R>::identity(A.ring(), n));
    for (int k = n - 1; k >= 1; --k)
        B = mat_add(matmul(A, B), scalar_mul(cp.p[k], Matrix<R>::identity(A.ring(), n)));
    return scalar_mul(A.ring().neg(*inv_det), B);
}

template <commutative_ring R>
Matrix<R> inverse_or_throw(const Matrix<R>& A) {
    auto r = inverse(A);
    if (auto* m = std::get_if<Matrix<R>>(&r)) return std::move(*m);
    throw invalid_argument_error("matrix is not invertible over " + A.ring().name() + ": det = " +
                                 A.ring().to_string(std::get<NotInvertible<R>>(r).det));
}

}  // namespace qinv
