#pragma once

#include <string>
#include <vector>

#include "qinv/rings.hpp"

namespace qinv {

/// Dense rectangular matrix over a ring context. Value type; operations are
/// pure functions returning fresh matrices.
template <commutative_ring R>
class Matrix {
public:
    using elem = typename R::elem;

    Matrix(R ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, ring_.zero()) {
        if (rows < 1 || cols < 1) throw dimension_error("matrix dimensions must be at least 1x1");
    }

    static Matrix zero(const R& ring, int rows, int cols) { return Matrix(ring, rows, cols); }

    static Matrix identity(const R& ring, int n) {
        Matrix m(ring, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
        return m;
    }

    const R& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const elem& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    elem& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + ring_.to_string(at(i, j));
            s += "]";
        }
        return s + "]";
    }

private:
    R ring_;
    int rows_, cols_;
    std::vector<elem> data_;
};

template <commutative_ring R>
void require_same_ring(const R& a, const R& b) {
    if (!(a == b)) throw ring_mismatch("operands belong to different rings: " + a.name() + " vs " + b.name());
}

template <commutative_ring R>
bool mat_eq(const Matrix<R>& a, const Matrix<R>& b) {
    if (!a.same_shape(b)) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a.ring().eq(a.at(i, j), b.at(i, j))) return false;
    return true;
}

template <commutative_ring R>
bool mat_is_zero(const Matrix<R>& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a.ring().is_zero(a.at(i, j))) return false;
    return true;
}

template <commutative_ring R>
Matrix<R> mat_add(const Matrix<R>& a, const Matrix<R>& b) {
    require_same_ring(a.ring(), b.ring());
    if (!a.same_shape(b)) throw dimension_error("matrix addition shape mismatch");
    Matrix<R> r(a.ring(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.ring().add(a.at(i, j), b.at(i, j));
    return r;
}

template <commutative_ring R>
Matrix<R> mat_sub(const Matrix<R>& a, const Matrix<R>& b) {
    require_same_ring(a.ring(), b.ring());
    if (!a.same_shape(b)) throw dimension_error("matrix subtraction shape mismatch");
    Matrix<R> r(a.ring(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.ring().sub(a.at(i, j), b.at(i, j));
    return r;
}

template <commutative_ring R>
Matrix<R> mat_neg(const Matrix<R>& a) {
    Matrix<R> r(a.ring(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.ring().neg(a.at(i, j));
    return r;
}

template <commutative_ring R>
Matrix<R> scalar_mul(const typename R::elem& c, const Matrix<R>& a) {
    Matrix<R> r(a.ring(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.ring().mul(c, a.at(i, j));
    return r;
}

template <commutative_ring R>
Matrix<R> matmul(const Matrix<R>& a, const Matrix<R>& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.cols() != b.rows())
        throw dimension_error("matrix product shape mismatch: " + std::to_string(a.cols()) + " vs " +
                              std::to_string(b.rows()));
    const R& ring = a.ring();
    Matrix<R> r(ring, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (ring.is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (ring.is_zero(b.at(k, j))) continue;
                r.at(i, j) = ring.add(r.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
            }
        }
    }
    return r;
}

template <commutative_ring R>
Matrix<R> mat_transpose(const Matrix<R>& a) {
    Matrix<R> r(a.ring(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

/// Rebuilds a matrix entrywise through a ring morphism, e.g. Z -> Z/pZ.
template <commutative_ring Src, commutative_ring Dst, typename F>
Matrix<Dst> mat_map(const Matrix<Src>& a, const Dst& dst, F&& f) {
    Matrix<Dst> r(dst, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = f(a.at(i, j));
    return r;
}

}  // namespace qinv
