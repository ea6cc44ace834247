#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qinv/char_poly.hpp"
#include "qinv/linear_solve.hpp"
#include "qinv/matrix.hpp"

namespace qinv {

template <commutative_ring R>
struct VandermondeSpec {
    R ring;
    std::vector<typename R::elem> points;  // r_1..r_N
    int width;                             // n <= N

    VandermondeSpec(R rg, std::vector<typename R::elem> pts, int n)
        : ring(std::move(rg)), points(std::move(pts)), width(n) {
        if (width < 1 || static_cast<int>(points.size()) < width)
            throw invalid_argument_error("vandermonde spec needs N >= n >= 1");
    }
};

/// V(i,j) = r_i^j for j = 0..n-1.
template <commutative_ring R>
Matrix<R> vandermonde_build(const VandermondeSpec<R>& spec) {
    const R& ring = spec.ring;
    const int N = static_cast<int>(spec.points.size());
    Matrix<R> v(ring, N, spec.width);
    for (int i = 0; i < N; ++i) {
        auto pw = ring.one();
        for (int j = 0; j < spec.width; ++j) {
            v.at(i, j) = pw;
            if (j + 1 < spec.width) pw = ring.mul(pw, spec.points[i]);
        }
    }
    return v;
}

/// prod_{i<j} (r_j - r_i); differs from det(V) by the global sign
/// (-1)^(n(n-1)/2), and unit-ness agrees in every ring.
template <commutative_ring R>
typename R::elem vandermonde_det_product(const R& ring, const std::vector<typename R::elem>& points) {
    auto acc = ring.one();
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            acc = ring.mul(acc, ring.sub(points[j], points[i]));
    return acc;
}

template <commutative_ring R>
bool verify_left_inverse(const Matrix<R>& l, const Matrix<R>& v) {
    if (l.cols() != v.rows() || l.rows() != v.cols()) throw dimension_error("left inverse shape mismatch");
    return mat_eq(matmul(l, v), Matrix<R>::identity(v.ring(), v.cols()));
}

/// Solves X M = B elementwise over Z[b] by splitting every equation and
/// unknown into 1- and b-components; multiplication by u + v*b acts as
/// (a, c) -> (u a - 3 v c, v a + (u + v) c).
inline std::optional<Matrix<ZBetaRing>> solve_left_inverse_zbeta(const Matrix<ZBetaRing>& v) {
    const ZBetaRing zb;
    const IntRing z;
    const int N = v.rows(), n = v.cols();
    // unknowns: L (n x N), each entry two integers; equations: (L V)(r,c) = I(r,c)
    Matrix<IntRing> a(z, 2 * n * n, 2 * n * N);
    std::vector<Int> rhs(static_cast<std::size_t>(2) * n * n, Int(0));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const int e = r * n + c;
            for (int k = 0; k < N; ++k) {
                const int col_a = 2 * (r * N + k);
                const ZBetaElem& m = v.at(k, c);
                a.at(2 * e, col_a) += m.a;
                a.at(2 * e, col_a + 1) += -3 * m.b;
                a.at(2 * e + 1, col_a) += m.b;
                a.at(2 * e + 1, col_a + 1) += m.a + m.b;
            }
            rhs[2 * e] = (r == c) ? 1 : 0;
        }
    }
    auto sol = solve_integer(a, rhs);
    if (!std::holds_alternative<std::vector<Int>>(sol)) return std::nullopt;
    const auto& x = std::get<std::vector<Int>>(sol);
    Matrix<ZBetaRing> l(zb, n, N);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < N; ++k) l.at(r, k) = ZBetaElem{x[2 * (r * N + k)], x[2 * (r * N + k) + 1]};
    return l;
}

inline std::optional<Matrix<IntRing>> solve_left_inverse_integer(const Matrix<IntRing>& v) {
    const IntRing z;
    const int N = v.rows(), n = v.cols();
    Matrix<IntRing> a(z, n * n, n * N);
    std::vector<Int> rhs(static_cast<std::size_t>(n) * n, Int(0));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const int e = r * n + c;
            for (int k = 0; k < N; ++k) a.at(e, r * N + k) = v.at(k, c);
            rhs[e] = (r == c) ? 1 : 0;
        }
    }
    auto sol = solve_integer(a, rhs);
    if (!std::holds_alternative<std::vector<Int>>(sol)) return std::nullopt;
    const auto& x = std::get<std::vector<Int>>(sol);
    Matrix<IntRing> l(z, n, N);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < N; ++k) l.at(r, k) = x[r * N + k];
    return l;
}

template <commutative_ring R>
struct LeftInvertibleResult {
    std::vector<typename R::elem> points;
    Matrix<R> left_inverse;
};

/// Bounded search over the supplied candidate points for a left-invertible
/// Vandermonde matrix. Over a field any n distinct points give a square
/// invertible V; over Z and Z[b] subsets of size n..N_max are tried in
/// lexicographic index order and L V = I is solved exactly.
template <commutative_ring R>
std::optional<LeftInvertibleResult<R>> search_left_invertible(const R& ring, int n,
                                                              const std::vector<typename R::elem>& candidates,
                                                              int n_max) {
    if (n < 1) throw invalid_argument_error("width must be at least 1");
    if constexpr (is_field_v<R>) {
        std::vector<typename R::elem> pts;
        for (const auto& c : candidates) {
            bool dup = false;
            for (const auto& p : pts) dup = dup || ring.eq(p, c);
            if (!dup) pts.push_back(c);
            if (static_cast<int>(pts.size()) == n) break;
        }
        if (static_cast<int>(pts.size()) < n) return std::nullopt;
        VandermondeSpec<R> spec(ring, pts, n);
        Matrix<R> v = vandermonde_build(spec);
        return LeftInvertibleResult<R>{std::move(pts), inverse_or_throw(v)};
    } else if constexpr (std::is_same_v<R, IntRing> || std::is_same_v<R, ZBetaRing>) {
        const int total = static_cast<int>(candidates.size());
        for (int size = n; size <= std::min(n_max, total); ++size) {
            std::vector<int> idx(size);
            for (int i = 0; i < size; ++i) idx[i] = i;
            while (true) {
                std::vector<typename R::elem> pts;
                for (int i : idx) pts.push_back(candidates[i]);
                VandermondeSpec<R> spec(ring, pts, n);
                Matrix<R> v = vandermonde_build(spec);
                std::optional<Matrix<R>> l;
                if constexpr (std::is_same_v<R, IntRing>) {
                    l = solve_left_inverse_integer(v);
                } else {
                    l = solve_left_inverse_zbeta(v);
                }
                if (l) return LeftInvertibleResult<R>{std::move(pts), std::move(*l)};
                // next combination in lexicographic order
                int pos = size - 1;
                while (pos >= 0 && idx[pos] == total - size + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
        return std::nullopt;
    } else {
        throw capability_error("left-inverse search is not supported over " + ring.name());
    }
}

/// Checks the generator-reconstruction identity
/// H_i = sum_j L(i,j) (H_1 + r_j H_2 + ... + r_j^(n-1) H_n).
template <commutative_ring R>
bool verify_generator_reconstruction(const std::vector<Matrix<R>>& h, const std::vector<typename R::elem>& points,
                        const Matrix<R>& l) {
    const int n = static_cast<int>(h.size());
    const int N = static_cast<int>(points.size());
    if (n == 0) throw invalid_argument_error("empty generator list");
    const R& ring = h[0].ring();
    if (l.rows() != n || l.cols() != N) throw dimension_error("left inverse must be n x N");

    std::vector<Matrix<R>> combos;
    combos.reserve(N);
    for (int j = 0; j < N; ++j) {
        Matrix<R> acc(ring, h[0].rows(), h[0].cols());
        auto pw = ring.one();
        for (int t = 0; t < n; ++t) {
            acc = mat_add(acc, scalar_mul(pw, h[t]));
            if (t + 1 < n) pw = ring.mul(pw, points[j]);
        }
        combos.push_back(std::move(acc));
    }
    for (int i = 0; i < n; ++i) {
        Matrix<R> acc(ring, h[0].rows(), h[0].cols());
        for (int j = 0; j < N; ++j) acc = mat_add(acc, scalar_mul(l.at(i, j), combos[j]));
        if (!mat_eq(acc, h[i])) return false;
    }
    return true;
}

}  // namespace qinv
