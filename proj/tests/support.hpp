#pragma once

#include <random>
#include <vector>

#include "qinv/char_poly.hpp"
#include "qinv/expr.hpp"
#include "qinv/function_rings.hpp"
#include "qinv/matrix.hpp"

namespace qinv::testsupport {

using Rng = std::mt19937_64;

inline Int random_int(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Int(d(rng));
}

inline Rat random_rat(Rng& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return make_rat(Int(num(rng)), Int(den(rng)));
}

inline ZBetaElem random_zbeta(Rng& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    return {Int(d(rng)), Int(d(rng))};
}

/// Random rational function with small per-variable degrees; always a valid
/// (nonzero-denominator) element of the field over `arity` variables.
inline RatFunc random_ratfunc(Rng& rng, std::size_t arity, std::uint32_t max_deg = 1) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
    auto random_poly = [&](bool nonzero) {
        MultiPoly p;
        for (int t = 0; t < 3; ++t) {
            Mono m(arity, 0);
            for (std::size_t v = 0; v < arity; ++v) m[v] = deg(rng);
            int c = coef(rng);
            if (c == 0) continue;
            MultiPoly term;
            term.terms.push_back({std::move(m), Rat(c)});
            p = mp_add(p, term);
        }
        if (nonzero && p.is_zero()) p = mp_const(Rat(1), arity);
        return p;
    };
    return rf_normalize(random_poly(false), random_poly(true));
}

/// Proper (or strictly proper) in every listed variable: den of per-variable
/// degree k with a guaranteed leading mixed term, num of degree <= k (< k).
inline RatFunc random_proper(Rng& rng, const ProperRatRing& ring, bool strict) {
    const std::size_t arity = ring.arity();
    auto proper_idx = ring.proper_indices();
    std::uniform_int_distribution<int> coef(-4, 4), coef_nz(1, 4);
    std::uniform_int_distribution<std::uint32_t> ddeg(1, 2);

    std::uint32_t k = ddeg(rng);
    MultiPoly den;
    {
        // dominant term s1^k * ... * sk^k keeps every per-variable degree = k
        Mono dominant(arity, 0);
        for (std::size_t v : proper_idx) dominant[v] = k;
        den.terms.push_back({dominant, Rat(coef_nz(rng))});
        for (int t = 0; t < 2; ++t) {
            Mono mm(arity, 0);
            for (std::size_t v = 0; v < arity; ++v) {
                std::uniform_int_distribution<std::uint32_t> dd(0, k - 1);
                mm[v] = dd(rng);
            }
            if (mm == dominant) continue;  // never cancel the dominant term
            int c = coef(rng);
            if (c == 0) continue;
            MultiPoly term;
            term.terms.push_back({std::move(mm), Rat(c)});
            den = mp_add(den, term);
        }
    }
    MultiPoly num;
    for (int t = 0; t < 2; ++t) {
        Mono mm(arity, 0);
        for (std::size_t v = 0; v < arity; ++v) {
            std::uint32_t cap = k;
            for (std::size_t pv : proper_idx)
                if (pv == v && strict) cap = k - 1;
            std::uniform_int_distribution<std::uint32_t> dd(0, cap);
            mm[v] = dd(rng);
        }
        int c = coef(rng);
        if (c == 0) continue;
        MultiPoly term;
        term.terms.push_back({std::move(mm), Rat(c)});
        num = mp_add(num, term);
    }
    RatFunc f = rf_normalize(std::move(num), std::move(den));
    // reduction can only lower numerator degrees, so properness survives
    return f;
}

template <commutative_ring R>
Matrix<R> random_matrix(Rng& rng, const R& ring, int rows, int cols) {
    Matrix<R> m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if constexpr (std::is_same_v<R, IntRing>) {
                m.at(i, j) = random_int(rng, -5, 5);
            } else if constexpr (std::is_same_v<R, RatRing>) {
                m.at(i, j) = random_rat(rng);
            } else if constexpr (std::is_same_v<R, ModRing>) {
                std::uniform_int_distribution<long> d(0, ring.modulus().get_si() - 1);
                m.at(i, j) = Int(d(rng));
            } else if constexpr (std::is_same_v<R, ZBetaRing>) {
                m.at(i, j) = random_zbeta(rng);
            } else if constexpr (std::is_same_v<R, RatFuncField>) {
                m.at(i, j) = random_ratfunc(rng, ring.arity());
            } else if constexpr (std::is_same_v<R, ProperRatRing>) {
                m.at(i, j) = random_proper(rng, ring, false);
            } else {
                static_assert(std::is_same_v<R, IntRing>, "no random generator for this ring");
            }
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Independent oracles: Laplace-expansion determinant and cofactor adjugate.
// These never touch the Berkowitz path they are used to check.
// ---------------------------------------------------------------------------

template <commutative_ring R>
typename R::elem laplace_det(const Matrix<R>& A) {
    const R& ring = A.ring();
    const int n = A.rows();
    if (n == 1) return A.at(0, 0);
    auto acc = ring.zero();
    for (int j = 0; j < n; ++j) {
        if (ring.is_zero(A.at(0, j))) continue;
        Matrix<R> minor(ring, n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = A.at(r, c);
            }
        }
        auto term = ring.mul(A.at(0, j), laplace_det(minor));
        acc = (j % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

template <commutative_ring R>
Matrix<R> cofactor_adjugate(const Matrix<R>& A) {
    const R& ring = A.ring();
    const int n = A.rows();
    Matrix<R> adj(ring, n, n);
    if (n == 1) {
        adj.at(0, 0) = ring.one();
        return adj;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Matrix<R> minor(ring, n - 1, n - 1);
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = A.at(r, c);
                }
                ++rr;
            }
            auto cof = laplace_det(minor);
            if ((i + j) % 2 != 0) cof = ring.neg(cof);
            adj.at(j, i) = cof;  // transpose of the cofactor matrix
        }
    }
    return adj;
}

}  // namespace qinv::testsupport
