#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qinv/matrix.hpp"

namespace qinv {

/// Why a linear system has no solution. Over Z the obstruction is a
/// divisibility failure (divisor does not divide remainder); over fields it
/// is a rank deficiency at the reported row.
struct NoSolution {
    enum Kind { Rank, Divisibility } kind = Rank;
    int row = -1;
    Int divisor = 0, remainder = 0;

    std::string to_string() const {
        if (kind == Divisibility) return int_str(divisor) + " does not divide " + int_str(remainder);
        return "rank deficiency: row " + std::to_string(row) + " reduces to 0 = nonzero";
    }
};

template <commutative_ring R>
using SolveResult = std::variant<std::vector<typename R::elem>, NoSolution>;

/// Solves A x = b over a field by Gaussian elimination; free variables are
/// set to zero, so any consistent system yields some exact solution.
template <commutative_ring R>
    requires is_field_v<R>
SolveResult<R> solve_field(const Matrix<R>& A, const std::vector<typename R::elem>& b) {
    const R& ring = A.ring();
    if (static_cast<int>(b.size()) != A.rows()) throw dimension_error("rhs length mismatch");
    const int m = A.rows(), n = A.cols();

    std::vector<std::vector<typename R::elem>> aug(m);
    for (int i = 0; i < m; ++i) {
        aug[i].reserve(n + 1);
        for (int j = 0; j < n; ++j) aug[i].push_back(A.at(i, j));
        aug[i].push_back(b[i]);
    }

    std::vector<int> pivot_col(m, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i) {
            if (!ring.is_zero(aug[i][col])) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(aug[rank], aug[piv]);
        auto inv = ring.try_invert(aug[rank][col]);
        for (int j = col; j <= n; ++j) aug[rank][j] = ring.mul(*inv, aug[rank][j]);
        for (int i = 0; i < m; ++i) {
            if (i == rank || ring.is_zero(aug[i][col])) continue;
            auto f = aug[i][col];
            for (int j = col; j <= n; ++j) aug[i][j] = ring.sub(aug[i][j], ring.mul(f, aug[rank][j]));
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int i = rank; i < m; ++i) {
        if (!ring.is_zero(aug[i][n])) return NoSolution{NoSolution::Rank, i, 0, 0};
    }
    std::vector<typename R::elem> x(n, ring.zero());
    for (int i = 0; i < rank; ++i) x[pivot_col[i]] = aug[i][n];
    return x;
}

/// Smith normal form D = U A V with U, V unimodular and the diagonal
/// divisibility chain d1 | d2 | ...
struct SmithForm {
    Matrix<IntRing> u, d, v;
};

inline SmithForm smith_normal_form(const Matrix<IntRing>& A) {
    const IntRing zr;
    const int m = A.rows(), n = A.cols();
    Matrix<IntRing> D = A;
    Matrix<IntRing> U = Matrix<IntRing>::identity(zr, m);
    Matrix<IntRing> V = Matrix<IntRing>::identity(zr, n);

    auto swap_rows = [&](Matrix<IntRing>& M, int a, int b) {
        for (int j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
    };
    auto swap_cols = [&](Matrix<IntRing>& M, int a, int b) {
        for (int i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
    };
    auto add_row = [&](Matrix<IntRing>& M, int dst, int src, const Int& f) {
        for (int j = 0; j < M.cols(); ++j) M.at(dst, j) += f * M.at(src, j);
    };
    auto add_col = [&](Matrix<IntRing>& M, int dst, int src, const Int& f) {
        for (int i = 0; i < M.rows(); ++i) M.at(i, dst) += f * M.at(i, src);
    };

    int t = 0;
    while (t < m && t < n) {
        // locate the nonzero entry of smallest magnitude in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i) {
            for (int j = t; j < n; ++j) {
                if (D.at(i, j) == 0) continue;
                if (pi < 0 || cmp(abs(D.at(i, j)), abs(D.at(pi, pj))) < 0) pi = i, pj = j;
            }
        }
        if (pi < 0) break;
        if (pi != t) swap_rows(D, pi, t), swap_rows(U, pi, t);
        if (pj != t) swap_cols(D, pj, t), swap_cols(V, pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                add_row(D, i, t, -q);
                add_row(U, i, t, -q);
                if (D.at(i, t) != 0) {
                    // remainder became the smaller pivot candidate
                    swap_rows(D, i, t), swap_rows(U, i, t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                add_col(D, j, t, -q);
                add_col(V, j, t, -q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, j, t), swap_cols(V, j, t);
                    clean = false;
                }
            }
        }

        // enforce divisibility of the trailing block by the pivot
        bool redo = false;
        for (int i = t + 1; i < m && !redo; ++i) {
            for (int j = t + 1; j < n && !redo; ++j) {
                if (D.at(i, j) % D.at(t, t) != 0) {
                    add_row(D, t, i, Int(1));
                    add_row(U, t, i, Int(1));
                    redo = true;
                }
            }
        }
        if (redo) continue;

        if (D.at(t, t) < 0) {
            for (int j = 0; j < n; ++j) D.at(t, j) = -D.at(t, j);
            for (int j = 0; j < m; ++j) U.at(t, j) = -U.at(t, j);
        }
        ++t;
    }
    return {std::move(U), std::move(D), std::move(V)};
}

/// Solves A x = b over Z via the Smith normal form; reports a divisibility
/// obstruction (d does not divide c) when the system is solvable over Q but
/// not over Z, and a rank obstruction when inconsistent outright.
inline SolveResult<IntRing> solve_integer(const Matrix<IntRing>& A, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw dimension_error("rhs length mismatch");
    SmithForm s = smith_normal_form(A);
    const int m = A.rows(), n = A.cols();

    std::vector<Int> c(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) c[i] += s.u.at(i, j) * b[j];

    std::vector<Int> z(n, 0);
    for (int i = 0; i < std::min(m, n); ++i) {
        const Int& d = s.d.at(i, i);
        if (d == 0) {
            if (c[i] != 0) return NoSolution{NoSolution::Rank, i, 0, 0};
        } else {
            if (c[i] % d != 0) return NoSolution{NoSolution::Divisibility, i, d, mod_floor(c[i], d)};
            z[i] = c[i] / d;
        }
    }
    for (int i = n; i < m; ++i) {
        if (c[i] != 0) return NoSolution{NoSolution::Rank, i, 0, 0};
    }
    std::vector<Int> x(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i] += s.v.at(i, j) * z[j];
    return x;
}

/// mat_alg's ring-dispatching solver: fields use Gaussian elimination, Z uses
/// the Smith form. Other rings are a deliberate capability gap.
template <commutative_ring R>
SolveResult<R> solve_linear(const Matrix<R>& A, const std::vector<typename R::elem>& b) {
    if constexpr (is_field_v<R>) {
        return solve_field(A, b);
    } else if constexpr (std::is_same_v<R, IntRing>) {
        return solve_integer(A, b);
    } else {
        throw capability_error("linear solving is not supported over " + A.ring().name());
    }
}

}  // namespace qinv
