#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qinv/expr.hpp"
#include "qinv/function_rings.hpp"
#include "qinv/linear_solve.hpp"
#include "qinv/matrix.hpp"

namespace qinv {

/// Membership verdict with a checkable certificate: the generator
/// coefficients when the matrix lies in the module, or the obstruction.
template <commutative_ring R>
struct ContainsResult {
    bool member = false;
    std::optional<std::vector<typename R::elem>> coefficients;
    std::optional<NoSolution> obstruction;
    std::string detail;
};

/// The controller constraint set S, an R-module of n x m matrices, given as
/// a sparsity pattern, entrywise delay bounds, or an explicit generator list.
template <commutative_ring R>
class ControllerSet {
public:
    enum Kind { Sparsity, DelayBounds, Generators };

    static ControllerSet sparsity(const R& ring, std::vector<std::vector<bool>> pattern) {
        if (pattern.empty() || pattern[0].empty()) throw dimension_error("empty sparsity pattern");
        for (const auto& row : pattern)
            if (row.size() != pattern[0].size()) throw dimension_error("ragged sparsity pattern");
        ControllerSet s(ring, static_cast<int>(pattern.size()), static_cast<int>(pattern[0].size()), Sparsity);
        s.pattern_ = std::move(pattern);
        return s;
    }

    static ControllerSet delay_bounds(const R& ring, const std::string& d_var,
                                      std::vector<std::vector<std::int64_t>> bounds) {
        if constexpr (!std::is_same_v<R, ProperRatRing>) {
            throw capability_error("delay bounds require a proper rational function ring");
        } else {
            if (bounds.empty() || bounds[0].empty()) throw dimension_error("empty delay bound table");
            for (const auto& row : bounds) {
                if (row.size() != bounds[0].size()) throw dimension_error("ragged delay bound table");
                for (auto b : row)
                    if (b < 0) throw invalid_argument_error("delay bounds must be nonnegative");
            }
            std::size_t d_index = ring.arity();
            for (std::size_t i : ring.proper_indices())
                if (ring.var_names()[i] == d_var) d_index = i;
            if (d_index == ring.arity())
                throw invalid_argument_error("delay variable '" + d_var + "' is not a proper variable of " +
                                             ring.name());
            ControllerSet s(ring, static_cast<int>(bounds.size()), static_cast<int>(bounds[0].size()), DelayBounds);
            s.d_var_ = d_var;
            s.d_index_ = d_index;
            s.bounds_ = std::move(bounds);
            return s;
        }
    }

    static ControllerSet from_generators(const R& ring, std::vector<Matrix<R>> gens) {
        if (gens.empty()) throw invalid_argument_error("generator list must not be empty");
        for (const auto& g : gens) {
            require_same_ring(ring, g.ring());
            if (!g.same_shape(gens[0])) throw dimension_error("generators differ in shape");
        }
        ControllerSet s(ring, gens[0].rows(), gens[0].cols(), Generators);
        s.gens_ = std::move(gens);
        return s;
    }

    const R& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Kind kind() const { return kind_; }
    const std::vector<std::vector<bool>>& pattern() const { return pattern_; }
    const std::vector<std::vector<std::int64_t>>& bounds() const { return bounds_; }
    const std::string& delay_var() const { return d_var_; }
    std::size_t delay_var_index() const { return d_index_; }

    /// A finite generating set for S as an R-module.
    std::vector<Matrix<R>> generators() const {
        std::vector<Matrix<R>> out;
        switch (kind_) {
            case Sparsity:
                for (int i = 0; i < rows_; ++i) {
                    for (int j = 0; j < cols_; ++j) {
                        if (!pattern_[i][j]) continue;
                        Matrix<R> e(ring_, rows_, cols_);
                        e.at(i, j) = ring_.one();
                        out.push_back(std::move(e));
                    }
                }
                break;
            case DelayBounds:
                if constexpr (std::is_same_v<R, ProperRatRing>) {
                    for (int i = 0; i < rows_; ++i) {
                        for (int j = 0; j < cols_; ++j) {
                            Matrix<R> e(ring_, rows_, cols_);
                            e.at(i, j) = delay_element(bounds_[i][j]);
                            out.push_back(std::move(e));
                        }
                    }
                }
                break;
            case Generators:
                out = gens_;
                break;
        }
        return out;
    }

    /// Exact membership with certificate.
    ContainsResult<R> contains(const Matrix<R>& k) const {
        require_same_ring(ring_, k.ring());
        if (k.rows() != rows_ || k.cols() != cols_)
            throw dimension_error("candidate matrix shape does not match the controller set");
        switch (kind_) {
            case Sparsity:
                for (int i = 0; i < rows_; ++i) {
                    for (int j = 0; j < cols_; ++j) {
                        if (!pattern_[i][j] && !ring_.is_zero(k.at(i, j))) {
                            return {false, std::nullopt, std::nullopt,
                                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") is nonzero off the sparsity pattern"};
                        }
                    }
                }
                return {true, std::nullopt, std::nullopt, "supported on the sparsity pattern"};
            case DelayBounds:
                if constexpr (std::is_same_v<R, ProperRatRing>) {
                    for (int i = 0; i < rows_; ++i) {
                        for (int j = 0; j < cols_; ++j) {
                            DelayValue d = rf_delay(k.at(i, j), d_index_);
                            if (!d.at_least(bounds_[i][j])) {
                                return {false, std::nullopt, std::nullopt,
                                        "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ") has delay " + d.to_string() + " < bound " +
                                            std::to_string(bounds_[i][j])};
                            }
                        }
                    }
                    return {true, std::nullopt, std::nullopt, "entrywise delays meet the bounds"};
                }
                throw capability_error("delay bounds require a proper rational function ring");
            case Generators:
                return generator_membership(k);
        }
        throw error("unreachable controller set kind");
    }

private:
    ControllerSet(R ring, int rows, int cols, Kind kind)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), kind_(kind) {}

    /// 1/d^a: the delay element of the ring (d itself is not proper in d).
    typename R::elem delay_element(std::int64_t a) const {
        if constexpr (std::is_same_v<R, ProperRatRing>) {
            if (a == 0) return ring_.one();
            return rf_normalize(mp_const(Rat(1), ring_.arity()),
                                mp_var(ring_.arity(), d_index_, static_cast<std::uint32_t>(a)));
        } else {
            throw capability_error("delay bounds require a proper rational function ring");
        }
    }

    ContainsResult<R> generator_membership(const Matrix<R>& k) const {
        if constexpr (is_field_v<R> || std::is_same_v<R, IntRing>) {
            const int q = static_cast<int>(gens_.size());
            Matrix<R> A(ring_, rows_ * cols_, q);
            std::vector<typename R::elem> b;
            b.reserve(static_cast<std::size_t>(rows_) * cols_);
            for (int i = 0; i < rows_; ++i) {
                for (int j = 0; j < cols_; ++j) {
                    for (int g = 0; g < q; ++g) A.at(i * cols_ + j, g) = gens_[g].at(i, j);
                    b.push_back(k.at(i, j));
                }
            }
            auto sol = solve_linear(A, b);
            if (auto* x = std::get_if<std::vector<typename R::elem>>(&sol)) {
                return {true, std::move(*x), std::nullopt, "generator coefficients found"};
            }
            auto ns = std::get<NoSolution>(sol);
            std::string detail = ns.to_string();
            return {false, std::nullopt, std::move(ns), std::move(detail)};
        } else {
            throw capability_error("generator membership is supported over fields and Z, not " + ring_.name());
        }
    }

    R ring_;
    int rows_, cols_;
    Kind kind_;
    std::vector<std::vector<bool>> pattern_;
    std::vector<std::vector<std::int64_t>> bounds_;
    std::string d_var_;
    std::size_t d_index_ = 0;
    std::vector<Matrix<R>> gens_;
};

}  // namespace qinv
