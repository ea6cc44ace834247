#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "qinv/monomial.hpp"
#include "qinv/rings.hpp"

namespace qinv {

/// Sparse multivariate polynomial with coefficients in an arbitrary ring.
/// Terms are kept strictly descending in graded-lex order with no zero
/// coefficients; the zero polynomial is the empty term list.
template <typename Coef>
struct SparsePoly {
    std::vector<std::pair<Mono, Coef>> terms;

    bool is_zero() const { return terms.empty(); }
    const Mono& leading_mono() const { return terms.front().first; }
    const Coef& leading_coef() const { return terms.front().second; }
};

constexpr std::int64_t kDegNegInf = std::numeric_limits<std::int64_t>::min();

template <commutative_ring R>
SparsePoly<typename R::elem> poly_zero(const R&) {
    return {};
}

template <commutative_ring R>
SparsePoly<typename R::elem> poly_const(const R& base, typename R::elem c, std::size_t arity) {
    SparsePoly<typename R::elem> p;
    if (!base.is_zero(c)) p.terms.push_back({Mono(arity, 0), std::move(c)});
    return p;
}

template <commutative_ring R>
SparsePoly<typename R::elem> poly_var(const R& base, std::size_t arity, std::size_t idx, std::uint32_t exp = 1) {
    SparsePoly<typename R::elem> p;
    if (exp == 0) return poly_const(base, base.one(), arity);
    Mono m(arity, 0);
    m[idx] = exp;
    p.terms.push_back({std::move(m), base.one()});
    return p;
}

/// Sorted-merge addition.
template <commutative_ring R>
SparsePoly<typename R::elem> poly_add(const R& base, const SparsePoly<typename R::elem>& a,
                                      const SparsePoly<typename R::elem>& b) {
    SparsePoly<typename R::elem> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = grlex_cmp(a.terms[i].first, b.terms[j].first);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            auto s = base.add(a.terms[i].second, b.terms[j].second);
            if (!base.is_zero(s)) r.terms.push_back({a.terms[i].first, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

template <commutative_ring R>
SparsePoly<typename R::elem> poly_neg(const R& base, const SparsePoly<typename R::elem>& a) {
    SparsePoly<typename R::elem> r = a;
    for (auto& [m, c] : r.terms) c = base.neg(c);
    return r;
}

template <commutative_ring R>
SparsePoly<typename R::elem> poly_sub(const R& base, const SparsePoly<typename R::elem>& a,
                                      const SparsePoly<typename R::elem>& b) {
    return poly_add(base, a, poly_neg(base, b));
}

template <commutative_ring R>
SparsePoly<typename R::elem> poly_scale(const R& base, const typename R::elem& c,
                                        const SparsePoly<typename R::elem>& a) {
    SparsePoly<typename R::elem> r;
    if (base.is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& [m, x] : a.terms) {
        auto p = base.mul(c, x);
        if (!base.is_zero(p)) r.terms.push_back({m, std::move(p)});
    }
    return r;
}

template <commutative_ring R>
SparsePoly<typename R::elem> poly_mul(const R& base, const SparsePoly<typename R::elem>& a,
                                      const SparsePoly<typename R::elem>& b) {
    std::map<Mono, typename R::elem, GrlexGreater> acc;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            Mono m = mono_mul(ma, mb);
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), base.mul(ca, cb));
            else
                it->second = base.add(it->second, base.mul(ca, cb));
        }
    }
    SparsePoly<typename R::elem> r;
    r.terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!base.is_zero(c)) r.terms.push_back({m, std::move(c)});
    return r;
}

template <commutative_ring R>
bool poly_eq(const R& base, const SparsePoly<typename R::elem>& a, const SparsePoly<typename R::elem>& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].first != b.terms[i].first) return false;
        if (!base.eq(a.terms[i].second, b.terms[i].second)) return false;
    }
    return true;
}

/// Per-variable degree; kDegNegInf for the zero polynomial.
template <typename Coef>
std::int64_t poly_degree_in(const SparsePoly<Coef>& a, std::size_t var) {
    if (a.terms.empty()) return kDegNegInf;
    std::int64_t d = 0;
    for (const auto& [m, c] : a.terms) d = std::max<std::int64_t>(d, m[var]);
    return d;
}

template <typename Coef>
std::int64_t poly_total_degree(const SparsePoly<Coef>& a) {
    if (a.terms.empty()) return kDegNegInf;
    std::int64_t d = 0;
    for (const auto& [m, c] : a.terms) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(total_degree(m)));
    return d;
}

template <typename Coef>
bool poly_is_constant(const SparsePoly<Coef>& a) {
    return a.terms.empty() || (a.terms.size() == 1 && total_degree(a.terms[0].first) == 0);
}

template <commutative_ring R>
typename R::elem poly_constant_coef(const R& base, const SparsePoly<typename R::elem>& a) {
    if (a.terms.empty()) return base.zero();
    const auto& last = a.terms.back();
    if (total_degree(last.first) == 0) return last.second;
    return base.zero();
}

template <commutative_ring R>
typename R::elem poly_eval(const R& base, const SparsePoly<typename R::elem>& a,
                           const std::vector<typename R::elem>& point) {
    auto acc = base.zero();
    for (const auto& [m, c] : a.terms) {
        auto t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) t = base.mul(t, point[i]);
        acc = base.add(acc, t);
    }
    return acc;
}

template <commutative_ring R>
SparsePoly<typename R::elem> poly_pow(const R& base, SparsePoly<typename R::elem> a, std::uint64_t e,
                                      std::size_t arity) {
    auto r = poly_const(base, base.one(), arity);
    while (e > 0) {
        if (e & 1) r = poly_mul(base, r, a);
        a = poly_mul(base, a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace qinv
