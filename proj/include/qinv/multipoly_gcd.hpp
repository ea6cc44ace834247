#pragma once

#include <algorithm>
#include <optional>

#include "qinv/sparse_poly.hpp"

namespace qinv {

/// Polynomials over Q; the workhorse behind rational functions.
using MultiPoly = SparsePoly<Rat>;

inline const RatRing& rat_ring() {
    static const RatRing r;
    return r;
}

inline MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b) { return poly_add(rat_ring(), a, b); }
inline MultiPoly mp_sub(const MultiPoly& a, const MultiPoly& b) { return poly_sub(rat_ring(), a, b); }
inline MultiPoly mp_neg(const MultiPoly& a) { return poly_neg(rat_ring(), a); }
inline MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) { return poly_mul(rat_ring(), a, b); }
inline MultiPoly mp_scale(const Rat& c, const MultiPoly& a) { return poly_scale(rat_ring(), c, a); }
inline bool mp_eq(const MultiPoly& a, const MultiPoly& b) { return poly_eq(rat_ring(), a, b); }
inline MultiPoly mp_const(Rat c, std::size_t arity) { return poly_const(rat_ring(), std::move(c), arity); }
inline MultiPoly mp_var(std::size_t arity, std::size_t idx, std::uint32_t e = 1) {
    return poly_var(rat_ring(), arity, idx, e);
}

/// Scales to leading (graded-lex) coefficient 1. Zero stays zero.
inline MultiPoly mp_monic(const MultiPoly& a) {
    if (a.is_zero()) return a;
    return mp_scale(1 / a.leading_coef(), a);
}

/// Single-divisor division; nullopt unless g divides f exactly.
inline std::optional<MultiPoly> mp_try_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw invalid_argument_error("division by zero polynomial");
    MultiPoly q, r = f;
    while (!r.is_zero()) {
        if (!mono_divides(g.leading_mono(), r.leading_mono())) return std::nullopt;
        Mono m = mono_div(r.leading_mono(), g.leading_mono());
        Rat c = r.leading_coef() / g.leading_coef();
        MultiPoly t;
        t.terms.push_back({std::move(m), std::move(c)});
        q = mp_add(q, t);
        r = mp_sub(r, mp_mul(t, g));
    }
    return q;
}

inline MultiPoly mp_divide_exact(const MultiPoly& f, const MultiPoly& g) {
    auto q = mp_try_divide(f, g);
    if (!q) throw invalid_argument_error("inexact polynomial division");
    return *q;
}

/// Coefficient of v^e, as a polynomial of the same arity with the v-slot zeroed.
inline MultiPoly mp_coef_of_power(const MultiPoly& f, std::size_t v, std::uint32_t e) {
    MultiPoly r;
    for (const auto& [m, c] : f.terms) {
        if (m[v] != e) continue;
        Mono mm = m;
        mm[v] = 0;
        r.terms.push_back({std::move(mm), c});
    }
    // zeroing the v-slot changes total degrees, so the order must be rebuilt
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& x, const auto& y) { return grlex_cmp(x.first, y.first) > 0; });
    return r;
}

inline MultiPoly mp_shift_var(const MultiPoly& f, std::size_t v, std::uint32_t e) {
    MultiPoly r = f;
    for (auto& [m, c] : r.terms) m[v] += e;
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& x, const auto& y) { return grlex_cmp(x.first, y.first) > 0; });
    return r;
}

inline MultiPoly mp_gcd(const MultiPoly& f, const MultiPoly& g);

/// gcd of the coefficients of f viewed as univariate in v.
inline MultiPoly mp_content(const MultiPoly& f, std::size_t v) {
    MultiPoly c;
    std::int64_t d = poly_degree_in(f, v);
    for (std::int64_t e = 0; e <= d; ++e) {
        MultiPoly coef = mp_coef_of_power(f, v, static_cast<std::uint32_t>(e));
        if (coef.is_zero()) continue;
        c = c.is_zero() ? mp_monic(coef) : mp_gcd(c, coef);
        if (poly_is_constant(c)) break;
    }
    return mp_monic(c);
}

/// Pseudo-remainder of a by b in variable v (content-sloppy; callers reduce).
inline MultiPoly mp_prem(MultiPoly a, const MultiPoly& b, std::size_t v) {
    std::int64_t db = poly_degree_in(b, v);
    MultiPoly lcb = mp_coef_of_power(b, v, static_cast<std::uint32_t>(db));
    while (!a.is_zero()) {
        std::int64_t da = poly_degree_in(a, v);
        if (da < db) break;
        MultiPoly lca = mp_coef_of_power(a, v, static_cast<std::uint32_t>(da));
        // a <- lcb*a - lca*b*v^(da-db)
        a = mp_sub(mp_mul(lcb, a), mp_shift_var(mp_mul(lca, b), v, static_cast<std::uint32_t>(da - db)));
    }
    return a;
}

/// Monic gcd via primitive-PRS recursion on the first variable present.
inline MultiPoly mp_gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) return mp_monic(g);
    if (g.is_zero()) return mp_monic(f);
    if (poly_is_constant(f) || poly_is_constant(g)) {
        std::size_t arity = f.is_zero() ? g.terms[0].first.size() : f.terms[0].first.size();
        return mp_const(Rat(1), arity);
    }
    std::size_t arity = f.terms[0].first.size();
    std::size_t v = arity;
    for (std::size_t i = 0; i < arity; ++i) {
        if (poly_degree_in(f, i) > 0 || poly_degree_in(g, i) > 0) {
            v = i;
            break;
        }
    }
    if (v == arity) return mp_const(Rat(1), arity);  // both constant in every variable

    MultiPoly cf = mp_content(f, v), cg = mp_content(g, v);
    MultiPoly a = mp_monic(mp_divide_exact(f, cf));
    MultiPoly b = mp_monic(mp_divide_exact(g, cg));
    if (poly_degree_in(a, v) < poly_degree_in(b, v)) std::swap(a, b);

    MultiPoly pp_gcd;
    while (true) {
        if (poly_degree_in(b, v) == 0) {
            // a nonzero remainder of v-degree 0 forces coprimality in v
            pp_gcd = mp_const(Rat(1), arity);
            break;
        }
        MultiPoly r = mp_prem(a, b, v);
        if (r.is_zero()) {
            pp_gcd = b;
            break;
        }
        a = b;
        b = mp_monic(mp_divide_exact(r, mp_content(r, v)));
    }
    return mp_monic(mp_mul(mp_gcd(cf, cg), pp_gcd));
}

}  // namespace qinv
