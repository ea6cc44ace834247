#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "qinv/multipoly_gcd.hpp"

namespace qinv {

/// Rational function over Q in a fixed variable list, stored canonically:
/// gcd(num, den) = 1, den monic under graded-lex, zero is 0/1.
struct RatFunc {
    MultiPoly num, den;
    bool operator==(const RatFunc& o) const { return mp_eq(num, o.num) && mp_eq(den, o.den); }
};

inline RatFunc rf_normalize(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw invalid_argument_error("zero denominator");
    std::size_t arity = den.terms[0].first.size();
    if (num.is_zero()) return {MultiPoly{}, mp_const(Rat(1), arity)};
    MultiPoly g = mp_gcd(num, den);
    if (!poly_is_constant(g)) {
        num = mp_divide_exact(num, g);
        den = mp_divide_exact(den, g);
    }
    Rat lc = den.leading_coef();
    if (lc != 1) {
        num = mp_scale(1 / lc, num);
        den = mp_scale(1 / lc, den);
    }
    return {std::move(num), std::move(den)};
}

inline RatFunc rf_zero(std::size_t arity) { return {MultiPoly{}, mp_const(Rat(1), arity)}; }
inline RatFunc rf_const(Rat c, std::size_t arity) { return {mp_const(std::move(c), arity), mp_const(Rat(1), arity)}; }
inline RatFunc rf_var(std::size_t arity, std::size_t idx) { return {mp_var(arity, idx), mp_const(Rat(1), arity)}; }

inline bool rf_is_zero(const RatFunc& f) { return f.num.is_zero(); }

inline RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
    return rf_normalize(mp_add(mp_mul(a.num, b.den), mp_mul(b.num, a.den)), mp_mul(a.den, b.den));
}
inline RatFunc rf_neg(const RatFunc& a) { return {mp_neg(a.num), a.den}; }
inline RatFunc rf_sub(const RatFunc& a, const RatFunc& b) { return rf_add(a, rf_neg(b)); }
inline RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
    return rf_normalize(mp_mul(a.num, b.num), mp_mul(a.den, b.den));
}
inline RatFunc rf_div(const RatFunc& a, const RatFunc& b) {
    if (rf_is_zero(b)) throw invalid_argument_error("division by zero rational function");
    return rf_normalize(mp_mul(a.num, b.den), mp_mul(a.den, b.num));
}
inline RatFunc rf_inv(const RatFunc& a) {
    if (rf_is_zero(a)) throw invalid_argument_error("inverting zero rational function");
    return rf_normalize(a.den, a.num);
}

/// Exact evaluation at a rational point with nonvanishing denominator.
inline Rat rf_eval(const RatFunc& f, const std::vector<Rat>& point) {
    const RatRing& q = rat_ring();
    Rat d = poly_eval(q, f.den, point);
    if (d == 0) throw invalid_argument_error("evaluation at a pole");
    return poly_eval(q, f.num, point) / d;
}

/// (deg_v num, deg_v den); num degree is kDegNegInf for the zero function.
inline std::pair<std::int64_t, std::int64_t> rf_degree_in(const RatFunc& f, std::size_t v) {
    return {poly_degree_in(f.num, v), poly_degree_in(f.den, v)};
}

/// deg_v(num) <= deg_v(den). Representation-independent: per-variable degree
/// is additive under common polynomial factors.
inline bool rf_is_proper_in(const RatFunc& f, std::size_t v) {
    if (rf_is_zero(f)) return true;
    return poly_degree_in(f.num, v) <= poly_degree_in(f.den, v);
}

inline bool rf_is_strictly_proper_in(const RatFunc& f, std::size_t v) {
    if (rf_is_zero(f)) return true;
    return poly_degree_in(f.num, v) < poly_degree_in(f.den, v);
}

/// deg_d(den) - deg_d(num), with delay(0) = infinity. Negative values signal
/// a causality violation and are reported as-is.
struct DelayValue {
    bool infinite = false;
    std::int64_t value = 0;

    static DelayValue inf() { return {true, 0}; }
    static DelayValue of(std::int64_t v) { return {false, v}; }
    bool at_least(std::int64_t bound) const { return infinite || value >= bound; }
    bool operator==(const DelayValue&) const = default;
    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

inline DelayValue rf_delay(const RatFunc& f, std::size_t d_var) {
    if (rf_is_zero(f)) return DelayValue::inf();
    return DelayValue::of(poly_degree_in(f.den, d_var) - poly_degree_in(f.num, d_var));
}

// ---------------------------------------------------------------------------
// Canonical printing (inverse of the expression grammar)
// ---------------------------------------------------------------------------

inline std::string mono_to_string(const std::vector<std::string>& vars, const Mono& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

inline std::string multipoly_to_string(const std::vector<std::string>& vars, const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms) {
        Rat ac = abs(c);
        bool neg = c < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? "-" : "+";
        }
        std::string ms = mono_to_string(vars, m);
        if (ms.empty())
            s += rat_str(ac);
        else if (ac == 1)
            s += ms;
        else
            s += rat_str(ac) + "*" + ms;
    }
    return s;
}

/// True when the string can stand as the right operand of '/' unambiguously:
/// a plain integer or a single variable power.
inline bool atom_for_denominator(const std::string& s) {
    if (s.empty()) return false;
    bool seen_caret = false;
    for (char ch : s) {
        if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') continue;
        if (ch == '^' && !seen_caret) {
            seen_caret = true;
            continue;
        }
        return false;
    }
    return true;
}

inline std::string ratfunc_to_string(const std::vector<std::string>& vars, const RatFunc& f) {
    std::string ns = multipoly_to_string(vars, f.num);
    if (poly_is_constant(f.den) && !f.den.is_zero() && f.den.leading_coef() == 1) return ns;
    if (f.num.terms.size() > 1) ns = "(" + ns + ")";
    std::string ds = multipoly_to_string(vars, f.den);
    if (!atom_for_denominator(ds)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace qinv
