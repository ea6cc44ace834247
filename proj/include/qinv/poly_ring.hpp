#pragma once

#include <string>
#include <vector>

#include "qinv/rat_func.hpp"
#include "qinv/sparse_poly.hpp"

namespace qinv {

/// R[c1,...,cq]: polynomial extension of a base ring. The base rings used
/// here are all integral domains, so the units are the unit constants.
template <commutative_ring Base>
class PolyRing {
public:
    using elem = SparsePoly<typename Base::elem>;

    PolyRing(Base base, std::vector<std::string> vars) : base_(std::move(base)), vars_(std::move(vars)) {
        if (vars_.empty()) throw invalid_argument_error("polynomial ring needs at least one variable");
    }

    const Base& base() const { return base_; }
    std::size_t arity() const { return vars_.size(); }

    elem zero() const { return {}; }
    elem one() const { return poly_const(base_, base_.one(), arity()); }
    elem from_int(Int v) const { return poly_const(base_, base_.from_int(std::move(v)), arity()); }
    elem from_base(typename Base::elem c) const { return poly_const(base_, std::move(c), arity()); }
    elem var_elem(std::size_t i) const { return poly_var(base_, arity(), i); }
    elem add(const elem& a, const elem& b) const { return poly_add(base_, a, b); }
    elem sub(const elem& a, const elem& b) const { return poly_sub(base_, a, b); }
    elem mul(const elem& a, const elem& b) const { return poly_mul(base_, a, b); }
    elem neg(const elem& a) const { return poly_neg(base_, a); }
    bool eq(const elem& a, const elem& b) const { return poly_eq(base_, a, b); }
    bool is_zero(const elem& a) const { return a.is_zero(); }
    bool is_unit(const elem& a) const {
        return poly_is_constant(a) && !a.is_zero() && base_.is_unit(a.leading_coef());
    }
    std::optional<elem> try_invert(const elem& a) const {
        if (!is_unit(a)) return std::nullopt;
        auto inv = base_.try_invert(a.leading_coef());
        if (!inv) return std::nullopt;
        return poly_const(base_, std::move(*inv), arity());
    }
    ResidueFloor residue_floor() const {
        if constexpr (std::is_same_v<Base, RatRing>) {
            // Residue fields of Q[x...] are finite extensions of Q.
            return ResidueFloor::infinite();
        } else if constexpr (is_field_v<Base>) {
            Int n = base_.distinct_element_count();
            return n == 0 ? ResidueFloor::infinite() : ResidueFloor::finite(n);
        } else {
            return ResidueFloor::unknown();
        }
    }
    std::string name() const {
        std::string s = base_.name() + "[";
        for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
        return s + "]";
    }
    std::string to_string(const elem& a) const {
        if constexpr (std::is_same_v<Base, RatRing>) {
            return multipoly_to_string(vars_, a);
        } else {
            if (a.is_zero()) return "0";
            std::string s;
            for (const auto& [m, c] : a.terms) {
                if (!s.empty()) s += "+";
                std::string cs = base_.to_string(c);
                bool needs_parens = false;
                int depth = 0;
                for (std::size_t k = 0; k < cs.size(); ++k) {
                    char ch = cs[k];
                    if (ch == '(') ++depth;
                    if (ch == ')') --depth;
                    if (depth == 0 && k > 0 && (ch == '+' || ch == '-')) needs_parens = true;
                }
                std::string ms = mono_to_string(vars_, m);
                if (ms.empty()) {
                    s += needs_parens ? "(" + cs + ")" : cs;
                } else if (base_.eq(c, base_.one())) {
                    s += ms;
                } else {
                    s += (needs_parens ? "(" + cs + ")" : cs) + "*" + ms;
                }
            }
            return s;
        }
    }
    std::vector<std::string> var_names() const { return vars_; }
    bool operator==(const PolyRing& o) const { return base_ == o.base_ && vars_ == o.vars_; }

private:
    Base base_;
    std::vector<std::string> vars_;
};

/// The user-facing polynomial ring over Q.
using PolyRingQ = PolyRing<RatRing>;

}  // namespace qinv
