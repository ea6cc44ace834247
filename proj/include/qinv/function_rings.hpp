#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qinv/rat_func.hpp"

namespace qinv {

/// Q(x1,...,xk): the field of rational functions over Q.
class RatFuncField {
public:
    using elem = RatFunc;

    explicit RatFuncField(std::vector<std::string> vars) : vars_(std::move(vars)) {
        if (vars_.empty()) throw invalid_argument_error("rational function field needs at least one variable");
    }

    std::size_t arity() const { return vars_.size(); }

    elem zero() const { return rf_zero(arity()); }
    elem one() const { return rf_const(Rat(1), arity()); }
    elem from_int(Int v) const { return rf_const(Rat(std::move(v)), arity()); }
    elem from_rat(Rat v) const { return rf_const(std::move(v), arity()); }
    elem var_elem(std::size_t i) const { return rf_var(arity(), i); }
    elem add(const elem& a, const elem& b) const { return rf_add(a, b); }
    elem sub(const elem& a, const elem& b) const { return rf_sub(a, b); }
    elem mul(const elem& a, const elem& b) const { return rf_mul(a, b); }
    elem neg(const elem& a) const { return rf_neg(a); }
    elem div(const elem& a, const elem& b) const { return rf_div(a, b); }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    bool is_zero(const elem& a) const { return rf_is_zero(a); }
    bool is_unit(const elem& a) const { return !rf_is_zero(a); }
    std::optional<elem> try_invert(const elem& a) const {
        if (rf_is_zero(a)) return std::nullopt;
        return rf_inv(a);
    }
    ResidueFloor residue_floor() const { return ResidueFloor::infinite(); }
    std::string name() const {
        std::string s = "Q(";
        for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
        return s + ")";
    }
    std::string to_string(const elem& a) const { return ratfunc_to_string(vars_, a); }
    std::vector<std::string> var_names() const { return vars_; }
    bool operator==(const RatFuncField& o) const { return vars_ == o.vars_; }

    bool characteristic_two() const { return false; }
    Int distinct_element_count() const { return 0; }  // infinite

private:
    std::vector<std::string> vars_;
};

template <>
struct ring_traits<RatFuncField> {
    static constexpr bool is_field = true;
};

/// Q(x_1..x_l, s_1..s_k) with properness imposed on each s_i independently.
/// A local-style ring: the units are the elements proper but not strictly
/// proper in every proper variable.
class ProperRatRing {
public:
    using elem = RatFunc;

    ProperRatRing(std::vector<std::string> free_vars, std::vector<std::string> proper_vars)
        : free_(std::move(free_vars)), proper_(std::move(proper_vars)) {
        if (free_.empty() && proper_.empty())
            throw invalid_argument_error("proper rational ring needs at least one variable");
        vars_ = free_;
        vars_.insert(vars_.end(), proper_.begin(), proper_.end());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j]) throw invalid_argument_error("duplicate variable " + vars_[i]);
    }

    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& free_vars() const { return free_; }
    const std::vector<std::string>& proper_vars() const { return proper_; }
    /// Indices of the proper variables within the full variable list.
    std::vector<std::size_t> proper_indices() const {
        std::vector<std::size_t> idx;
        for (std::size_t i = free_.size(); i < vars_.size(); ++i) idx.push_back(i);
        return idx;
    }
    RatFuncField field_view() const { return RatFuncField(vars_); }

    bool in_ring(const elem& a) const {
        for (std::size_t i : proper_indices())
            if (!rf_is_proper_in(a, i)) return false;
        return true;
    }
    void validate(const elem& a) const {
        if (!in_ring(a))
            throw value_outside_ring(to_string(a) + " is not proper in every proper variable of " + name());
    }

    elem zero() const { return rf_zero(arity()); }
    elem one() const { return rf_const(Rat(1), arity()); }
    elem from_int(Int v) const { return rf_const(Rat(std::move(v)), arity()); }
    elem from_rat(Rat v) const { return rf_const(std::move(v), arity()); }
    elem var_elem(std::size_t i) const {
        elem v = rf_var(arity(), i);
        validate(v);  // proper variables themselves are not elements
        return v;
    }
    // Sums and products of per-variable proper functions stay proper, so the
    // field operations never leave the ring.
    elem add(const elem& a, const elem& b) const { return rf_add(a, b); }
    elem sub(const elem& a, const elem& b) const { return rf_sub(a, b); }
    elem mul(const elem& a, const elem& b) const { return rf_mul(a, b); }
    elem neg(const elem& a) const { return rf_neg(a); }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    bool is_zero(const elem& a) const { return rf_is_zero(a); }
    /// Units: proper and not strictly proper in every proper variable.
    bool is_unit(const elem& a) const {
        if (rf_is_zero(a)) return false;
        for (std::size_t i : proper_indices()) {
            auto [dn, dd] = rf_degree_in(a, i);
            if (dn != dd) return false;
        }
        return true;
    }
    std::optional<elem> try_invert(const elem& a) const {
        if (!is_unit(a)) return std::nullopt;
        return rf_inv(a);
    }
    /// Every residue field is a rational function field over Q, hence infinite.
    ResidueFloor residue_floor() const { return ResidueFloor::infinite(); }
    std::string name() const {
        std::string s = "Q(";
        for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
        s += ")_p{";
        for (std::size_t i = 0; i < proper_.size(); ++i) s += (i ? "," : "") + proper_[i];
        return s + "}";
    }
    std::string to_string(const elem& a) const { return ratfunc_to_string(vars_, a); }
    std::vector<std::string> var_names() const { return vars_; }
    bool operator==(const ProperRatRing& o) const { return free_ == o.free_ && proper_ == o.proper_; }

private:
    std::vector<std::string> free_, proper_, vars_;
};

}  // namespace qinv
