#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "qinv/errors.hpp"
#include "qinv/numeric.hpp"

namespace qinv {

/// Sound lower bound on the cardinality of every residue field of a ring.
struct ResidueFloor {
    enum Kind { Finite, Infinite, Unknown } kind = Unknown;
    Int bound = 0;  // meaningful for Finite only

    static ResidueFloor finite(Int b) { return {Finite, std::move(b)}; }
    static ResidueFloor infinite() { return {Infinite, 0}; }
    static ResidueFloor unknown() { return {Unknown, 0}; }

    /// True when the bound certifies "every residue field has at least k elements".
    bool at_least(const Int& k) const {
        if (kind == Infinite) return true;
        if (kind == Finite) return bound >= k;
        return false;
    }
    bool operator==(const ResidueFloor&) const = default;
};

/// A commutative ring with identity, presented as a context object.
/// Elements are plain values; all arithmetic goes through the context.
template <typename R>
concept commutative_ring = requires(const R& r, const typename R::elem& a, const typename R::elem& b) {
    typename R::elem;
    { r.zero() } -> std::same_as<typename R::elem>;
    { r.one() } -> std::same_as<typename R::elem>;
    { r.from_int(Int{}) } -> std::same_as<typename R::elem>;
    { r.add(a, b) } -> std::same_as<typename R::elem>;
    { r.sub(a, b) } -> std::same_as<typename R::elem>;
    { r.mul(a, b) } -> std::same_as<typename R::elem>;
    { r.neg(a) } -> std::same_as<typename R::elem>;
    { r.eq(a, b) } -> std::same_as<bool>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.is_unit(a) } -> std::same_as<bool>;
    { r.try_invert(a) } -> std::same_as<std::optional<typename R::elem>>;
    { r.residue_floor() } -> std::same_as<ResidueFloor>;
    { r.name() } -> std::same_as<std::string>;
    { r.to_string(a) } -> std::same_as<std::string>;
    { r.var_names() } -> std::same_as<std::vector<std::string>>;
    { r == r } -> std::convertible_to<bool>;
};

template <typename R>
struct ring_traits {
    static constexpr bool is_field = false;
};

template <typename R>
inline constexpr bool is_field_v = ring_traits<R>::is_field;

// ---------------------------------------------------------------------------
// Z
// ---------------------------------------------------------------------------

class IntRing {
public:
    using elem = Int;

    elem zero() const { return Int(0); }
    elem one() const { return Int(1); }
    elem from_int(Int v) const { return v; }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem neg(const elem& a) const { return -a; }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    bool is_zero(const elem& a) const { return a == 0; }
    bool is_unit(const elem& a) const { return a == 1 || a == -1; }
    std::optional<elem> try_invert(const elem& a) const {
        if (is_unit(a)) return a;
        return std::nullopt;
    }
    // The residue fields of Z are Z/pZ; the smallest is Z/2Z.
    ResidueFloor residue_floor() const { return ResidueFloor::finite(2); }
    std::string name() const { return "Z"; }
    std::string to_string(const elem& a) const { return int_str(a); }
    std::vector<std::string> var_names() const { return {}; }
    bool operator==(const IntRing&) const { return true; }
};

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

class RatRing {
public:
    using elem = Rat;

    elem zero() const { return Rat(0); }
    elem one() const { return Rat(1); }
    elem from_int(Int v) const { return Rat(std::move(v)); }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem neg(const elem& a) const { return -a; }
    elem div(const elem& a, const elem& b) const {
        if (b == 0) throw invalid_argument_error("division by zero in Q");
        return a / b;
    }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    bool is_zero(const elem& a) const { return a == 0; }
    bool is_unit(const elem& a) const { return a != 0; }
    std::optional<elem> try_invert(const elem& a) const {
        if (a == 0) return std::nullopt;
        return 1 / a;
    }
    ResidueFloor residue_floor() const { return ResidueFloor::infinite(); }
    std::string name() const { return "Q"; }
    std::string to_string(const elem& a) const { return rat_str(a); }
    std::vector<std::string> var_names() const { return {}; }
    bool operator==(const RatRing&) const { return true; }

    bool characteristic_two() const { return false; }
    /// 0 means "infinitely many elements".
    Int distinct_element_count() const { return 0; }
};

template <>
struct ring_traits<RatRing> {
    static constexpr bool is_field = true;
};

// ---------------------------------------------------------------------------
// Z/pZ
// ---------------------------------------------------------------------------

class ModRing {
public:
    using elem = Int;

    explicit ModRing(Int p) : p_(std::move(p)) {
        if (!is_probable_prime(p_)) throw invalid_argument_error("modulus must be prime, got " + int_str(p_));
    }

    const Int& modulus() const { return p_; }

    elem zero() const { return Int(0); }
    elem one() const { return Int(1); }
    elem from_int(Int v) const { return mod_floor(v, p_); }
    elem add(const elem& a, const elem& b) const { return mod_floor(a + b, p_); }
    elem sub(const elem& a, const elem& b) const { return mod_floor(a - b, p_); }
    elem mul(const elem& a, const elem& b) const { return mod_floor(a * b, p_); }
    elem neg(const elem& a) const { return mod_floor(-a, p_); }
    elem div(const elem& a, const elem& b) const {
        auto inv = try_invert(b);
        if (!inv) throw invalid_argument_error("division by zero in " + name());
        return mul(a, *inv);
    }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    bool is_zero(const elem& a) const { return a == 0; }
    bool is_unit(const elem& a) const { return a != 0; }
    std::optional<elem> try_invert(const elem& a) const {
        if (a == 0) return std::nullopt;
        Int r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0) return std::nullopt;
        return r;
    }
    ResidueFloor residue_floor() const { return ResidueFloor::finite(p_); }
    std::string name() const { return "Z/" + int_str(p_) + "Z"; }
    std::string to_string(const elem& a) const { return int_str(a); }
    std::vector<std::string> var_names() const { return {}; }
    bool operator==(const ModRing& o) const { return p_ == o.p_; }

    bool characteristic_two() const { return p_ == 2; }
    Int distinct_element_count() const { return p_; }

private:
    Int p_;
};

template <>
struct ring_traits<ModRing> {
    static constexpr bool is_field = true;
};

// ---------------------------------------------------------------------------
// Z[beta], beta = (1+sqrt(-11))/2, so beta^2 = beta - 3.
// ---------------------------------------------------------------------------

struct ZBetaElem {
    Int a, b;  // a + b*beta
    bool operator==(const ZBetaElem&) const = default;
};

class ZBetaRing {
public:
    using elem = ZBetaElem;

    elem zero() const { return {Int(0), Int(0)}; }
    elem one() const { return {Int(1), Int(0)}; }
    elem from_int(Int v) const { return {std::move(v), Int(0)}; }
    elem beta() const { return {Int(0), Int(1)}; }
    elem var_elem(std::size_t) const { return beta(); }
    elem add(const elem& x, const elem& y) const { return {x.a + y.a, x.b + y.b}; }
    elem sub(const elem& x, const elem& y) const { return {x.a - y.a, x.b - y.b}; }
    elem mul(const elem& x, const elem& y) const {
        // (a1 + b1 B)(a2 + b2 B) with B^2 = B - 3
        return {x.a * y.a - 3 * (x.b * y.b), x.a * y.b + x.b * y.a + x.b * y.b};
    }
    elem neg(const elem& x) const { return {-x.a, -x.b}; }
    bool eq(const elem& x, const elem& y) const { return x == y; }
    bool is_zero(const elem& x) const { return x.a == 0 && x.b == 0; }
    /// Norm a^2 + ab + 3b^2 equals 1 only at +-1, so those are the only units.
    bool is_unit(const elem& x) const { return x.b == 0 && (x.a == 1 || x.a == -1); }
    std::optional<elem> try_invert(const elem& x) const {
        if (is_unit(x)) return x;  // (+-1)^-1 = +-1
        return std::nullopt;
    }
    Int norm(const elem& x) const { return x.a * x.a + x.a * x.b + 3 * x.b * x.b; }
    // Computing a residue-field bound needs prime splitting in Z[beta]; declared out of scope.
    ResidueFloor residue_floor() const { return ResidueFloor::unknown(); }
    std::string name() const { return "Z[b]"; }
    std::string to_string(const elem& x) const {
        if (x.b == 0) return int_str(x.a);
        std::string bterm;
        if (x.b == 1) bterm = "b";
        else if (x.b == -1) bterm = "-b";
        else bterm = int_str(x.b) + "*b";
        if (x.a == 0) return bterm;
        if (x.b > 0) return int_str(x.a) + "+" + bterm;
        return int_str(x.a) + bterm;  // bterm already carries the minus sign
    }
    std::vector<std::string> var_names() const { return {"b"}; }
    bool operator==(const ZBetaRing&) const { return true; }
};

}  // namespace qinv
