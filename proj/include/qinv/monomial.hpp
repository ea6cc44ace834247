#pragma once

#include <cstdint>
#include <vector>

#include "qinv/errors.hpp"

namespace qinv {

/// Exponent vector; length equals the arity of the polynomial ring.
using Mono = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Mono& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

/// Graded lexicographic: higher total degree first, ties broken by the
/// leftmost variable with the larger exponent.
inline int grlex_cmp(const Mono& a, const Mono& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_cmp(a, b) > 0; }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// Componentwise quotient; nullopt when b does not divide a.
inline bool mono_divides(const Mono& b, const Mono& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw invalid_argument_error("monomial division underflow");
        r[i] = a[i] - b[i];
    }
    return r;
}

}  // namespace qinv
