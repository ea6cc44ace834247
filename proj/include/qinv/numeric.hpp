#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace qinv {

/// Arbitrary-precision integer and rational, backed by GMP.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds a canonical rational (reduced, positive denominator).
inline Rat make_rat(Int num, Int den) {
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Floor remainder: result in [0, |m|) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_probable_prime(const Int& p) {
    return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

inline std::string int_str(const Int& a) { return a.get_str(); }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace qinv
