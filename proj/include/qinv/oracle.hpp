#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qinv/qi_engine.hpp"

namespace qinv {
namespace oracle {

constexpr std::uint64_t kEnumerationGuard = 1000000;

/// Desk-scale exhaustive experiment over Z/pZ.
struct ExperimentConfig {
    Int p = 7;
    int m = 2, n = 2;
    int gen_count = 3;
    int trials = 200;
    std::uint64_t seed = 42;

    void validate() const {
        if (!is_probable_prime(p)) throw invalid_argument_error("p must be prime");
        if (m < 1 || m > 3 || n < 1 || n > 3) throw invalid_argument_error("dimensions must be within 1..3");
        if (gen_count < 1 || gen_count > 3) throw invalid_argument_error("generator count must be within 1..3");
        if (trials < 1) throw invalid_argument_error("at least one trial required");
        guard_enumeration(p, gen_count);
    }

    static void guard_enumeration(const Int& p, int q) {
        Int size = 1;
        for (int i = 0; i < q; ++i) {
            size *= p;
            if (size > kEnumerationGuard) throw enumeration_guard_error("enumeration of p^q elements exceeds the guard");
        }
    }
};

/// All p^q combinations sum c_i H_i in a deterministic odometer order
/// (last coefficient fastest). Duplicates appear when generators are
/// dependent; span semantics absorb them.
inline std::vector<Matrix<ModRing>> enumerate_module(const ModRing& ring, int rows, int cols,
                                                     const std::vector<Matrix<ModRing>>& gens) {
    ExperimentConfig::guard_enumeration(ring.modulus(), static_cast<int>(gens.size()));
    const long p = ring.modulus().get_si();
    const int q = static_cast<int>(gens.size());
    std::vector<Matrix<ModRing>> out;
    std::vector<long> c(q, 0);
    while (true) {
        Matrix<ModRing> k(ring, rows, cols);
        for (int t = 0; t < q; ++t) {
            if (c[t] == 0) continue;
            k = mat_add(k, scalar_mul(Int(c[t]), gens[t]));
        }
        out.push_back(std::move(k));
        int pos = q - 1;
        while (pos >= 0 && c[pos] == p - 1) c[pos--] = 0;
        if (pos < 0) break;
        ++c[pos];
    }
    return out;
}

inline std::string matrix_key(const Matrix<ModRing>& k) {
    std::string s;
    for (int i = 0; i < k.rows(); ++i)
        for (int j = 0; j < k.cols(); ++j) s += int_str(k.at(i, j)) + ",";
    return s;
}

/// Membership of one matrix in the span of the generators, by Gaussian
/// elimination over the field Z/pZ.
class SpanMembership {
public:
    SpanMembership(const ModRing& ring, const std::vector<Matrix<ModRing>>& gens)
        : set_(gens.empty()
                   ? std::nullopt
                   : std::make_optional(ControllerSet<ModRing>::from_generators(ring, gens))) {}

    bool operator()(const Matrix<ModRing>& k) const {
        if (!set_) return mat_is_zero(k);
        return set_->contains(k).member;
    }

private:
    std::optional<ControllerSet<ModRing>> set_;
};

/// Exact span membership over the field Z/pZ.
inline bool span_member(const std::vector<Matrix<ModRing>>& gens, const Matrix<ModRing>& k) {
    return SpanMembership(k.ring(), gens)(k);
}

struct BruteForceResult {
    bool holds = false;
    std::optional<Matrix<ModRing>> counterexample;
};

/// Definition-level QI: K G K stays in the span for every enumerated K.
inline BruteForceResult qi_bruteforce(const Matrix<ModRing>& g, const std::vector<Matrix<ModRing>>& gens) {
    const ModRing& ring = g.ring();
    const int n = g.cols(), m = g.rows();
    SpanMembership member(ring, gens);
    for (auto& k : enumerate_module(ring, n, m, gens)) {
        Matrix<ModRing> kgk = matmul(matmul(k, g), k);
        if (!member(kgk)) return {false, std::move(k)};
    }
    return {true, std::nullopt};
}

/// Exhaustive h-invariance: every K in S with det(I-GK) != 0 maps into
/// S n M, and the image set equals S n M.
inline BruteForceResult h_invariance_bruteforce(const Matrix<ModRing>& g,
                                                const std::vector<Matrix<ModRing>>& gens) {
    const ModRing& ring = g.ring();
    const int n = g.cols(), m = g.rows();
    SpanMembership member(ring, gens);
    std::set<std::string> s_and_m;
    std::set<std::string> image;
    for (auto& k : enumerate_module(ring, n, m, gens)) {
        auto hk = h_map(k, g);
        if (std::holds_alternative<NotInM<ModRing>>(hk)) continue;
        s_and_m.insert(matrix_key(k));
        const auto& h = std::get<Matrix<ModRing>>(hk);
        // image must land in S...
        if (!member(h)) return {false, std::move(k)};
        // ...and in M (h is an involution on M, so this always holds)
        auto igh = mat_sub(Matrix<ModRing>::identity(ring, m), matmul(g, h));
        if (!ring.is_unit(det(igh))) return {false, std::move(k)};
        image.insert(matrix_key(h));
        // involution spot check
        auto hh = h_map(h, g);
        if (!std::holds_alternative<Matrix<ModRing>>(hh) ||
            !mat_eq(std::get<Matrix<ModRing>>(hh), k))
            return {false, std::move(k)};
    }
    if (image != s_and_m) return {false, std::nullopt};
    return {true, std::nullopt};
}

/// Definition-level adjugate invariance: K adj(I - GK) stays in the span
/// for every enumerated K.
inline BruteForceResult adjugate_invariance_bruteforce(const Matrix<ModRing>& g,
                                                       const std::vector<Matrix<ModRing>>& gens) {
    const ModRing& ring = g.ring();
    const int n = g.cols(), m = g.rows();
    SpanMembership member(ring, gens);
    for (auto& k : enumerate_module(ring, n, m, gens)) {
        auto igk = mat_sub(Matrix<ModRing>::identity(ring, m), matmul(g, k));
        if (!member(matmul(k, adjugate(igk)))) return {false, std::move(k)};
    }
    return {true, std::nullopt};
}

struct PowerClosureResult {
    bool precondition_ok = false;
    std::string precondition_failure;
    bool holds = false;
    std::optional<Matrix<ModRing>> counterexample;
};

/// Power closure: K (G K)^i stays in the span for i = 1..i_max, given QI and
/// an odd prime (2 must be a unit).
inline PowerClosureResult power_closure_bruteforce(const Matrix<ModRing>& g, const std::vector<Matrix<ModRing>>& gens,
                                      int i_max) {
    const ModRing& ring = g.ring();
    PowerClosureResult res;
    if (ring.modulus() == 2) {
        res.precondition_failure = "2 is not a unit of Z/2Z";
        return res;
    }
    auto qi = qi_bruteforce(g, gens);
    if (!qi.holds) {
        res.precondition_failure = "the instance is not quadratically invariant";
        return res;
    }
    res.precondition_ok = true;
    const int n = g.cols(), m = g.rows();
    SpanMembership member(ring, gens);
    for (auto& k : enumerate_module(ring, n, m, gens)) {
        Matrix<ModRing> gk = matmul(g, k);
        Matrix<ModRing> t = k;
        for (int i = 1; i <= i_max; ++i) {
            t = matmul(t, gk);
            if (!member(t)) {
                res.holds = false;
                res.counterexample = std::move(k);
                return res;
            }
        }
    }
    res.holds = true;
    return res;
}

// ---------------------------------------------------------------------------
// Worked-example replay: the integer instance where QI holds but the
// adjugate image leaves S because 2 is not a unit of Z.
// ---------------------------------------------------------------------------

struct CounterexampleReplay {
    bool module_closure_sampled = false;
    bool qi_true = false;
    bool k0_in_s = false;
    std::vector<Int> k0_coefficients;
    bool image_matches_pinned = false;
    bool image_outside_s = false;
    std::optional<NoSolution> obstruction;
    bool mod2_qi_true = false;
    bool mod2_k0_in_s = false;
    bool mod2_image_outside_s = false;

    bool all_ok() const {
        return module_closure_sampled && qi_true && k0_in_s && image_matches_pinned && image_outside_s &&
               obstruction && obstruction->kind == NoSolution::Divisibility && mod2_qi_true && mod2_k0_in_s &&
               mod2_image_outside_s;
    }
};

inline Matrix<IntRing> counterexample_plant() {
    const IntRing z;
    Matrix<IntRing> g(z, 3, 3);
    g.at(1, 2) = 1;
    g.at(2, 1) = 1;
    return g;
}

inline std::vector<Matrix<IntRing>> counterexample_generators() {
    const IntRing z;
    Matrix<IntRing> hx(z, 3, 3), hy(z, 3, 3), hz(z, 3, 3);
    hx.at(0, 0) = 2;
    hy.at(0, 1) = 1, hy.at(1, 0) = 1;
    hz.at(0, 2) = 1, hz.at(1, 1) = 1, hz.at(2, 0) = 1;
    return {hx, hy, hz};
}

inline Matrix<IntRing> counterexample_k0() {
    const IntRing z;
    Matrix<IntRing> k0(z, 3, 3);
    k0.at(0, 2) = 1, k0.at(1, 1) = 1, k0.at(2, 0) = 1;
    return k0;
}

inline CounterexampleReplay counterexample_replay() {
    const IntRing z;
    CounterexampleReplay rep;
    auto g = counterexample_plant();
    auto gens = counterexample_generators();
    auto s = ControllerSet<IntRing>::from_generators(z, gens);
    auto k0 = counterexample_k0();

    // (a) sampled module closure
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    rep.module_closure_sampled = true;
    for (int t = 0; t < 25; ++t) {
        Matrix<IntRing> k1(z, 3, 3), k2(z, 3, 3);
        for (int i = 0; i < 3; ++i) {
            k1 = mat_add(k1, scalar_mul(Int(static_cast<long>(next() % 11) - 5), gens[i]));
            k2 = mat_add(k2, scalar_mul(Int(static_cast<long>(next() % 11) - 5), gens[i]));
        }
        Int r(static_cast<long>(next() % 11) - 5);
        if (!s.contains(mat_add(k1, scalar_mul(r, k2))).member) rep.module_closure_sampled = false;
    }

    // (b) QI over Z
    rep.qi_true = check_qi(g, s).verdict == Verdict::True;

    // (c) K0 in S with its coefficient certificate
    auto c = s.contains(k0);
    rep.k0_in_s = c.member;
    if (c.coefficients) rep.k0_coefficients = *c.coefficients;

    // (d) K0 adj(I - G K0) leaves S with a divisibility obstruction
    auto igk = mat_sub(Matrix<IntRing>::identity(z, 3), matmul(g, k0));
    auto w = matmul(k0, adjugate(igk));
    Matrix<IntRing> pinned(z, 3, 3);
    pinned.at(0, 0) = 1, pinned.at(0, 1) = 1, pinned.at(0, 2) = 1;
    pinned.at(1, 0) = 1, pinned.at(1, 1) = 1;
    pinned.at(2, 0) = 1;
    rep.image_matches_pinned = mat_eq(w, pinned);
    auto cw = s.contains(w);
    rep.image_outside_s = !cw.member;
    rep.obstruction = cw.obstruction;

    // the same data modulo 2, where 2 = 0 is not a unit
    ModRing f2{Int(2)};
    auto to2 = [&f2](const Int& v) { return f2.from_int(v); };
    auto g2 = mat_map(g, f2, to2);
    std::vector<Matrix<ModRing>> gens2;
    for (const auto& h : gens) gens2.push_back(mat_map(h, f2, to2));
    rep.mod2_qi_true = qi_bruteforce(g2, gens2).holds;
    rep.mod2_k0_in_s = span_member(gens2, mat_map(k0, f2, to2));
    rep.mod2_image_outside_s = !span_member(gens2, mat_map(w, f2, to2));
    return rep;
}

// ---------------------------------------------------------------------------
// Everywhere-vanishing polynomials over Z/pZ
// ---------------------------------------------------------------------------

struct PolyZeroReport {
    bool holds_up_to_degree_cap = false;  // degree <= min(bound, p-1): vanishing => zero
    int degree_cap = 0;
    std::optional<std::vector<Int>> nonzero_vanishing;  // witness beyond the cap, if requested
};

/// Exhaustively verifies that a polynomial of degree <= p-1 vanishing on all
/// of Z/pZ is the zero polynomial, and exhibits x^p - x as the witness that
/// the degree bound is necessary when degree_bound >= p.
inline PolyZeroReport poly_zero_property(const Int& p, int degree_bound) {
    ModRing ring(p);
    const long pl = p.get_si();
    PolyZeroReport rep;
    rep.degree_cap = static_cast<int>(std::min<long>(degree_bound, pl - 1));

    auto eval = [&](const std::vector<Int>& coefs, const Int& x) {
        Int acc = 0;
        for (auto it = coefs.rbegin(); it != coefs.rend(); ++it) acc = ring.add(ring.mul(acc, x), *it);
        return acc;
    };
    auto vanishes_everywhere = [&](const std::vector<Int>& coefs) {
        for (long x = 0; x < pl; ++x)
            if (eval(coefs, Int(x)) != 0) return false;
        return true;
    };

    rep.holds_up_to_degree_cap = true;
    ExperimentConfig::guard_enumeration(p, rep.degree_cap + 1);
    std::vector<long> c(rep.degree_cap + 1, 0);
    while (true) {
        std::vector<Int> coefs(c.begin(), c.end());
        bool zero_poly = true;
        for (long v : c) zero_poly = zero_poly && v == 0;
        if (!zero_poly && vanishes_everywhere(coefs)) {
            rep.holds_up_to_degree_cap = false;
            break;
        }
        int pos = rep.degree_cap;
        while (pos >= 0 && c[pos] == pl - 1) c[pos--] = 0;
        if (pos < 0) break;
        ++c[pos];
    }

    if (degree_bound >= pl) {
        // x^p - x vanishes everywhere by Fermat's little theorem
        std::vector<Int> witness(pl + 1, Int(0));
        witness[1] = ring.from_int(Int(-1));
        witness[pl] = 1;
        if (vanishes_everywhere(witness)) rep.nonzero_vanishing = std::move(witness);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Seeded experiment: QI <=> h-invariance over Z/pZ
// ---------------------------------------------------------------------------

struct Discrepancy {
    int trial;
    bool qi, h_inv;
};

struct OracleReport {
    ExperimentConfig config;
    int trials = 0;
    int agreements = 0;
    std::vector<Discrepancy> discrepancies;
};

/// Deterministic xorshift-based instance stream; identical seeds give
/// identical instances on every platform.
class InstanceStream {
public:
    explicit InstanceStream(std::uint64_t seed) : state_(seed ? seed : 0x2545f4914f6cdd1dull) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    long below(long k) { return static_cast<long>(next() % static_cast<std::uint64_t>(k)); }

    Matrix<ModRing> random_matrix(const ModRing& ring, int rows, int cols) {
        Matrix<ModRing> m(ring, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = Int(below(ring.modulus().get_si()));
        return m;
    }

private:
    std::uint64_t state_;
};

inline OracleReport run_equivalence_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ModRing ring(cfg.p);
    InstanceStream stream(cfg.seed);
    OracleReport rep;
    rep.config = cfg;
    for (int t = 0; t < cfg.trials; ++t) {
        Matrix<ModRing> g = stream.random_matrix(ring, cfg.m, cfg.n);
        std::vector<Matrix<ModRing>> gens;
        for (int i = 0; i < cfg.gen_count; ++i) gens.push_back(stream.random_matrix(ring, cfg.n, cfg.m));
        bool qi = qi_bruteforce(g, gens).holds;
        bool hi = h_invariance_bruteforce(g, gens).holds;
        ++rep.trials;
        if (qi == hi)
            ++rep.agreements;
        else
            rep.discrepancies.push_back({t, qi, hi});
    }
    return rep;
}

}  // namespace oracle
}  // namespace qinv
