#include <catch2/catch.hpp>

#include "qinv/char_poly.hpp"
#include "qinv/expr.hpp"
#include "qinv/linear_solve.hpp"
#include "support.hpp"

using namespace qinv;
using qinv::testsupport::Rng;

namespace {

const IntRing z;

Matrix<IntRing> counterexample_plant() {
    return parse_matrix(z, {{"0", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}});
}

Matrix<IntRing> counterexample_k0() {
    return parse_matrix(z, {{"0", "0", "1"}, {"0", "1", "0"}, {"1", "0", "0"}});
}

}  // namespace

TEST_CASE("matmul basics") {
    auto G = counterexample_plant();
    auto K0 = counterexample_k0();
    CHECK(mat_eq(matmul(Matrix<IntRing>::identity(z, 3), G), G));
    auto GK0 = matmul(G, K0);
    CHECK(mat_eq(GK0, parse_matrix(z, {{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}})));
    CHECK_THROWS_AS(matmul(G, Matrix<IntRing>(z, 2, 2)), dimension_error);
}

TEST_CASE("characteristic polynomial pins det(A - xI)") {
    auto zero2 = Matrix<IntRing>(z, 2, 2);
    auto cp0 = char_poly(zero2);
    REQUIRE(cp0.p.size() == 3);
    CHECK(cp0.p[0] == 0);
    CHECK(cp0.p[1] == 0);
    CHECK(cp0.p[2] == 1);  // p(x) = x^2

    RatRing q;
    auto A = parse_matrix(q, {{"1", "2"}, {"3", "4"}});
    auto cp = char_poly(A);
    CHECK(cp.p[0] == Rat(-2));
    CHECK(cp.p[1] == Rat(-5));
    CHECK(cp.p[2] == Rat(1));
    CHECK(det(A) == Rat(-2));

    auto G = counterexample_plant();
    auto K0 = counterexample_k0();
    auto A2 = mat_sub(Matrix<IntRing>::identity(z, 3), matmul(G, K0));
    CHECK(det(A2) == 1);
    CHECK(char_poly(A2).p[3] == -1);  // leading coefficient (-1)^n
}

TEST_CASE("adjugate identities on the worked example") {
    auto G = counterexample_plant();
    auto K0 = counterexample_k0();
    auto A = mat_sub(Matrix<IntRing>::identity(z, 3), matmul(G, K0));
    auto adj = adjugate(A);
    CHECK(mat_eq(adj, parse_matrix(z, {{"1", "0", "0"}, {"1", "1", "0"}, {"1", "1", "1"}})));
    CHECK(mat_eq(adj, testsupport::cofactor_adjugate(A)));
    // The product K0 * adj(I - G K0) computed here; the (1,1) entry is +1.
    auto W = matmul(K0, adj);
    CHECK(mat_eq(W, parse_matrix(z, {{"1", "1", "1"}, {"1", "1", "0"}, {"1", "0", "0"}})));

    CHECK(mat_eq(adjugate(Matrix<IntRing>::identity(z, 3)), Matrix<IntRing>::identity(z, 3)));

    RatRing q;
    auto B = parse_matrix(q, {{"7", "3"}, {"2", "5"}});
    auto adjB = adjugate(B);
    CHECK(mat_eq(adjB, parse_matrix(q, {{"5", "-3"}, {"-2", "7"}})));
}

TEST_CASE("inverse over Z demands a unit determinant") {
    auto two = parse_matrix(z, {{"2"}});
    auto r = inverse(two);
    REQUIRE(std::holds_alternative<NotInvertible<IntRing>>(r));
    CHECK(std::get<NotInvertible<IntRing>>(r).det == 2);

    auto G = counterexample_plant();
    auto K0 = counterexample_k0();
    auto A = mat_sub(Matrix<IntRing>::identity(z, 3), matmul(G, K0));
    auto inv = inverse(A);
    REQUIRE(std::holds_alternative<Matrix<IntRing>>(inv));
    CHECK(mat_eq(std::get<Matrix<IntRing>>(inv),
                 parse_matrix(z, {{"1", "0", "0"}, {"1", "1", "0"}, {"1", "1", "1"}})));
    CHECK(mat_eq(inverse_or_throw(Matrix<IntRing>::identity(z, 3)), Matrix<IntRing>::identity(z, 3)));
}

TEST_CASE("matrix identity suite across rings") {
    Rng rng(55);
    auto run = [&](auto ring, int trials, int max_n) {
        using R = decltype(ring);
        for (int t = 0; t < trials; ++t) {
            int n = 1 + static_cast<int>(t % max_n);
            auto A = testsupport::random_matrix(rng, ring, n, n);
            auto cp = char_poly(A);
            auto adj = adjugate(A);
            // A adj(A) = det(A) I
            CHECK(mat_eq(matmul(A, adj), scalar_mul(cp.p[0], Matrix<R>::identity(ring, n))));
            CHECK(mat_eq(matmul(adj, A), scalar_mul(cp.p[0], Matrix<R>::identity(ring, n))));
            // Cayley-Hamilton
            CHECK(mat_is_zero(char_poly_eval(cp, A)));
            // adjugate from the characteristic polynomial == cofactor oracle
            CHECK(mat_eq(adj, testsupport::cofactor_adjugate(A)));
            // Berkowitz determinant == Laplace oracle
            CHECK(ring.eq(cp.p[0], testsupport::laplace_det(A)));
            auto B = testsupport::random_matrix(rng, ring, n, n);
            CHECK(ring.eq(det(matmul(A, B)), ring.mul(det(A), det(B))));
            auto inv = inverse(A);
            if (std::holds_alternative<Matrix<R>>(inv))
                CHECK(mat_eq(matmul(std::get<Matrix<R>>(inv), A), Matrix<R>::identity(ring, n)));
        }
    };
    run(IntRing{}, 40, 4);
    run(RatRing{}, 40, 4);
    run(ModRing{Int(5)}, 40, 4);
    run(ZBetaRing{}, 40, 4);
    run(RatFuncField({"s"}), 10, 3);
    run(ProperRatRing({}, {"s"}), 8, 2);
}

TEST_CASE("field solve") {
    RatRing q;
    auto A = parse_matrix(q, {{"2"}});
    auto r = solve_field(A, {Rat(1)});
    REQUIRE(std::holds_alternative<std::vector<Rat>>(r));
    CHECK(std::get<std::vector<Rat>>(r)[0] == make_rat(Int(1), Int(2)));

    auto I = Matrix<RatRing>::identity(q, 3);
    auto rb = solve_field(I, {Rat(4), Rat(-1), Rat(7)});
    CHECK(std::get<std::vector<Rat>>(rb) == std::vector<Rat>{Rat(4), Rat(-1), Rat(7)});

    // inconsistent: x + y = 1, x + y = 2
    auto C = parse_matrix(q, {{"1", "1"}, {"1", "1"}});
    auto rc = solve_field(C, {Rat(1), Rat(2)});
    REQUIRE(std::holds_alternative<NoSolution>(rc));
    CHECK(std::get<NoSolution>(rc).kind == NoSolution::Rank);
}

TEST_CASE("integer solve reports divisibility obstructions") {
    auto A = parse_matrix(z, {{"2"}});
    auto r = solve_integer(A, {Int(1)});
    REQUIRE(std::holds_alternative<NoSolution>(r));
    auto& ns = std::get<NoSolution>(r);
    CHECK(ns.kind == NoSolution::Divisibility);
    CHECK(ns.divisor == 2);
    CHECK(ns.remainder == 1);
    CHECK(ns.to_string() == "2 does not divide 1");

    auto r2 = solve_integer(A, {Int(6)});
    REQUIRE(std::holds_alternative<std::vector<Int>>(r2));
    CHECK(std::get<std::vector<Int>>(r2)[0] == 3);
}

TEST_CASE("smith normal form on random integer matrices") {
    Rng rng(321);
    for (int t = 0; t < 60; ++t) {
        int m = 1 + t % 4, n = 1 + (t / 2) % 4;
        auto A = testsupport::random_matrix(rng, z, m, n);
        auto s = smith_normal_form(A);
        // U A V = D
        CHECK(mat_eq(matmul(matmul(s.u, A), s.v), s.d));
        // unimodular transforms
        CHECK((det(s.u) == 1 || det(s.u) == -1));
        CHECK((det(s.v) == 1 || det(s.v) == -1));
        // nonnegative diagonal with a divisibility chain
        for (int i = 0; i + 1 < std::min(m, n); ++i) {
            CHECK(s.d.at(i, i) >= 0);
            if (s.d.at(i, i) != 0) CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
            if (s.d.at(i, i) == 0) CHECK(s.d.at(i + 1, i + 1) == 0);
        }
        for (int i = 0; i < std::min(m, n); ++i)
            for (int j = 0; j < std::min(m, n); ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);
        // random consistent system solves exactly
        auto x = testsupport::random_matrix(rng, z, n, 1);
        std::vector<Int> b(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) b[i] += A.at(i, j) * x.at(j, 0);
        auto sol = solve_integer(A, b);
        REQUIRE(std::holds_alternative<std::vector<Int>>(sol));
        auto& xs = std::get<std::vector<Int>>(sol);
        for (int i = 0; i < m; ++i) {
            Int acc = 0;
            for (int j = 0; j < n; ++j) acc += A.at(i, j) * xs[j];
            CHECK(acc == b[i]);
        }
    }
}
