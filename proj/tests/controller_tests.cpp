#include <catch2/catch.hpp>

#include "qinv/controller_set.hpp"
#include "qinv/oracle.hpp"
#include "support.hpp"

using namespace qinv;
using qinv::testsupport::Rng;

TEST_CASE("sparsity membership and generators") {
    RatRing q;
    auto s = ControllerSet<RatRing>::sparsity(q, {{true, false}, {true, true}});
    auto gens = s.generators();
    REQUIRE(gens.size() == 3);  // e11, e21, e22
    CHECK(gens[0].at(0, 0) == 1);
    CHECK(gens[1].at(1, 0) == 1);
    CHECK(gens[2].at(1, 1) == 1);
    for (const auto& g : gens) CHECK(s.contains(g).member);

    auto k = parse_matrix(q, {{"1", "0"}, {"7", "-2"}});
    CHECK(s.contains(k).member);
    auto bad = parse_matrix(q, {{"1", "3"}, {"7", "-2"}});
    auto r = s.contains(bad);
    CHECK_FALSE(r.member);
    CHECK(r.detail.find("(1,2)") != std::string::npos);
    // the zero matrix belongs to every module
    CHECK(s.contains(Matrix<RatRing>(q, 2, 2)).member);
}

TEST_CASE("delay bound membership uses the denominator-minus-numerator delay") {
    ProperRatRing sd({}, {"s", "d"});
    auto s = ControllerSet<ProperRatRing>::delay_bounds(sd, "d", {{0, 1}, {1, 0}});
    CHECK(s.rows() == 2);

    // k12 with delay 1 passes the bound a12 = 1; delay 0 fails
    auto pass = parse_matrix(sd, {{"0", "1/(s*d+d)"}, {"0", "0"}});
    CHECK(s.contains(pass).member);
    auto fail = parse_matrix(sd, {{"0", "1/(s+1)"}, {"0", "0"}});
    auto r = s.contains(fail);
    CHECK_FALSE(r.member);
    CHECK(r.detail.find("delay 0 < bound 1") != std::string::npos);
    CHECK(s.contains(Matrix<ProperRatRing>(sd, 2, 2)).member);

    auto gens = s.generators();
    REQUIRE(gens.size() == 4);
    // off-diagonal generators are 1/d * e_ij; d itself is not in the ring
    CHECK(sd.to_string(gens[1].at(0, 1)) == "1/d");
    CHECK(sd.to_string(gens[0].at(0, 0)) == "1");
    for (const auto& g : gens) CHECK(s.contains(g).member);

    CHECK_THROWS_AS(ControllerSet<ProperRatRing>::delay_bounds(sd, "q", {{0}}), invalid_argument_error);
    RatRing q;
    CHECK_THROWS_AS(ControllerSet<RatRing>::delay_bounds(q, "d", {{0}}), capability_error);
}

TEST_CASE("generator membership over Z yields divisibility certificates") {
    const IntRing z;
    auto gens = oracle::counterexample_generators();
    auto s = ControllerSet<IntRing>::from_generators(z, gens);

    auto k0 = oracle::counterexample_k0();
    auto in = s.contains(k0);
    REQUIRE(in.member);
    REQUIRE(in.coefficients.has_value());
    CHECK(*in.coefficients == std::vector<Int>{Int(0), Int(0), Int(1)});

    auto w = parse_matrix(z, {{"1", "1", "1"}, {"1", "1", "0"}, {"1", "0", "0"}});
    auto out = s.contains(w);
    CHECK_FALSE(out.member);
    REQUIRE(out.obstruction.has_value());
    CHECK(out.obstruction->kind == NoSolution::Divisibility);
    CHECK(out.obstruction->divisor == 2);
    CHECK(out.obstruction->remainder == 1);
}

TEST_CASE("generator membership over a rational function field") {
    RatFuncField f({"s"});
    auto h1 = parse_matrix(f, {{"1", "0"}, {"0", "s"}});
    auto h2 = parse_matrix(f, {{"0", "1/s"}, {"0", "0"}});
    auto s = ControllerSet<RatFuncField>::from_generators(f, {h1, h2});
    auto k = parse_matrix(f, {{"s", "1"}, {"0", "s^2"}});
    auto r = s.contains(k);
    REQUIRE(r.member);
    REQUIRE(r.coefficients.has_value());
    CHECK((*r.coefficients)[0] == parse_scalar(f, "s"));
    CHECK((*r.coefficients)[1] == parse_scalar(f, "s"));
    CHECK_FALSE(s.contains(parse_matrix(f, {{"0", "0"}, {"1", "0"}})).member);
}

TEST_CASE("generator membership over a proper rational ring is a declared gap") {
    ProperRatRing sp({}, {"s"});
    auto h = parse_matrix(sp, {{"1"}});
    auto s = ControllerSet<ProperRatRing>::from_generators(sp, {h});
    CHECK_THROWS_AS(s.contains(h), capability_error);
}

TEST_CASE("module closure under sampled combinations") {
    Rng rng(11);
    const IntRing z;
    auto s = ControllerSet<IntRing>::from_generators(z, oracle::counterexample_generators());
    auto gens = s.generators();
    for (int t = 0; t < 50; ++t) {
        Matrix<IntRing> k1(z, 3, 3), k2(z, 3, 3);
        for (const auto& g : gens) {
            k1 = mat_add(k1, scalar_mul(testsupport::random_int(rng, -9, 9), g));
            k2 = mat_add(k2, scalar_mul(testsupport::random_int(rng, -9, 9), g));
        }
        auto r = testsupport::random_int(rng, -9, 9);
        CHECK(s.contains(mat_add(k1, scalar_mul(r, k2))).member);
    }
}

TEST_CASE("delay membership is representation independent") {
    Rng rng(13);
    ProperRatRing sd({}, {"s", "d"});
    auto s = ControllerSet<ProperRatRing>::delay_bounds(sd, "d", {{1}});
    for (int t = 0; t < 40; ++t) {
        auto f = testsupport::random_proper(rng, sd, false);
        Matrix<ProperRatRing> k(sd, 1, 1);
        k.at(0, 0) = f;
        bool verdict = s.contains(k).member;
        // same value through an unreduced representation
        auto q = testsupport::random_ratfunc(rng, 2).num;
        if (q.is_zero()) continue;
        Matrix<ProperRatRing> k2(sd, 1, 1);
        k2.at(0, 0) = RatFunc{mp_mul(f.num, q), mp_mul(f.den, q)};
        CHECK(s.contains(k2).member == verdict);
    }
}
