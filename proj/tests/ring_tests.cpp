#include <catch2/catch.hpp>

#include <cmath>
#include <complex>
#include <functional>

#include "qinv/function_rings.hpp"
#include "qinv/poly_ring.hpp"
#include "qinv/rings.hpp"
#include "support.hpp"

using namespace qinv;
using qinv::testsupport::Rng;

TEST_CASE("mod-p arithmetic basics") {
    ModRing f5{Int(5)};
    CHECK(f5.add(Int(3), Int(4)) == 2);
    CHECK(f5.from_int(Int(-1)) == 4);
    CHECK(f5.mul(Int(3), Int(4)) == 2);
}

TEST_CASE("modulus must be prime") {
    CHECK_THROWS_AS(ModRing{Int(6)}, invalid_argument_error);
    CHECK_NOTHROW(ModRing{Int(2)});
}

TEST_CASE("Z[b] multiplication uses b^2 = b - 3") {
    ZBetaRing zb;
    auto prod = zb.mul(zb.beta(), zb.beta());
    CHECK(prod == ZBetaElem{Int(-3), Int(1)});
    CHECK(zb.to_string(prod) == "-3+b");

    // independent cross-check by direct complex arithmetic,
    // b = (1 + sqrt(-11)) / 2
    const std::complex<double> b(0.5, std::sqrt(11.0) / 2.0);
    CHECK(std::abs(b * b - (b - 3.0)) < 1e-12);
    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        auto x = testsupport::random_zbeta(rng);
        auto y = testsupport::random_zbeta(rng);
        auto exact = zb.mul(x, y);
        auto approx = (static_cast<double>(x.a.get_si()) + static_cast<double>(x.b.get_si()) * b) *
                      (static_cast<double>(y.a.get_si()) + static_cast<double>(y.b.get_si()) * b);
        auto back = static_cast<double>(exact.a.get_si()) + static_cast<double>(exact.b.get_si()) * b;
        CHECK(std::abs(approx - back) < 1e-9);
    }
}

TEST_CASE("rational arithmetic stays canonical") {
    RatRing q;
    CHECK(q.add(make_rat(Int(1), Int(2)), make_rat(Int(1), Int(3))) == make_rat(Int(5), Int(6)));
    CHECK(q.to_string(make_rat(Int(5), Int(6))) == "5/6");
    CHECK(q.to_string(make_rat(Int(-5), Int(6))) == "-5/6");
}

TEST_CASE("units and inverses") {
    IntRing z;
    CHECK_FALSE(z.is_unit(Int(2)));
    CHECK(z.is_unit(Int(-1)));
    CHECK_FALSE(z.try_invert(Int(2)).has_value());

    ModRing f7{Int(7)};
    auto inv3 = f7.try_invert(Int(3));
    REQUIRE(inv3.has_value());
    CHECK(*inv3 == 5);

    RatRing q;
    auto invq = q.try_invert(make_rat(Int(5), Int(6)));
    REQUIRE(invq.has_value());
    CHECK(*invq == make_rat(Int(6), Int(5)));

    ZBetaRing zb;
    CHECK_FALSE(zb.is_unit(zb.beta()));
    CHECK(zb.is_unit(zb.from_int(Int(-1))));
}

TEST_CASE("proper rational ring units are proper-but-not-strictly-proper") {
    ProperRatRing rp({}, {"s"});
    auto one_over_s1 = parse_scalar(rp, "1/(s+1)");
    CHECK_FALSE(rp.is_unit(one_over_s1));
    auto u = parse_scalar(rp, "(s+1)/(s+2)");
    CHECK(rp.is_unit(u));
    auto inv = rp.try_invert(u);
    REQUIRE(inv.has_value());
    CHECK(rp.eq(rp.mul(u, *inv), rp.one()));
}

TEST_CASE("residue floors") {
    CHECK(IntRing{}.residue_floor() == ResidueFloor::finite(Int(2)));
    CHECK(ModRing{Int(5)}.residue_floor() == ResidueFloor::finite(Int(5)));
    CHECK(RatRing{}.residue_floor() == ResidueFloor::infinite());
    CHECK(ZBetaRing{}.residue_floor() == ResidueFloor::unknown());
    CHECK(RatFuncField({"x"}).residue_floor() == ResidueFloor::infinite());
    CHECK(ProperRatRing({}, {"s"}).residue_floor() == ResidueFloor::infinite());
    CHECK(PolyRingQ(RatRing{}, {"x", "y"}).residue_floor() == ResidueFloor::infinite());
    CHECK(ResidueFloor::finite(Int(5)).at_least(Int(5)));
    CHECK_FALSE(ResidueFloor::finite(Int(5)).at_least(Int(6)));
    CHECK(ResidueFloor::infinite().at_least(Int(1000)));
    CHECK_FALSE(ResidueFloor::unknown().at_least(Int(1)));
}

namespace {

template <commutative_ring R>
void check_ring_axioms(const R& ring, Rng& rng, int trials,
                       std::function<typename R::elem(Rng&)> sample) {
    for (int t = 0; t < trials; ++t) {
        auto a = sample(rng), b = sample(rng), c = sample(rng);
        CHECK(ring.eq(ring.add(a, b), ring.add(b, a)));
        CHECK(ring.eq(ring.mul(a, b), ring.mul(b, a)));
        CHECK(ring.eq(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c))));
        CHECK(ring.eq(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c))));
        CHECK(ring.eq(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c))));
        CHECK(ring.eq(ring.add(a, ring.zero()), a));
        CHECK(ring.eq(ring.mul(a, ring.one()), a));
        CHECK(ring.eq(ring.add(a, ring.neg(a)), ring.zero()));
        if (ring.is_unit(a)) {
            auto inv = ring.try_invert(a);
            REQUIRE(inv.has_value());
            CHECK(ring.eq(ring.mul(a, *inv), ring.one()));
        }
    }
}

}  // namespace

TEST_CASE("ring axioms hold on randomized triples") {
    Rng rng(20260808);
    check_ring_axioms<IntRing>(IntRing{}, rng, 200, [](Rng& g) { return testsupport::random_int(g, -20, 20); });
    check_ring_axioms<RatRing>(RatRing{}, rng, 200, [](Rng& g) { return testsupport::random_rat(g); });
    ModRing f7{Int(7)};
    check_ring_axioms<ModRing>(f7, rng, 200, [](Rng& g) { return testsupport::random_int(g, 0, 6); });
    check_ring_axioms<ZBetaRing>(ZBetaRing{}, rng, 200, [](Rng& g) { return testsupport::random_zbeta(g); });
    RatFuncField qx({"x"});
    check_ring_axioms<RatFuncField>(qx, rng, 25, [](Rng& g) { return testsupport::random_ratfunc(g, 1); });
}

TEST_CASE("proper ring arithmetic preserves properness") {
    Rng rng(7);
    ProperRatRing rp({"x"}, {"s", "d"});
    for (int t = 0; t < 40; ++t) {
        auto a = testsupport::random_proper(rng, rp, false);
        auto b = testsupport::random_proper(rng, rp, false);
        REQUIRE(rp.in_ring(a));
        REQUIRE(rp.in_ring(b));
        CHECK(rp.in_ring(rp.add(a, b)));
        CHECK(rp.in_ring(rp.mul(a, b)));
        CHECK(rp.in_ring(rp.neg(a)));
    }
}
