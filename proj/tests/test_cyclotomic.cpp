#include <doctest.h>

#include "flatmod/cyclotomic.hpp"

using namespace flatmod;

TEST_CASE("root powers and ring identities") {
    for (int e : {1, 3, 4, 5, 8, 12}) {
        CycRing r(e);
        CHECK(r.degree() == cyclotomic_polynomial(e).degree());
        // z^e = 1
        CHECK(r.root_power(e) == r.one());
        CHECK(r.root_power(0) == r.one());
        // z^k * z^(e-k) = 1
        for (long k = 0; k < e; ++k)
            CHECK(r.mul(r.root_power(k), r.root_power(e - k)) == r.one());
        // distributivity on a few elements
        CycRing::Elt a = r.add(r.root_power(1), r.integer(2));
        CycRing::Elt b = r.sub(r.root_power(e > 1 ? 2 : 0), r.one());
        CycRing::Elt c = r.add(r.root_power(e > 2 ? e - 1 : 0), r.one());
        CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
    }
}

TEST_CASE("sum of all e-th roots vanishes for prime conductor") {
    for (int e : {3, 5, 7}) {
        CycRing r(e);
        CycRing::Elt s = r.zero();
        for (long k = 0; k < e; ++k) s = r.add(s, r.root_power(k));
        CHECK(r.is_zero(s));
    }
}

TEST_CASE("galois action is a ring automorphism and composes") {
    CycRing r(12);
    std::vector<long> units = r.units();
    CHECK(units == std::vector<long>{1, 5, 7, 11});
    CycRing::Elt a = r.add(r.root_power(1), r.integer(3));
    CycRing::Elt b = r.sub(r.root_power(7), r.root_power(2));
    for (long k : units) {
        CHECK(r.galois(r.add(a, b), k) == r.add(r.galois(a, k), r.galois(b, k)));
        CHECK(r.galois(r.mul(a, b), k) == r.mul(r.galois(a, k), r.galois(b, k)));
        for (long l : units)
            CHECK(r.galois(r.galois(a, k), l) == r.galois(a, (k * l) % 12));
        // rational elements are fixed
        CHECK(r.galois(r.integer(5), k) == r.integer(5));
    }
    // galois(z, k) = z^k
    for (long k : units) CHECK(r.galois(r.root_power(1), k) == r.root_power(k));
}

TEST_CASE("rationality detection") {
    CycRing r(5);
    CHECK(r.is_rational(r.integer(-7)));
    CHECK(r.rational_value(r.integer(-7)) == -7);
    CHECK(!r.is_rational(r.root_power(1)));
    // z + z^2 + z^3 + z^4 = -1
    CycRing::Elt s = r.zero();
    for (long k = 1; k < 5; ++k) s = r.add(s, r.root_power(k));
    CHECK(r.is_rational(s));
    CHECK(r.rational_value(s) == -1);
}

TEST_CASE("minimal polynomials inside the cyclotomic field") {
    for (int e : {3, 4, 5, 8, 12}) {
        CycRing r(e);
        CHECK(r.min_poly(r.root_power(1)) == cyclotomic_polynomial(e));
        CHECK(r.min_poly(r.one()) == IntPoly({Int(-1), Int(1)}));
        CHECK(r.min_poly(r.integer(4)) == IntPoly({Int(-4), Int(1)}));
    }
    // golden ratio period: z + z^4 in conductor 5 has min poly x^2 + x - 1
    CycRing r5(5);
    CycRing::Elt period = r5.add(r5.root_power(1), r5.root_power(4));
    CHECK(r5.min_poly(period) == IntPoly({Int(-1), Int(1), Int(1)}));
    // i in conductor 12: z^3 has min poly x^2 + 1
    CycRing r12(12);
    CHECK(r12.min_poly(r12.root_power(3)) == IntPoly({Int(1), Int(0), Int(1)}));
}
