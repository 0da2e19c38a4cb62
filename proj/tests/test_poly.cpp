#include <doctest.h>

#include "flatmod/poly.hpp"
#include "oracles.hpp"

using namespace flatmod;

TEST_CASE("basic polynomial arithmetic") {
    IntPoly p({Int(-1), Int(0), Int(1)});  // x^2 - 1
    IntPoly q({Int(1), Int(1)});           // x + 1
    CHECK(p.degree() == 2);
    CHECK((q * IntPoly({Int(-1), Int(1)})) == p);
    CHECK(divides(q, p));
    CHECK(exact_div(p, q) == IntPoly({Int(-1), Int(1)}));
    CHECK(p.eval(Int(3)) == 8);
    CHECK(p.derivative() == IntPoly({Int(0), Int(2)}));
    CHECK(IntPoly({Int(2), Int(4)}).content() == 2);
    CHECK(IntPoly({Int(2), Int(4)}).primitive_part() == IntPoly({Int(1), Int(2)}));
    CHECK(p.dilate(Int(2)) == IntPoly({Int(-1), Int(0), Int(4)}));
}

TEST_CASE("factorization recovers the input exactly") {
    std::vector<IntPoly> batch = {
        IntPoly({Int(-2), Int(0), Int(1)}),                             // x^2 - 2
        IntPoly({Int(1), Int(0), Int(1)}),                              // x^2 + 1
        IntPoly({Int(-1), Int(1), Int(1)}),                             // x^2 + x - 1
        cyclotomic_polynomial(12),                                      // x^4 - x^2 + 1
        IntPoly({Int(1), Int(0), Int(1)}) * IntPoly({Int(-2), Int(1)}) *
            IntPoly({Int(-2), Int(1)}),                                 // (x^2+1)(x-2)^2
        IntPoly({Int(0), Int(0), Int(0), Int(1)}),                      // x^3
        IntPoly({Int(6), Int(11), Int(6), Int(1)}),                     // (x+1)(x+2)(x+3)
        IntPoly({Int(2), Int(0), Int(2)}),                              // 2(x^2+1)
        IntPoly({Int(1), Int(1), Int(1), Int(1), Int(1)}),              // cyclotomic(5)
        IntPoly({Int(-1), Int(-1), Int(0), Int(1)}),                    // x^3 - x - 1
    };
    for (const IntPoly& p : batch) {
        PolyFactorization f = factor_rational_poly(p, 5);
        IntPoly prod({Int(1)});
        for (const PolyFactor& pf : f.factors) {
            CHECK(pf.factor.lc() > 0);
            CHECK(pf.factor.content() == 1);
            CHECK(oracle::brute_force_irreducible(pf.factor, 12));
            for (int i = 0; i < pf.multiplicity; ++i) prod = prod * pf.factor;
        }
        // input == unit * product, as rational polynomials
        RatPoly lhs = to_rat_poly(p);
        RatPoly rhs = to_rat_poly(prod);
        for (Rat& c : rhs) c *= f.unit;
        CHECK(rp_degree(lhs) == rp_degree(rhs));
        for (int i = 0; i <= rp_degree(lhs); ++i) CHECK(lhs[i] == rhs[i]);
        // determinism with respect to the seed
        PolyFactorization g = factor_rational_poly(p, 5);
        REQUIRE(g.factors.size() == f.factors.size());
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            CHECK(f.factors[i].factor == g.factors[i].factor);
    }
}

TEST_CASE("irreducibility matches exhaustive factor search") {
    std::vector<std::pair<IntPoly, bool>> cases = {
        {IntPoly({Int(-2), Int(0), Int(1)}), true},    // x^2-2
        {IntPoly({Int(-1), Int(0), Int(1)}), false},   // x^2-1
        {IntPoly({Int(1), Int(1), Int(1)}), true},     // x^2+x+1
        {IntPoly({Int(-1), Int(1), Int(1)}), true},    // x^2+x-1
        {IntPoly({Int(2), Int(3), Int(1)}), false},    // (x+1)(x+2)
        {IntPoly({Int(-1), Int(-1), Int(0), Int(1)}), true},  // x^3-x-1
        {cyclotomic_polynomial(8), true},
        {IntPoly({Int(1), Int(2), Int(3), Int(2), Int(1)}), false},  // (x^2+x+1)^2
    };
    for (const auto& [p, want] : cases) {
        CHECK(is_irreducible(p) == want);
        CHECK(oracle::brute_force_irreducible(p, 10) == want);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPoly({Int(-1), Int(1)}));
    CHECK(cyclotomic_polynomial(2) == IntPoly({Int(1), Int(1)}));
    CHECK(cyclotomic_polynomial(4) == IntPoly({Int(1), Int(0), Int(1)}));
    CHECK(cyclotomic_polynomial(5) == IntPoly({Int(1), Int(1), Int(1), Int(1), Int(1)}));
    CHECK(cyclotomic_polynomial(6) == IntPoly({Int(1), Int(-1), Int(1)}));
    CHECK(cyclotomic_polynomial(12) == IntPoly({Int(1), Int(0), Int(-1), Int(0), Int(1)}));
    for (int e : {3, 4, 5, 6, 8, 12}) CHECK(is_irreducible(cyclotomic_polynomial(e)));
}

TEST_CASE("gcd and squarefree part") {
    IntPoly a = IntPoly({Int(-1), Int(1)}) * IntPoly({Int(1), Int(1)});  // x^2-1
    IntPoly b = IntPoly({Int(-1), Int(1)}) * IntPoly({Int(2), Int(1)});  // (x-1)(x+2)
    CHECK(poly_gcd(a, b) == IntPoly({Int(-1), Int(1)}));
    IntPoly sq = IntPoly({Int(-1), Int(1)}) * IntPoly({Int(-1), Int(1)}) *
                 IntPoly({Int(1), Int(1)});
    CHECK(squarefree_part(sq) == a);
}

TEST_CASE("real root counting and sign queries") {
    CHECK(count_real_roots(IntPoly({Int(-2), Int(0), Int(1)})) == 2);   // x^2-2
    CHECK(count_real_roots(IntPoly({Int(1), Int(0), Int(1)})) == 0);    // x^2+1
    CHECK(count_real_roots(IntPoly({Int(6), Int(11), Int(6), Int(1)})) == 3);
    CHECK(count_real_roots(IntPoly({Int(-1), Int(1), Int(1)})) == 2);   // x^2+x-1

    // signs of q = x over the roots of x^2 - 2 (roots +-sqrt2)
    SignCounts s = sign_counts_at_roots(IntPoly({Int(-2), Int(0), Int(1)}),
                                        IntPoly({Int(0), Int(1)}));
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    CHECK(s.zero == 0);

    // signs of q = x over roots of x^2+x-1: one positive, one negative root
    SignCounts s2 = sign_counts_at_roots(IntPoly({Int(-1), Int(1), Int(1)}),
                                         IntPoly({Int(0), Int(1)}));
    CHECK(s2.positive == 1);
    CHECK(s2.negative == 1);

    // q = m itself vanishes at every root
    SignCounts s3 = sign_counts_at_roots(IntPoly({Int(-2), Int(0), Int(1)}),
                                         IntPoly({Int(-2), Int(0), Int(1)}));
    CHECK(s3.zero == 2);
}
