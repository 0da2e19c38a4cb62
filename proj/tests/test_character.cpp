#include <doctest.h>

#include <algorithm>
#include <map>

#include "flatmod/character.hpp"
#include "flatmod/cryst_group.hpp"
#include "flatmod/group_io.hpp"

using namespace flatmod;

namespace {

PointGroup holonomy_of(const std::string& name) {
    GroupSpec spec = load_group(name, default_catalog_root());
    return CrystGroup::from_affine_generators(spec.generators).holonomy();
}

std::vector<long> degree_multiset(const CharacterTable& t) {
    std::vector<long> degs;
    for (std::size_t i = 0; i < t.num_chars(); ++i) degs.push_back(to_long(t.degree(i)));
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace

TEST_CASE("row orthogonality and degree bookkeeping on all catalog holonomies") {
    for (const std::string& name : catalog_entries(default_catalog_root())) {
        CAPTURE(name);
        PointGroup h = holonomy_of(name);
        CharacterTable t(h);
        CHECK(t.num_chars() == t.num_classes());
        Int degsum = 0;
        for (std::size_t i = 0; i < t.num_chars(); ++i) {
            degsum += t.degree(i) * t.degree(i);
            // degree is the value at the identity class
            CHECK(t.ring().is_rational(t.value(i, 0)));
            CHECK(t.ring().rational_value(t.value(i, 0)) == t.degree(i));
            for (std::size_t j = 0; j < t.num_chars(); ++j)
                CHECK(t.inner(t.row(i), t.row(j)) == (i == j ? 1 : 0));
        }
        CHECK(degsum == Int(static_cast<long>(h.order())));
        // class sizes add up to the group order
        std::size_t total = 0;
        for (std::size_t k = 0; k < t.num_classes(); ++k) total += t.class_size(k);
        CHECK(total == h.order());
    }
}

TEST_CASE("column orthogonality") {
    for (const std::string& name : {"wallpaper/p4m", "wallpaper/p6m", "dim4/q8-z4"}) {
        CAPTURE(name);
        PointGroup h = holonomy_of(name);
        CharacterTable t(h);
        const CycRing& r = t.ring();
        for (std::size_t k = 0; k < t.num_classes(); ++k)
            for (std::size_t l = 0; l < t.num_classes(); ++l) {
                CycRing::Elt sum = r.zero();
                for (std::size_t i = 0; i < t.num_chars(); ++i)
                    sum = r.add(sum, r.mul(t.value(i, k), t.value(i, t.inverse_class(l))));
                REQUIRE(r.is_rational(sum));
                Int want = k == l ? Int(static_cast<long>(h.order() / t.class_size(k))) : Int(0);
                CHECK(r.rational_value(sum) == want);
            }
    }
}

TEST_CASE("known degree multisets") {
    CHECK(degree_multiset(CharacterTable(holonomy_of("wallpaper/p3m1"))) ==
          std::vector<long>{1, 1, 2});  // symmetric group on 3 letters
    CHECK(degree_multiset(CharacterTable(holonomy_of("wallpaper/p4m"))) ==
          std::vector<long>{1, 1, 1, 1, 2});
    CHECK(degree_multiset(CharacterTable(holonomy_of("dim4/q8-z4"))) ==
          std::vector<long>{1, 1, 1, 1, 2});
    CHECK(degree_multiset(CharacterTable(holonomy_of("wallpaper/p6m"))) ==
          std::vector<long>{1, 1, 1, 1, 2, 2});
    CHECK(degree_multiset(CharacterTable(holonomy_of("dim4/dic3-z4"))) ==
          std::vector<long>{1, 1, 1, 1, 2, 2});
    CHECK(degree_multiset(CharacterTable(holonomy_of("wallpaper/p4"))) ==
          std::vector<long>{1, 1, 1, 1});
}

TEST_CASE("frobenius-schur indicators distinguish the three types") {
    // quaternion group: four linear characters (+1) and one quaternionic (-1)
    CharacterTable q8(holonomy_of("dim4/q8-z4"));
    std::vector<int> inds;
    for (std::size_t i = 0; i < q8.num_chars(); ++i) inds.push_back(q8.indicator(i));
    std::sort(inds.begin(), inds.end());
    CHECK(inds == std::vector<int>{-1, 1, 1, 1, 1});

    // dihedral of order 8: all real, all indicator +1
    CharacterTable d4(holonomy_of("wallpaper/p4m"));
    for (std::size_t i = 0; i < d4.num_chars(); ++i) CHECK(d4.indicator(i) == 1);

    // cyclic of order 4: two real and two complex characters
    CharacterTable c4(holonomy_of("wallpaper/p4"));
    int zeros = 0, ones = 0;
    for (std::size_t i = 0; i < c4.num_chars(); ++i) {
        if (c4.indicator(i) == 0) ++zeros;
        if (c4.indicator(i) == 1) ++ones;
    }
    CHECK(zeros == 2);
    CHECK(ones == 2);
}

TEST_CASE("galois orbits partition the rows and permute consistently") {
    for (const std::string& name : {"wallpaper/p4", "dim4/c5-z4", "wallpaper/p6"}) {
        CAPTURE(name);
        CharacterTable t(holonomy_of(name));
        std::vector<int> seen(t.num_chars(), 0);
        for (const auto& orbit : t.galois_orbits())
            for (std::size_t i : orbit) {
                ++seen[i];
                CHECK(t.orbit_of(i) == t.orbit_of(orbit[0]));
            }
        for (int s : seen) CHECK(s == 1);
        const CycRing& r = t.ring();
        for (long k : r.units())
            for (std::size_t i = 0; i < t.num_chars(); ++i) {
                std::size_t j = t.galois_permute(i, k);
                // sigma_k of each value of row i equals the value of row j
                for (std::size_t c = 0; c < t.num_classes(); ++c)
                    CHECK(r.galois(t.value(i, c), k) == t.value(j, c));
            }
    }
}

TEST_CASE("natural character decomposes with the right multiplicities") {
    // multiplicities weighted by degrees recover the ambient dimension
    std::map<std::string, int> dims = {{"wallpaper/p4m", 2}, {"dim3/g6", 3},
                                       {"dim4/q8-z4", 4},    {"dim4/c5-z4", 4},
                                       {"wallpaper/p6", 2}};
    for (const auto& [name, n] : dims) {
        CAPTURE(name);
        CharacterTable t(holonomy_of(name));
        Int total = 0;
        for (std::size_t i = 0; i < t.num_chars(); ++i) {
            Int m = t.natural_multiplicity(i);
            CHECK(m >= 0);
            total += m * t.degree(i);
        }
        CHECK(total == n);
    }
    // the quaternionic character carries the whole natural module of q8-z4
    CharacterTable q8(holonomy_of("dim4/q8-z4"));
    for (std::size_t i = 0; i < q8.num_chars(); ++i) {
        if (q8.indicator(i) == -1)
            CHECK(q8.natural_multiplicity(i) == 2);
        else
            CHECK(q8.natural_multiplicity(i) == 0);
    }
}

TEST_CASE("dixon prime obeys its congruence and size constraints") {
    for (const std::string& name : {"wallpaper/p6m", "dim4/q8-z4", "dim4/c5-z4"}) {
        CAPTURE(name);
        PointGroup h = holonomy_of(name);
        CharacterTable t(h);
        long p = t.dixon_prime();
        long e = to_long(Int(h.exponent()));
        CHECK(p > 1);
        CHECK((p - 1) % e == 0);
        CHECK(Int(p) * Int(p) > Int(4) * Int(static_cast<long>(h.order())));
    }
}
