#include <doctest.h>

#include "flatmod/character.hpp"
#include "flatmod/cryst_group.hpp"
#include "flatmod/group_io.hpp"
#include "flatmod/isotypic.hpp"

using namespace flatmod;

namespace {

CrystGroup load(const std::string& name) {
    GroupSpec spec = load_group(name, default_catalog_root());
    return CrystGroup::from_affine_generators(spec.generators);
}

std::vector<IsotypicComponent> decompose(const CrystGroup& g) {
    CharacterTable t(g.holonomy());
    return rational_isotypic_decomposition(g, t);
}

}  // namespace

TEST_CASE("projector identities hold exactly on every catalog group") {
    for (const std::string& name : catalog_entries(default_catalog_root())) {
        CAPTURE(name);
        CrystGroup g = load(name);
        std::vector<IsotypicComponent> comps = decompose(g);
        const int n = g.dim();
        RatMat total = RatMat::zero(n, n);
        int rank_total = 0;
        for (const IsotypicComponent& c : comps) {
            // idempotent
            CHECK(c.projector * c.projector == c.projector);
            // commutes with the holonomy generators
            for (std::size_t gi : g.holonomy().generator_indices()) {
                RatMat hm = to_rat(g.holonomy().element(gi));
                CHECK(hm * c.projector == c.projector * hm);
            }
            CHECK(rank(c.projector) == c.rank);
            total = total + c.projector;
            rank_total += c.rank;
        }
        CHECK(total.is_identity());
        CHECK(rank_total == n);
        // pairwise orthogonal
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j)
                CHECK((comps[i].projector * comps[j].projector).is_zero());
    }
}

TEST_CASE("multiplicity, type and rank bookkeeping") {
    for (const std::string& name : catalog_entries(default_catalog_root())) {
        CAPTURE(name);
        CrystGroup g = load(name);
        for (const IsotypicComponent& c : decompose(g)) {
            CHECK(c.m >= 1);
            CHECK(c.f >= 1);
            switch (c.type) {
                case RealType::R:
                case RealType::C:
                    CHECK(c.real_multiplicity == c.m);
                    break;
                case RealType::H:
                    CHECK(c.real_multiplicity * 2 == c.m);
                    break;
            }
            Int expected_rank = c.m * c.degree * Int(c.f);
            if (c.type == RealType::C) expected_rank *= 2;
            CHECK(Int(c.rank) == expected_rank);
            RealIsotypicData rd = real_isotypic_data(c);
            CHECK(rd.real_multiplicity == c.real_multiplicity);
            CHECK(rd.type == c.type);
        }
    }
}

TEST_CASE("pinned decompositions") {
    // torus: one real component of multiplicity 2
    std::vector<IsotypicComponent> p1 = decompose(load("wallpaper/p1"));
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].type == RealType::R);
    CHECK(p1[0].real_multiplicity == 2);
    CHECK(p1[0].f == 1);
    CHECK(p1[0].projector.is_identity());

    // two mirror eigenlines
    std::vector<IsotypicComponent> pm = decompose(load("wallpaper/pm"));
    REQUIRE(pm.size() == 2);
    for (const IsotypicComponent& c : pm) {
        CHECK(c.type == RealType::R);
        CHECK(c.real_multiplicity == 1);
        CHECK(c.rank == 1);
    }

    // fourfold rotation: one complex component, rational character field
    std::vector<IsotypicComponent> p4 = decompose(load("wallpaper/p4"));
    REQUIRE(p4.size() == 1);
    CHECK(p4[0].type == RealType::C);
    CHECK(p4[0].real_multiplicity == 1);
    CHECK(p4[0].f == 1);
    CHECK(p4[0].field_min_poly == IntPoly({Int(-1), Int(1)}));
    CHECK(p4[0].schur_flag == "assumed");

    // quaternionic component of the quaternion group
    std::vector<IsotypicComponent> q8 = decompose(load("dim4/q8-z4"));
    REQUIRE(q8.size() == 1);
    CHECK(q8[0].type == RealType::H);
    CHECK(q8[0].m == 2);
    CHECK(q8[0].real_multiplicity == 1);
    CHECK(q8[0].degree == 2);
    CHECK(q8[0].schur_flag == "suspect");

    // order five rotation block: Galois orbit of length 4, real subfield degree 2
    std::vector<IsotypicComponent> c5 = decompose(load("dim4/c5-z4"));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].type == RealType::C);
    CHECK(c5[0].f == 2);
    CHECK(c5[0].field_min_poly == IntPoly({Int(-1), Int(1), Int(1)}));
    CHECK(c5[0].rank == 4);

    // three nontrivial characters of the 2x2 elementary group
    std::vector<IsotypicComponent> g6 = decompose(load("dim3/g6"));
    REQUIRE(g6.size() == 3);
    for (const IsotypicComponent& c : g6) {
        CHECK(c.type == RealType::R);
        CHECK(c.degree == 1);
        CHECK(c.rank == 1);
    }
}

TEST_CASE("components are ordered canonically and deterministically") {
    for (const std::string& name : {"wallpaper/pmm", "wallpaper/p6m", "dim3/g6"}) {
        CAPTURE(name);
        CrystGroup g = load(name);
        std::vector<IsotypicComponent> a = decompose(g);
        std::vector<IsotypicComponent> b = decompose(g);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].projector == b[i].projector);
            CHECK(a[i].rep_char == b[i].rep_char);
        }
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            CHECK(a[i].degree <= a[i + 1].degree);
    }
}
