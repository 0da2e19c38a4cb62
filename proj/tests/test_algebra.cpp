#include <doctest.h>

#include "flatmod/character.hpp"
#include "flatmod/cryst_group.hpp"
#include "flatmod/endo_algebra.hpp"
#include "flatmod/errors.hpp"
#include "flatmod/group_io.hpp"
#include "flatmod/isotypic.hpp"

using namespace flatmod;

namespace {

CrystGroup load(const std::string& name) {
    GroupSpec spec = load_group(name, default_catalog_root());
    return CrystGroup::from_affine_generators(spec.generators);
}

struct Built {
    CrystGroup group;
    IsotypicComponent comp;
    RationalAlgebra alg;
};

Built build(const std::string& name, std::size_t which = 0) {
    CrystGroup g = load(name);
    CharacterTable t(g.holonomy());
    std::vector<IsotypicComponent> comps = rational_isotypic_decomposition(g, t);
    REQUIRE(which < comps.size());
    IsotypicComponent c = comps[which];
    RationalAlgebra alg = isotypic_endomorphism_algebra(g, c);
    return Built{std::move(g), std::move(c), std::move(alg)};
}

RatVec algebra_mul(const RationalAlgebra& a, const RatVec& x, const RatVec& y) {
    return a.mul(x, y);
}

}  // namespace

TEST_CASE("endomorphism algebra dimensions") {
    CHECK(build("wallpaper/p1").alg.dim == 4);   // full 2x2 matrix algebra
    CHECK(build("wallpaper/p4").alg.dim == 2);   // gaussian field
    CHECK(build("dim4/q8-z4").alg.dim == 4);     // definite quaternions
    CHECK(build("dim4/c5-z4").alg.dim == 4);     // cyclotomic field of order five
    CHECK(build("dim4/dic3-z4").alg.dim == 4);
    CHECK(build("wallpaper/pm").alg.dim == 1);   // scalar line
}

TEST_CASE("structure constants are associative and unital") {
    for (const std::string& name : {"wallpaper/p1", "wallpaper/p4", "dim4/q8-z4"}) {
        CAPTURE(name);
        Built b = build(name);
        const int d = b.alg.dim;
        std::vector<RatVec> basis;
        for (int i = 0; i < d; ++i) {
            RatVec e(d, Rat(0));
            e[i] = 1;
            basis.push_back(e);
        }
        for (int i = 0; i < d; ++i) {
            // identity element
            RatVec left = algebra_mul(b.alg, b.alg.identity, basis[i]);
            RatVec right = algebra_mul(b.alg, basis[i], b.alg.identity);
            for (int k = 0; k < d; ++k) {
                CHECK(left[k] == basis[i][k]);
                CHECK(right[k] == basis[i][k]);
            }
            for (int j = 0; j < d; ++j)
                for (int l = 0; l < d; ++l) {
                    RatVec ab_c = algebra_mul(
                        b.alg, algebra_mul(b.alg, basis[i], basis[j]), basis[l]);
                    RatVec a_bc = algebra_mul(
                        b.alg, basis[i], algebra_mul(b.alg, basis[j], basis[l]));
                    for (int k = 0; k < d; ++k) CHECK(ab_c[k] == a_bc[k]);
                }
        }
        // basis is linearly independent: coordinates are faithful
        RatMat flats(b.alg.ambient * b.alg.ambient, d);
        for (int j = 0; j < d; ++j)
            for (int r = 0; r < b.alg.ambient; ++r)
                for (int c = 0; c < b.alg.ambient; ++c)
                    flats.at(r * b.alg.ambient + c, j) = b.alg.matrix_basis[j].at(r, c);
        CHECK(rank(flats) == d);
    }
}

TEST_CASE("centers and their minimal polynomials") {
    Built p1 = build("wallpaper/p1");
    CenterField z1 = center_and_field(p1.alg);
    CHECK(z1.center_basis.cols() == 1);
    CHECK(z1.min_poly == IntPoly({Int(-1), Int(1)}));

    Built p4 = build("wallpaper/p4");
    CenterField z4 = center_and_field(p4.alg);
    CHECK(z4.center_basis.cols() == 2);
    CHECK(z4.min_poly.degree() == 2);
    CHECK(is_irreducible(z4.min_poly));
    CHECK(count_real_roots(z4.min_poly) == 0);  // imaginary quadratic

    Built c5 = build("dim4/c5-z4");
    CenterField z5 = center_and_field(c5.alg);
    CHECK(z5.center_basis.cols() == 4);
    CHECK(z5.min_poly.degree() == 4);
    CHECK(is_irreducible(z5.min_poly));

    Built q8 = build("dim4/q8-z4");
    CenterField zq = center_and_field(q8.alg);
    CHECK(zq.center_basis.cols() == 1);  // central rationals only
}

TEST_CASE("division structure classification") {
    Built p1 = build("wallpaper/p1");
    CenterField z1 = center_and_field(p1.alg);
    DivisionDescriptor d1 = division_structure(p1.alg, p1.comp.real_multiplicity, z1);
    CHECK(d1.kind == DivisionKind::RationalField);
    CHECK(d1.matrix_size == 2);

    Built p4 = build("wallpaper/p4");
    CenterField z4 = center_and_field(p4.alg);
    DivisionDescriptor d4 = division_structure(p4.alg, p4.comp.real_multiplicity, z4);
    CHECK(d4.kind == DivisionKind::NumberField);
    CHECK(d4.center_degree == 2);

    Built c5 = build("dim4/c5-z4");
    CenterField z5 = center_and_field(c5.alg);
    DivisionDescriptor d5 = division_structure(c5.alg, c5.comp.real_multiplicity, z5);
    CHECK(d5.kind == DivisionKind::NumberField);
    CHECK(d5.center_degree == 4);
    CHECK(d5.matrix_size == 1);

    Built q8 = build("dim4/q8-z4");
    CenterField zq = center_and_field(q8.alg);
    DivisionDescriptor dq = division_structure(q8.alg, q8.comp.real_multiplicity, zq);
    CHECK(dq.kind == DivisionKind::Quaternion);
    CHECK(dq.quat.rational_center);
    CHECK(dq.quat.a_rational == -1);
    CHECK(dq.quat.b_rational == -1);

    Built dic3 = build("dim4/dic3-z4");
    CenterField zd = center_and_field(dic3.alg);
    DivisionDescriptor dd = division_structure(dic3.alg, dic3.comp.real_multiplicity, zd);
    CHECK(dd.kind == DivisionKind::Quaternion);
    CHECK(dd.quat.rational_center);
    CHECK(dd.quat.a_rational == -1);
    CHECK(dd.quat.b_rational == -3);
}

TEST_CASE("quaternion bases satisfy the defining relations") {
    for (const std::string& name : {"dim4/q8-z4", "dim4/dic3-z4"}) {
        CAPTURE(name);
        Built b = build(name);
        CenterField z = center_and_field(b.alg);
        QuaternionData q = quaternion_basis(b.alg, z);
        RatVec sq1 = b.alg.mul(q.lambda1, q.lambda1);
        RatVec sq2 = b.alg.mul(q.lambda2, q.lambda2);
        // squares are the stated central constants
        for (int k = 0; k < b.alg.dim; ++k) {
            CHECK(sq1[k] == q.a_rational * b.alg.identity[k]);
            CHECK(sq2[k] == q.b_rational * b.alg.identity[k]);
        }
        // anticommutation and the product element
        RatVec l12 = b.alg.mul(q.lambda1, q.lambda2);
        RatVec l21 = b.alg.mul(q.lambda2, q.lambda1);
        for (int k = 0; k < b.alg.dim; ++k) {
            CHECK(l12[k] == -l21[k]);
            CHECK(l12[k] == q.lambda3[k]);
        }
        // negative definite parameters for a definite algebra
        CHECK(q.a_rational < 0);
        CHECK(q.b_rational < 0);
    }
}

TEST_CASE("commutative algebras admit no quaternion basis") {
    Built c5 = build("dim4/c5-z4");
    CenterField z5 = center_and_field(c5.alg);
    CHECK_THROWS_AS(quaternion_basis(c5.alg, z5), AnalysisError);
}

TEST_CASE("integral order data is consistent") {
    for (const std::string& name : {"wallpaper/p4", "dim4/q8-z4", "dim4/c5-z4"}) {
        CAPTURE(name);
        Built b = build(name);
        CHECK(b.alg.order_basis.rows() == b.alg.dim);
        CHECK(b.alg.order_basis.cols() == b.alg.dim);
        CHECK(abs(det(b.alg.order_basis)) == 1);
        // the basis spans a ring: all structure constants are integers
        for (const auto& row_block : b.alg.structure)
            for (const RatVec& row : row_block)
                for (const Rat& c : row) CHECK(frac(c) == 0);
        // identity has integral coordinates
        for (const Rat& c : b.alg.identity) CHECK(frac(c) == 0);
    }
}
