#include <doctest.h>

#include "flatmod/lattice.hpp"
#include "flatmod/numeric.hpp"

using namespace flatmod;

TEST_CASE("lattice construction is canonical across generating sets") {
    IntLattice a = IntLattice::from_columns(IntMat{{2, 0}, {0, 3}});
    // same lattice after a unimodular change of generators
    IntLattice b = IntLattice::from_columns(IntMat{{2, 2}, {3, 0}});
    CHECK(a == b);
    CHECK(a.rank() == 2);
    CHECK(a.covolume() == 6);

    IntLattice half = IntLattice::from_columns(
        RatMat{{Rat(Int(1), Int(2)), Rat(0)}, {Rat(0), Rat(Int(1), Int(2))}});
    CHECK(half.denominator() == 2);
    CHECK(half.covolume() == Rat(Int(1), Int(4)));
    CHECK(half.contains(IntLattice::standard(2)));
    CHECK(!IntLattice::standard(2).contains(half));
}

TEST_CASE("membership with denominators") {
    IntLattice l = IntLattice::from_columns(
        RatMat{{Rat(Int(1), Int(2)), Rat(0)}, {Rat(Int(1), Int(2)), Rat(1)}});
    CHECK(l.contains(RatVec{Rat(Int(1), Int(2)), Rat(Int(1), Int(2))}));
    CHECK(l.contains(RatVec{Rat(1), Rat(0)}));
    CHECK(!l.contains(RatVec{Rat(Int(1), Int(4)), Rat(0)}));
    CHECK(!l.contains(RatVec{Rat(Int(1), Int(2)), Rat(0)}));
}

TEST_CASE("sum and scaling") {
    IntLattice a = IntLattice::from_columns(IntMat{{2}, {0}});
    IntLattice b = IntLattice::from_columns(IntMat{{0}, {3}});
    IntLattice s = a.sum(b);
    CHECK(s.rank() == 2);
    CHECK(s.contains(RatVec{Rat(2), Rat(3)}));
    CHECK(!s.contains(RatVec{Rat(1), Rat(0)}));

    IntLattice scaled = IntLattice::standard(2).scaled(Rat(Int(1), Int(3)));
    CHECK(scaled.contains(RatVec{Rat(Int(1), Int(3)), Rat(0)}));
    CHECK(scaled.denominator() == 3);
}

TEST_CASE("zero and standard lattices") {
    IntLattice z = IntLattice::zero(3);
    CHECK(z.rank() == 0);
    CHECK(z.contains(RatVec{Rat(0), Rat(0), Rat(0)}));
    CHECK(!z.contains(RatVec{Rat(1), Rat(0), Rat(0)}));
    CHECK(IntLattice::standard(3).rank() == 3);
    CHECK(IntLattice::standard(3).covolume() == 1);
}

TEST_CASE("commensurability indices") {
    IntLattice a = IntLattice::standard(2);
    IntLattice b = IntLattice::from_columns(IntMat{{2, 0}, {0, 1}});
    CommensurabilityResult r = lattice_commensurability(a, b);
    CHECK(r.index_in_first == 2);   // [Z^2 : 2Z x Z] = 2
    CHECK(r.index_in_second == 1);  // intersection equals b
    CHECK(r.intersection == b);

    IntLattice c = IntLattice::from_columns(IntMat{{1, 0}, {0, 3}});
    CommensurabilityResult r2 = lattice_commensurability(b, c);
    CHECK(r2.index_in_first == 3);
    CHECK(r2.index_in_second == 2);
}

TEST_CASE("preimage lattice of a rational map") {
    // {x : 2x in Z^2} = (1/2)Z^2
    PreimageLattice p = preimage_lattice(to_rat(IntMat{{2, 0}, {0, 2}}), IntLattice::standard(2));
    CHECK(p.lattice_part.denominator() == 2);
    CHECK(p.lattice_part.contains(RatVec{Rat(Int(1), Int(2)), Rat(0)}));
    CHECK(p.kernel.cols() == 0);

    // singular map: kernel direction present, lattice part 1-dimensional
    RatMat a{{1, 1}, {0, 0}};
    PreimageLattice q = preimage_lattice(a, IntLattice::standard(2));
    CHECK(q.kernel.cols() == 1);
    CHECK(q.lattice_part.rank() == 1);
    // preimage property: a * (lattice basis vector) lands in Z^2
    RatVec img = a * q.lattice_part.basis_vector(0);
    CHECK(IntLattice::standard(2).contains(img));
    CHECK(q.contains(RatVec{Rat(1), Rat(-1)}));

    // map into a coarser target
    PreimageLattice r =
        preimage_lattice(to_rat(IntMat{{1, 0}, {0, 1}}),
                         IntLattice::from_columns(IntMat{{3, 0}, {0, 3}}));
    CHECK(r.lattice_part.covolume() == 9);
}
