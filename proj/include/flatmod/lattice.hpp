#pragma once

#include "flatmod/normal_forms.hpp"

namespace flatmod {

// Discrete subgroup of Q^n, stored as (1/denom) * integer column basis with the
// basis in canonical column-Hermite form and the denominator minimal.  Rank may
// be anything from 0 to n.
class IntLattice {
  public:
    IntLattice() : ambient_(0), denom_(1) {}
    static IntLattice standard(int n);
    static IntLattice zero(int n);
    // Lattice generated by the columns (dependent generators welcome).
    static IntLattice from_columns(const RatMat& generators);
    static IntLattice from_columns(const IntMat& generators);

    int ambient() const { return ambient_; }
    int rank() const { return ibasis_.cols(); }
    const IntMat& scaled_basis() const { return ibasis_; }
    const Int& denominator() const { return denom_; }
    RatMat basis() const;
    RatVec basis_vector(int j) const;

    bool contains(const RatVec& x) const;
    bool contains(const IntLattice& other) const;
    bool operator==(const IntLattice& o) const {
        return ambient_ == o.ambient_ && denom_ == o.denom_ && ibasis_ == o.ibasis_;
    }

    IntLattice sum(const IntLattice& other) const;
    IntLattice scaled(const Rat& c) const;
    // |det(basis)| for full-rank lattices.
    Rat covolume() const;

  private:
    int ambient_;
    Int denom_;
    IntMat ibasis_;
};

struct CommensurabilityResult {
    IntLattice intersection;
    Int index_in_first;   // [L1 : L1 ∩ L2]
    Int index_in_second;  // [L2 : L1 ∩ L2]
};

// Both lattices must be full rank in the same ambient space (RankMismatch otherwise).
CommensurabilityResult lattice_commensurability(const IntLattice& a, const IntLattice& b);

// {x in Q^n : A x in L} = (discrete part, modulo the kernel) ⊕ ker_Q(A).
struct PreimageLattice {
    IntLattice lattice_part;  // finitely many generators modulo the kernel
    RatMat kernel;            // columns span ker_Q(A)
    bool contains(const RatVec& x) const;
};

PreimageLattice preimage_lattice(const RatMat& a, const IntLattice& l);

}  // namespace flatmod
