#pragma once

#include <vector>

#include "flatmod/cryst_group.hpp"
#include "flatmod/lattice.hpp"
#include "flatmod/normal_forms.hpp"

namespace flatmod {

// First cohomology of the holonomy acting on (1/k)Z^n / Z^n, k = |H|:
// derivations modulo principal ones, in invariant-factor coordinates.  The
// class of the group's own vector system lives here, and a linear map extends
// to an affine normalizer element exactly when its conjugation action fixes
// that class.
class CocycleSpace {
public:
    explicit CocycleSpace(const CrystGroup& g);

    const CrystGroup& group() const { return g_; }
    long modulus() const { return k_; }
    const FiniteAbelianGroup& h1() const { return h1_; }
    const std::vector<Int>& invariant_factors() const { return h1_.invariant_factors; }

    // Coordinates in prod Z/d_i of the class of a cocycle, given by its values
    // on every group element (indexed like the point group, defined mod Z^n).
    std::vector<Int> class_of_cocycle(const std::vector<RatVec>& svec) const;
    std::vector<Int> own_class() const;

    // h |-> x . s(x^-1 h x); throws NotNormalizing unless x normalizes the
    // holonomy inside GL(n, Z).
    std::vector<RatVec> transported_system(const IntMat& x) const;

    // Matrix of the conjugation action of x on the coordinates.
    IntMat h1_action(const IntMat& x) const;

    // True when some translation u makes the affine map (x, u) conjugate the
    // group onto itself.
    bool in_normalizer(const IntMat& x) const;

    // Discrete part of {v : (h-1)v integral for all h}; contains Z^n modulo
    // the fixed subspace.
    const IntLattice& shift_lattice() const { return shift_lattice_; }

private:
    std::vector<std::size_t> conjugation_permutation(const IntMat& x) const;

    CrystGroup g_;  // owned copy: safe to construct from a temporary
    long k_ = 1;
    std::size_t nontriv_ = 0;  // |H| - 1
    IntMat der_basis_;         // N x N columns spanning the derivation group
    RatMat der_inv_;           // inverse of der_basis_
    IntMat snf_u_;             // row transform of the relation-matrix SNF
    std::vector<Int> snf_diag_;
    std::vector<int> kept_;    // positions with diagonal entry >= 2
    FiniteAbelianGroup h1_;
    IntLattice shift_lattice_;
};

FiniteAbelianGroup h1_of(const CrystGroup& g);

}  // namespace flatmod
