#pragma once

#include <cstdint>
#include <vector>

#include "flatmod/cohomology.hpp"
#include "flatmod/cryst_group.hpp"
#include "flatmod/lattice.hpp"
#include "flatmod/normal_forms.hpp"

namespace flatmod {

// Integer matrices commuting with every holonomy element: a Z-order in the
// commutant algebra, with canonical (column-HNF) basis and exact structure
// constants.
struct CentralizerRing {
    int ambient = 0;
    std::vector<IntMat> basis;
    IntVec identity_coords;
    // structure[i][j] = coordinates of basis[i] * basis[j] in the basis
    std::vector<std::vector<IntVec>> structure;
    int rank() const { return static_cast<int>(basis.size()); }
};

CentralizerRing centralizer_ring(const CrystGroup& g);

// Solves the affine equations for (A, v) commuting with every generator of
// the group (point parts and lattice translations).  The translation
// equations force A = I; the v solution space is the fixed subspace of the
// holonomy, returned as a column basis.  A nonidentity A in the solution
// space would contradict the centralizer lemma and throws LemmaViolation.
RatMat centralizer_of_group_is_translations(const CrystGroup& g);

// The lattice {x : (h-1)x in Z^n for all h} together with the finite quotient
// by Z^n plus the fixed subspace, in invariant factors, with lifted quotient
// generators.
struct TranslationNormalizer {
    IntLattice lattice;        // discrete part, transverse to the fixed subspace
    RatMat fixed_subspace;     // columns span Fix_R(H)
    FiniteAbelianGroup quotient;
    std::vector<RatVec> generators;  // one lift per invariant factor

    // coordinates in prod Z/d_i of a vector from lattice + fixed subspace
    std::vector<Int> coords(const RatVec& w) const;

    RatMat basis_inverse;  // inverse of [lattice basis | fixed basis]
    IntMat snf_u;
    std::vector<Int> snf_diag;
    std::vector<int> kept;
};

TranslationNormalizer translation_normalizer(const CrystGroup& g);

// All automorphisms of the point group as permutations of element indices,
// enumerated by brute force over generator images; lexicographically sorted
// (the identity comes first).
std::vector<std::vector<std::size_t>> automorphism_group(const PointGroup& h);

// Realizability of an abstract automorphism by conjugation with an element of
// GL(n, Z): bounded search in the integral solution lattice of the twisted
// commuting equations.  "realized == false" only means no witness up to the
// searched height, never a proof of non-realizability.
struct RealizedAutomorphism {
    std::vector<std::size_t> perm;
    bool realized = false;
    IntMat witness;
    bool normalizer_witness = false;  // some witness also fixes the cocycle class
    IntMat normalizer_witness_matrix;
    long searched_height = 0;
};

std::vector<RealizedAutomorphism> realized_automorphisms(const CrystGroup& g, long height_bound);

// The finite normal subgroup of the mapping class group: translation cosets
// of the normalizer modulo the group and the continuous translations.
struct FiniteKernel {
    Int order = 1;
    std::vector<AffineMap> generators;
};

FiniteKernel mcg_finite_kernel(const CrystGroup& g);

struct McgSummary {
    Int holonomy_order = 1;
    FiniteAbelianGroup h1;
    std::vector<Int> own_class;
    TranslationNormalizer tnorm;
    FiniteKernel kernel;
    std::vector<RealizedAutomorphism> realized;
    std::size_t realized_count = 0;
    std::size_t normalizer_realized_count = 0;
    bool full_gl_normalizer = false;  // holonomy within {±I} and trivial H¹
    CentralizerRing cring;
    Int unit_count = 0;                // centralizer-ring units found under the bound
    std::vector<IntMat> unit_witnesses;  // first few of them
    long height_bound = 10;
    long unit_search_height = 0;  // effective height after the candidate cap
};

McgSummary mcg_report(const CrystGroup& g, long height_bound = 10);

}  // namespace flatmod
