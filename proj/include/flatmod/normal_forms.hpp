#pragma once

#include "flatmod/matrix.hpp"

namespace flatmod {

struct HermiteResult {
    IntMat h;  // canonical echelon form, U * m == h
    IntMat u;  // unimodular row transform
    int rank = 0;
};

// Row-style Hermite normal form under left multiplication: pivots positive,
// everything below a pivot zero, entries above a pivot reduced into [0, pivot).
// Pivot choice during elimination: smallest absolute value, lowest row index on
// ties.  The result is the unique canonical basis of the row lattice of m.
HermiteResult hermite_normal_form(const IntMat& m);

struct SmithResult {
    IntMat d;  // diagonal, d_i >= 0, d_i | d_{i+1}
    IntMat u;  // unimodular, u * m * v == d
    IntMat v;  // unimodular
    int rank = 0;
    std::vector<Int> diagonal() const;
};

SmithResult smith_normal_form(const IntMat& m);

// Saturated basis of {x : m x = 0} as columns (via SNF right transform).
IntMat int_kernel(const IntMat& m);

// Canonical basis (columns) of the lattice generated by the columns of m:
// transpose, row-HNF, keep nonzero rows, transpose back.
IntMat column_lattice_basis(const IntMat& m);

// Smallest saturated sublattice of Z^n containing the columns of m
// (i.e. span_Q(m) ∩ Z^n), canonical column basis.
IntMat saturate_columns(const IntMat& m);

// Invariant-factor presentation of a finitely generated abelian group.
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;  // each >= 2, divisibility chain
    int free_rank = 0;

    // From an SNF diagonal of a relation matrix presenting Z^gens / relations.
    static FiniteAbelianGroup from_relations(const std::vector<Int>& diag, int generators);

    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    Int order() const;  // throws InternalInconsistency when free_rank > 0
    bool operator==(const FiniteAbelianGroup& o) const = default;
    std::string display() const;  // e.g. "1", "Z/2 x Z/4", "Z^2 x Z/3"
};

}  // namespace flatmod
