#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatmod/cryst_group.hpp"
#include "flatmod/isotypic.hpp"
#include "flatmod/poly.hpp"

namespace flatmod {

// Finite-dimensional associative Q-algebra given by a basis of concrete
// matrices (the integral commutant on one isotypic lattice) and exact
// structure constants.  The basis itself spans the distinguished Z-order.
struct RationalAlgebra {
    int dim = 0;
    int ambient = 0;                             // size of the concrete matrices
    std::vector<RatMat> matrix_basis;            // integer matrices, canonical order
    std::vector<std::vector<RatVec>> structure;  // structure[i][j] = coords of b_i b_j
    RatVec identity;                             // coords of 1
    IntMat order_basis;                          // order generators in basis coordinates

    RatVec mul(const RatVec& a, const RatVec& b) const;
    RatMat left_mult(const RatVec& a) const;
    RatMat right_mult(const RatVec& a) const;
    bool is_zero(const RatVec& a) const;
};

// End of one isotypic lattice: saturate the projector image inside Z^n,
// restrict the holonomy, and take the full integral commutant.  Exact; checks
// associativity, closure of the order, and that the identity acts trivially.
RationalAlgebra isotypic_endomorphism_algebra(const CrystGroup& g, const IsotypicComponent& comp);

struct CenterField {
    RatMat center_basis;  // columns = coordinates of a center basis
    RatVec primitive;     // coordinates of a primitive element of the center
    IntPoly min_poly;     // its minimal polynomial (monic, irreducible)
};

// Center by linear solve, primitive element by deterministic search; throws
// NotAField when the center splits (reducible minimal polynomial).
CenterField center_and_field(const RationalAlgebra& e, std::uint64_t seed = 1);

enum class DivisionKind { RationalField, NumberField, Quaternion, Undetermined };
std::string division_kind_name(DivisionKind k);

struct QuaternionData {
    RatVec lambda1, lambda2, lambda3;  // coordinates in the algebra basis
    RatVec a_coords, b_coords;         // lambda1^2 and lambda2^2 (central)
    Rat a_rational, b_rational;        // meaningful when the center is Q
    bool rational_center = false;
};

struct DivisionDescriptor {
    DivisionKind kind = DivisionKind::Undetermined;
    IntPoly center_min_poly;
    int center_degree = 1;
    Int matrix_size = 1;  // the multiplicity M with E = Mat_M(D)
    QuaternionData quat;  // populated when kind == Quaternion
    std::string note;     // diagnostics when undetermined
};

// Identify the division algebra D with E = Mat_M(D): commutative cases by
// dimension bookkeeping, D = E itself when M = 1 (field or quaternion),
// honestly undetermined otherwise.
DivisionDescriptor division_structure(const RationalAlgebra& e, const Int& mult,
                                      const CenterField& cf, std::uint64_t seed = 1);

// Anticommuting trace-zero basis with totally negative parameters; parameters
// squarefree-normalized over rational centers.  Throws NotQuaternion or
// ZeroDivisorFound.
QuaternionData quaternion_basis(const RationalAlgebra& e, const CenterField& cf,
                                std::uint64_t seed = 1);

}  // namespace flatmod
