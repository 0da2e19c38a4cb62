#pragma once

#include <string>
#include <vector>

#include "flatmod/character.hpp"
#include "flatmod/cryst_group.hpp"
#include "flatmod/poly.hpp"

namespace flatmod {

enum class RealType { R, C, H };

std::string real_type_name(RealType t);  // "R", "C", "H"

// One isotypic block of the holonomy action on Q^n: the Galois-orbit sum of
// central idempotents, with its multiplicity and field data.
struct IsotypicComponent {
    RatMat projector;
    Int degree;              // complex degree d of the representative character
    Int m;                   // complex multiplicity of the representative
    Int real_multiplicity;   // M: m for R/C, m/2 for H
    RealType type = RealType::R;
    int f = 1;               // [K:Q] with K = Q(chi) intersect R
    int real_component_count = 1;  // = f
    IntPoly field_min_poly;  // monic minimal polynomial of a primitive element of K
    std::size_t rep_char = 0;
    std::size_t orbit = 0;
    int rank = 0;            // rank of the projector, asserted against the formula
    std::string schur_flag;  // "assumed" or "suspect" (indicator -1)
};

// Decompose Q^n under the holonomy into isotypic components (only orbits with
// nonzero multiplicity appear).  Exact; asserts the projector algebra
// (idempotent, mutually orthogonal, summing to the identity, H-equivariant).
std::vector<IsotypicComponent> rational_isotypic_decomposition(const CrystGroup& g,
                                                               const CharacterTable& t);

// (M, type, component count) per the real-form bookkeeping; throws
// OddQuaternionMultiplicity for inconsistent quaternionic data.
struct RealIsotypicData {
    Int real_multiplicity;
    RealType type;
    int real_component_count;
};
RealIsotypicData real_isotypic_data(const IsotypicComponent& c);

}  // namespace flatmod
