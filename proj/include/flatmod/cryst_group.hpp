#pragma once

#include <vector>

#include "flatmod/lattice.hpp"
#include "flatmod/point_group.hpp"

namespace flatmod {

// Affine map x |-> linear*x + translation.
struct AffineMap {
    RatMat linear;
    RatVec translation;
};

AffineMap affine_compose(const AffineMap& a, const AffineMap& b);
AffineMap affine_inverse(const AffineMap& a);

// A cocompact crystallographic group, stored in normalized coordinates where
// the translation lattice is Z^n.  The group is determined by its holonomy
// point group H < GL(n, Z) together with the vector system s : H -> [0,1)^n
// satisfying s(ab) = a.s(b) + s(a) (mod Z^n).
class CrystGroup {
public:
    // Closes the linear parts to a finite group, recovers the translation
    // lattice from Schreier generators, and changes basis so the lattice
    // becomes Z^n.  Throws OrderExceeded if the linear closure passes
    // max_order, NotCocompact if the translations do not span.
    static CrystGroup from_affine_generators(const std::vector<AffineMap>& gens,
                                             std::size_t max_order = 2000);

    int dim() const { return hol_.dim(); }
    const PointGroup& holonomy() const { return hol_; }
    const RatVec& vector_system(std::size_t h) const { return svec_[h]; }
    const std::vector<RatVec>& vector_systems() const { return svec_; }

    // columns express the normalized lattice basis in input coordinates
    const RatMat& input_basis() const { return basis_; }

    // least k >= 1 with k*s(h) integral for every h
    long cocycle_denominator() const { return denom_; }

    bool is_bieberbach() const;

    AffineMap affine_element(std::size_t h) const;

private:
    CrystGroup(PointGroup hol, std::vector<RatVec> svec, RatMat basis);

    PointGroup hol_;
    std::vector<RatVec> svec_;
    RatMat basis_;
    long denom_ = 1;
};

}  // namespace flatmod
