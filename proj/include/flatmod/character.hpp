#pragma once

#include <vector>

#include "flatmod/cyclotomic.hpp"
#include "flatmod/point_group.hpp"

namespace flatmod {

// Exact character table of a finite point group.  Values live in
// Z[x]/Phi_e(x) where e is the group exponent; everything is computed from
// class-sum matrices over a prime field F_p with p = 1 (mod e), p > 2*sqrt|H|,
// then lifted exactly by counting root-of-unity multiplicities through the
// power maps.
class CharacterTable {
public:
    explicit CharacterTable(const PointGroup& h);

    const PointGroup& group() const { return h_; }
    const CycRing& ring() const { return ring_; }
    std::size_t num_classes() const { return reps_.size(); }
    std::size_t num_chars() const { return values_.size(); }

    std::size_t class_rep(std::size_t k) const { return reps_[k]; }
    std::size_t class_size(std::size_t k) const { return sizes_[k]; }
    std::size_t inverse_class(std::size_t k) const { return inv_class_[k]; }
    // class of (rep of class k)^m
    std::size_t power_class(std::size_t k, long m) const;

    const Int& degree(std::size_t i) const { return degrees_[i]; }
    const CycRing::Elt& value(std::size_t i, std::size_t k) const { return values_[i][k]; }
    const std::vector<CycRing::Elt>& row(std::size_t i) const { return values_[i]; }
    int indicator(std::size_t i) const { return indicators_[i]; }

    // Galois orbits of the rows under x -> x^k, k coprime to the exponent;
    // each orbit is a sorted list of character indices.
    const std::vector<std::vector<std::size_t>>& galois_orbits() const { return orbits_; }
    std::size_t orbit_of(std::size_t i) const { return orbit_of_[i]; }

    // sigma_k applied to row i gives row (galois_permute(i, k))
    std::size_t galois_permute(std::size_t i, long k) const;

    // exact inner product <row_i, row_j>, an integer (0 or 1 for irreducibles)
    Int inner(const std::vector<CycRing::Elt>& a, const std::vector<CycRing::Elt>& b) const;

    // multiplicity of row i in the natural character (traces of the point
    // group matrices)
    Int natural_multiplicity(std::size_t i) const;

    long dixon_prime() const { return prime_; }

private:
    PointGroup h_;  // owned copy: the table must outlive any caller-held group
    CycRing ring_;
    long prime_ = 0;
    std::vector<std::size_t> reps_, sizes_, inv_class_;
    std::vector<std::size_t> class_index_;  // element -> class
    std::vector<Int> degrees_;
    std::vector<std::vector<CycRing::Elt>> values_;  // [char][class]
    std::vector<int> indicators_;
    std::vector<std::vector<std::size_t>> orbits_;
    std::vector<std::size_t> orbit_of_;
};

}  // namespace flatmod
