#pragma once

#include <cstddef>
#include <vector>

#include "flatmod/matrix.hpp"

namespace flatmod {

// A finite subgroup of GL(n, Z), closed by breadth-first enumeration from its
// generators.  Element order is canonical: identity first, then BFS layers
// with generators applied in the order given.  All derived tables
// (multiplication, inverses, conjugacy classes) follow that numbering, so
// every downstream computation is deterministic.
class PointGroup {
public:
    static PointGroup generate(const std::vector<IntMat>& gens, std::size_t max_order = 2000);

    int dim() const { return dim_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<IntMat>& elements() const { return elems_; }
    const IntMat& element(std::size_t i) const { return elems_[i]; }
    const std::vector<std::size_t>& generator_indices() const { return gen_idx_; }

    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * order() + b]; }
    std::size_t inverse(std::size_t a) const { return inv_[a]; }
    std::size_t index_of(const IntMat& m) const;  // throws if absent
    bool contains(const IntMat& m) const;

    int element_order(std::size_t a) const { return ord_[a]; }
    int exponent() const { return exponent_; }
    bool is_abelian() const;

    // a^k for any integer k
    std::size_t power(std::size_t a, long k) const;

    // classes are sorted internally; the list is ordered by smallest member
    const std::vector<std::vector<std::size_t>>& conjugacy_classes() const { return classes_; }
    std::size_t class_of(std::size_t a) const { return class_of_[a]; }

private:
    PointGroup() = default;

    int dim_ = 0;
    std::vector<IntMat> elems_;
    std::vector<std::size_t> gen_idx_;
    std::vector<std::size_t> mul_, inv_;
    std::vector<int> ord_;
    int exponent_ = 1;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
};

}  // namespace flatmod
