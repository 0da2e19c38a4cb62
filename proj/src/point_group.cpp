#include "flatmod/point_group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "flatmod/errors.hpp"

namespace flatmod {

PointGroup PointGroup::generate(const std::vector<IntMat>& gens, std::size_t max_order) {
    if (gens.empty()) throw InternalInconsistency("point group needs at least one generator");
    int n = gens[0].rows();
    for (const IntMat& g : gens) {
        if (!g.is_square() || g.rows() != n)
            throw DimensionMismatch("point-group generators must be square of equal size");
        if (!is_unimodular(g))
            throw InputError("point-group generator is not invertible over the integers");
    }

    PointGroup pg;
    pg.dim_ = n;
    std::map<std::vector<Int>, std::size_t> index;
    pg.elems_.push_back(IntMat::identity(n));
    index[pg.elems_[0].flat()] = 0;
    for (std::size_t head = 0; head < pg.elems_.size(); ++head) {
        for (const IntMat& g : gens) {
            IntMat m = pg.elems_[head] * g;
            auto key = m.flat();
            if (index.emplace(key, pg.elems_.size()).second) {
                pg.elems_.push_back(std::move(m));
                if (pg.elems_.size() > max_order)
                    throw OrderExceeded("point group exceeds the configured order bound " +
                                        std::to_string(max_order));
            }
        }
    }
    const std::size_t h = pg.elems_.size();
    for (const IntMat& g : gens) pg.gen_idx_.push_back(index.at(g.flat()));

    pg.mul_.resize(h * h);
    for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b)
            pg.mul_[a * h + b] = index.at((pg.elems_[a] * pg.elems_[b]).flat());

    pg.inv_.assign(h, 0);
    for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b)
            if (pg.mul_[a * h + b] == 0) {
                pg.inv_[a] = b;
                break;
            }

    pg.ord_.assign(h, 1);
    for (std::size_t a = 0; a < h; ++a) {
        std::size_t x = a;
        int o = 1;
        while (x != 0) {
            x = pg.mul_[x * h + a];
            ++o;
        }
        pg.ord_[a] = o;
        pg.exponent_ = static_cast<int>(std::lcm(pg.exponent_, o));
    }

    pg.class_of_.assign(h, SIZE_MAX);
    for (std::size_t a = 0; a < h; ++a) {
        if (pg.class_of_[a] != SIZE_MAX) continue;
        std::size_t cls = pg.classes_.size();
        std::vector<std::size_t> members{a};
        pg.class_of_[a] = cls;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (std::size_t g = 0; g < h; ++g) {
                std::size_t c = pg.mul_[pg.mul_[g * h + members[head]] * h + pg.inv_[g]];
                if (pg.class_of_[c] == SIZE_MAX) {
                    pg.class_of_[c] = cls;
                    members.push_back(c);
                }
            }
        std::sort(members.begin(), members.end());
        pg.classes_.push_back(std::move(members));
    }
    return pg;
}

std::size_t PointGroup::index_of(const IntMat& m) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i] == m) return i;
    throw InternalInconsistency("matrix is not an element of the point group");
}

bool PointGroup::contains(const IntMat& m) const {
    for (const IntMat& e : elems_)
        if (e == m) return true;
    return false;
}

bool PointGroup::is_abelian() const {
    const std::size_t h = order();
    for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = a + 1; b < h; ++b)
            if (mul_[a * h + b] != mul_[b * h + a]) return false;
    return true;
}

std::size_t PointGroup::power(std::size_t a, long k) const {
    long o = ord_[a];
    long r = k % o;
    if (r < 0) r += o;
    std::size_t x = 0;
    for (long i = 0; i < r; ++i) x = mul(x, a);
    return x;
}

}  // namespace flatmod
