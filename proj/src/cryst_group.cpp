#include "flatmod/cryst_group.hpp"

#include <map>

#include "flatmod/errors.hpp"

namespace flatmod {

AffineMap affine_compose(const AffineMap& a, const AffineMap& b) {
    RatVec t = a.linear * b.translation;
    for (size_t i = 0; i < t.size(); ++i) t[i] += a.translation[i];
    return {a.linear * b.linear, std::move(t)};
}

AffineMap affine_inverse(const AffineMap& a) {
    auto invopt = inverse(a.linear);
    if (!invopt) throw InternalInconsistency("affine map is singular");
    RatMat inv = std::move(*invopt);
    RatVec t = inv * a.translation;
    for (auto& x : t) x = -x;
    return {std::move(inv), std::move(t)};
}

CrystGroup::CrystGroup(PointGroup hol, std::vector<RatVec> svec, RatMat basis)
    : hol_(std::move(hol)), svec_(std::move(svec)), basis_(std::move(basis)) {
    Int d = 1;
    for (const RatVec& s : svec_)
        for (const Rat& x : s) d = lcm(d, x.get_den());
    denom_ = to_long(d);
}

CrystGroup CrystGroup::from_affine_generators(const std::vector<AffineMap>& gens,
                                              std::size_t max_order) {
    if (gens.empty()) throw InputError("no generators given");
    const int n = gens[0].linear.rows();
    for (const AffineMap& g : gens) {
        if (!g.linear.is_square() || g.linear.rows() != n ||
            static_cast<int>(g.translation.size()) != n)
            throw DimensionMismatch("generator dimensions disagree");
        if (det(g.linear) == 0)
            throw InputError("generator has singular linear part");
    }

    // BFS closure of the linear parts, keeping one representative translation
    // per point-group element (the first word reaching it).
    std::vector<RatMat> pts{RatMat::identity(n)};
    std::vector<RatVec> rep(1, RatVec(n, Rat(0)));
    std::map<std::vector<Rat>, std::size_t> index;
    index[pts[0].flat()] = 0;
    for (std::size_t head = 0; head < pts.size(); ++head) {
        for (const AffineMap& g : gens) {
            RatMat q = pts[head] * g.linear;
            auto it = index.find(q.flat());
            if (it == index.end()) {
                RatVec t = pts[head] * g.translation;
                for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] += rep[head][static_cast<size_t>(i)];
                index[q.flat()] = pts.size();
                pts.push_back(std::move(q));
                rep.push_back(std::move(t));
                if (pts.size() > max_order)
                    throw OrderExceeded("linear closure exceeds the configured order bound " +
                                        std::to_string(max_order));
            }
        }
    }

    // Schreier generators of the translation subgroup: for every element h and
    // generator g, the word rep(h) g rep(hg)^(-1) is a pure translation.
    std::vector<RatVec> latgens;
    for (std::size_t h = 0; h < pts.size(); ++h)
        for (const AffineMap& g : gens) {
            RatMat q = pts[h] * g.linear;
            std::size_t hg = index.at(q.flat());
            RatVec delta = pts[h] * g.translation;
            bool nonzero = false;
            for (int i = 0; i < n; ++i) {
                delta[static_cast<size_t>(i)] += rep[h][static_cast<size_t>(i)] - rep[hg][static_cast<size_t>(i)];
                if (delta[static_cast<size_t>(i)] != 0) nonzero = true;
            }
            if (nonzero) latgens.push_back(std::move(delta));
        }
    if (latgens.empty()) throw NotCocompact("group contains no translations");
    RatMat latmat(n, static_cast<int>(latgens.size()));
    for (int j = 0; j < latmat.cols(); ++j) latmat.set_col(j, latgens[static_cast<size_t>(j)]);
    IntLattice lambda = IntLattice::from_columns(latmat);
    if (lambda.rank() < n)
        throw NotCocompact("translation lattice has rank " + std::to_string(lambda.rank()) +
                           " < " + std::to_string(n));

    RatMat basis = to_rat(lambda.scaled_basis()).scaled(Rat(Int(1), Int(lambda.denominator())));
    RatMat basis_inv = *inverse(basis);

    // change coordinates so the lattice becomes Z^n
    std::vector<IntMat> igens;
    for (const AffineMap& g : gens) {
        RatMat m = basis_inv * g.linear * basis;
        IntMat im(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rat& x = m.at(i, j);
                if (x.get_den() != 1)
                    throw InternalInconsistency("conjugated point part is not integral");
                im.at(i, j) = x.get_num();
            }
        igens.push_back(std::move(im));
    }
    PointGroup hol = PointGroup::generate(igens, max_order);
    if (hol.order() != pts.size())
        throw InternalInconsistency("holonomy closure disagrees with affine closure");

    std::vector<RatVec> svec(hol.order());
    for (std::size_t h = 0; h < hol.order(); ++h) {
        // the BFS orders coincide, so pts[h] corresponds to hol element h
        RatVec s = basis_inv * rep[h];
        for (auto& x : s) x = frac(x);
        svec[h] = std::move(s);
    }

    // cocycle check: s(ab) = a.s(b) + s(a) (mod Z^n)
    for (std::size_t a = 0; a < hol.order(); ++a)
        for (std::size_t b = 0; b < hol.order(); ++b) {
            RatVec lhs = svec[hol.mul(a, b)];
            RatVec rhs = to_rat(hol.element(a)) * svec[b];
            for (int i = 0; i < n; ++i) {
                Rat want = frac(rhs[static_cast<size_t>(i)] + svec[a][static_cast<size_t>(i)]);
                if (lhs[static_cast<size_t>(i)] != want)
                    throw InternalInconsistency("vector system fails the cocycle identity");
            }
        }

    return CrystGroup(std::move(hol), std::move(svec), std::move(basis));
}

bool CrystGroup::is_bieberbach() const {
    const int n = dim();
    for (std::size_t h = 1; h < hol_.order(); ++h) {
        // N = I + A + ... + A^(o-1); a lift of A has finite order iff
        // N*(s + lambda) = 0 for some integral lambda, i.e. N*s lies in N*Z^n.
        const IntMat& a = hol_.element(h);
        IntMat acc = IntMat::identity(n), npow = IntMat::identity(n);
        int o = hol_.element_order(h);
        for (int i = 1; i < o; ++i) {
            npow = npow * a;
            acc = acc + npow;
        }
        RatVec ns = to_rat(acc) * svec_[h];
        if (IntLattice::from_columns(to_rat(acc)).contains(ns)) return false;
    }
    return true;
}

AffineMap CrystGroup::affine_element(std::size_t h) const {
    return {to_rat(hol_.element(h)), svec_[h]};
}

}  // namespace flatmod
