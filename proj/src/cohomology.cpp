#include "flatmod/cohomology.hpp"

#include <cstddef>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

IntVec integral_vector(const RatVec& v, const char* what) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw InternalInconsistency(what);
        out[i] = v[i].get_num();
    }
    return out;
}

}  // namespace

CocycleSpace::CocycleSpace(const CrystGroup& g) : g_(g) {
    const PointGroup& h = g.holonomy();
    const int n = g.dim();
    if (!h.element(0).is_identity())
        throw InternalInconsistency("point group element 0 is not the identity");
    k_ = static_cast<long>(h.order());
    nontriv_ = h.order() - 1;
    const int nvar = static_cast<int>(nontriv_) * n;

    if (nontriv_ == 0) {
        der_basis_ = IntMat(0, 0);
        der_inv_ = RatMat(0, 0);
        snf_u_ = IntMat(0, 0);
        h1_ = FiniteAbelianGroup{};
        shift_lattice_ = IntLattice::standard(n);
        return;
    }

    // Cocycle conditions w(ab) = a w(b) + w(a) mod k on the stacked unknowns
    // w(h), h != 1, written as integer rows of C.
    const int nrows = static_cast<int>(nontriv_ * nontriv_) * n;
    IntMat c(nrows, nvar);
    int row = 0;
    for (std::size_t a = 1; a <= nontriv_; ++a) {
        const IntMat& ma = h.element(a);
        for (std::size_t b = 1; b <= nontriv_; ++b) {
            const std::size_t ab = h.mul(a, b);
            const int col_a = static_cast<int>(a - 1) * n;
            const int col_b = static_cast<int>(b - 1) * n;
            for (int i = 0; i < n; ++i) {
                if (ab != 0) c.at(row + i, static_cast<int>(ab - 1) * n + i) += 1;
                for (int j = 0; j < n; ++j) c.at(row + i, col_b + j) -= ma.at(i, j);
                c.at(row + i, col_a + i) -= 1;
            }
            row += n;
        }
    }

    // Derivations: {z : C z = 0 mod k} via the kernel of [C | kI].
    IntMat aug = hstack(c, IntMat::identity(nrows).scaled(Int(k_)));
    IntMat ker = int_kernel(aug);
    IntMat zgen(nvar, ker.cols());
    for (int i = 0; i < nvar; ++i)
        for (int j = 0; j < ker.cols(); ++j) zgen.at(i, j) = ker.at(i, j);
    der_basis_ = column_lattice_basis(zgen);
    if (der_basis_.rows() != nvar || der_basis_.cols() != nvar)
        throw InternalInconsistency("derivation group is not full rank");
    auto inv = inverse(to_rat(der_basis_));
    if (!inv) throw InternalInconsistency("derivation basis not invertible");
    der_inv_ = *inv;

    // Shifts v with every (h-1)v integral: preimage of the standard lattice
    // under the stacked difference matrix.
    RatMat stacked(0, n);
    for (std::size_t a = 1; a <= nontriv_; ++a)
        stacked = vstack(stacked, to_rat(h.element(a)) - RatMat::identity(n));
    PreimageLattice pre = preimage_lattice(stacked, IntLattice::standard(stacked.rows()));
    shift_lattice_ = pre.lattice_part;

    // Relations: principal derivations h |-> (h-1)v for v in the shift
    // lattice, plus k Z^N, all in derivation coordinates.
    std::vector<IntVec> rel_cols;
    for (int j = 0; j < shift_lattice_.rank(); ++j) {
        const RatVec v = shift_lattice_.basis_vector(j);
        RatVec w;
        w.reserve(static_cast<std::size_t>(nvar));
        for (std::size_t a = 1; a <= nontriv_; ++a) {
            const RatVec img = (to_rat(h.element(a)) - RatMat::identity(n)) * v;
            w.insert(w.end(), img.begin(), img.end());
        }
        const IntVec wi = integral_vector(w, "principal derivation not integral");
        rel_cols.push_back(integral_vector(der_inv_ * to_rat(wi),
                                           "principal derivation outside derivation group"));
    }
    for (int i = 0; i < nvar; ++i) {
        RatVec kei(static_cast<std::size_t>(nvar));
        kei[static_cast<std::size_t>(i)] = Rat(Int(k_));
        rel_cols.push_back(
            integral_vector(der_inv_ * kei, "k-torsion shift outside derivation group"));
    }
    IntMat rel = from_columns(nvar, rel_cols);
    SmithResult snf = smith_normal_form(rel);
    if (snf.rank != nvar) throw InternalInconsistency("derivation quotient not finite");
    snf_u_ = snf.u;
    snf_diag_ = snf.diagonal();
    for (int i = 0; i < nvar; ++i) {
        if (snf_diag_[static_cast<std::size_t>(i)] <= 0)
            throw InternalInconsistency("relation diagonal not positive");
        if (snf_diag_[static_cast<std::size_t>(i)] >= 2) kept_.push_back(i);
    }
    h1_ = FiniteAbelianGroup::from_relations(snf_diag_, nvar);
    if (h1_.free_rank != 0) throw InternalInconsistency("first cohomology not finite");
}

std::vector<Int> CocycleSpace::class_of_cocycle(const std::vector<RatVec>& svec) const {
    const PointGroup& h = g_.holonomy();
    const int n = g_.dim();
    if (svec.size() != h.order()) throw InternalInconsistency("cocycle value count mismatch");
    if (nontriv_ == 0) return {};

    // Transfer shift: with W = -sum_b s(b), k s(h) - (h-1) W is integral.
    RatVec shift(static_cast<std::size_t>(n));
    for (const RatVec& v : svec)
        for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] -= v[static_cast<std::size_t>(i)];
    RatVec w;
    w.reserve(nontriv_ * static_cast<std::size_t>(n));
    for (std::size_t a = 1; a <= nontriv_; ++a) {
        const RatMat diff = to_rat(h.element(a)) - RatMat::identity(n);
        const RatVec part = diff * shift;
        for (int i = 0; i < n; ++i) {
            Rat val = svec[a][static_cast<std::size_t>(i)] * Rat(Int(k_)) -
                      part[static_cast<std::size_t>(i)];
            w.push_back(val);
        }
    }
    const IntVec wi = integral_vector(w, "transfer-reduced cocycle not integral");
    const IntVec x =
        integral_vector(der_inv_ * to_rat(wi), "cocycle does not lie in the derivation group");
    const IntVec y = snf_u_ * x;
    std::vector<Int> coords;
    coords.reserve(kept_.size());
    for (int pos : kept_)
        coords.push_back(fmod(y[static_cast<std::size_t>(pos)], snf_diag_[static_cast<std::size_t>(pos)]));
    return coords;
}

std::vector<Int> CocycleSpace::own_class() const { return class_of_cocycle(g_.vector_systems()); }

std::vector<std::size_t> CocycleSpace::conjugation_permutation(const IntMat& x) const {
    const PointGroup& h = g_.holonomy();
    if (!is_unimodular(x)) throw NotNormalizing("linear part is not in GL(n, Z)");
    auto xinv = inverse_unimodular(x);
    if (!xinv) throw NotNormalizing("linear part is not in GL(n, Z)");
    std::vector<std::size_t> perm(h.order());
    for (std::size_t a = 0; a < h.order(); ++a) {
        const IntMat conj = *xinv * h.element(a) * x;  // h |-> x^-1 h x
        if (!h.contains(conj)) throw NotNormalizing("linear part does not normalize the holonomy");
        perm[a] = h.index_of(conj);
    }
    return perm;
}

std::vector<RatVec> CocycleSpace::transported_system(const IntMat& x) const {
    const std::vector<std::size_t> perm = conjugation_permutation(x);
    const RatMat xr = to_rat(x);
    std::vector<RatVec> out(perm.size());
    for (std::size_t a = 0; a < perm.size(); ++a) out[a] = xr * g_.vector_system(perm[a]);
    return out;
}

IntMat CocycleSpace::h1_action(const IntMat& x) const {
    const std::vector<std::size_t> perm = conjugation_permutation(x);
    const int n = g_.dim();
    const int nvar = der_basis_.rows();
    IntMat act(static_cast<int>(kept_.size()), static_cast<int>(kept_.size()));
    if (kept_.empty()) return act;
    auto uinv = inverse_unimodular(snf_u_);
    if (!uinv) throw InternalInconsistency("SNF row transform not unimodular");
    const RatMat xr = to_rat(x);
    for (std::size_t j = 0; j < kept_.size(); ++j) {
        IntVec lift(static_cast<std::size_t>(nvar));
        for (int i = 0; i < nvar; ++i) lift[static_cast<std::size_t>(i)] = uinv->at(i, kept_[j]);
        const IntVec w = der_basis_ * lift;
        // transported derivation: w'(h) = x . w(x^-1 h x)
        RatVec wt(static_cast<std::size_t>(nvar));
        for (std::size_t a = 1; a <= nontriv_; ++a) {
            const std::size_t src = perm[a];
            if (src == 0) throw InternalInconsistency("conjugation sent a nonidentity to 1");
            RatVec block(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                block[static_cast<std::size_t>(i)] =
                    Rat(w[(src - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)]);
            const RatVec img = xr * block;
            for (int i = 0; i < n; ++i)
                wt[(a - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
                    img[static_cast<std::size_t>(i)];
        }
        const IntVec xc =
            integral_vector(der_inv_ * wt, "transported derivation outside derivation group");
        const IntVec y = snf_u_ * xc;
        for (std::size_t i = 0; i < kept_.size(); ++i)
            act.at(static_cast<int>(i), static_cast<int>(j)) =
                fmod(y[static_cast<std::size_t>(kept_[i])],
                     snf_diag_[static_cast<std::size_t>(kept_[i])]);
    }
    return act;
}

bool CocycleSpace::in_normalizer(const IntMat& x) const {
    if (x.rows() != g_.dim() || x.cols() != g_.dim()) return false;
    if (!is_unimodular(x)) return false;
    std::vector<RatVec> moved;
    try {
        moved = transported_system(x);
    } catch (const NotNormalizing&) {
        return false;
    }
    return class_of_cocycle(moved) == own_class();
}

FiniteAbelianGroup h1_of(const CrystGroup& g) { return CocycleSpace(g).h1(); }

}  // namespace flatmod
