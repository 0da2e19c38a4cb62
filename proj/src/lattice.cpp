#include "flatmod/lattice.hpp"

namespace flatmod {

IntLattice IntLattice::standard(int n) {
    IntLattice l;
    l.ambient_ = n;
    l.denom_ = 1;
    l.ibasis_ = IntMat::identity(n);
    return l;
}

IntLattice IntLattice::zero(int n) {
    IntLattice l;
    l.ambient_ = n;
    l.denom_ = 1;
    l.ibasis_ = IntMat(n, 0);
    return l;
}

IntLattice IntLattice::from_columns(const RatMat& generators) {
    IntLattice l;
    l.ambient_ = generators.rows();
    Int d = denominator_lcm(generators);
    IntMat scaled(generators.rows(), generators.cols());
    for (int i = 0; i < generators.rows(); ++i)
        for (int j = 0; j < generators.cols(); ++j) {
            Rat q = generators.at(i, j) * Rat(d);
            scaled.at(i, j) = q.get_num();
        }
    IntMat basis = column_lattice_basis(scaled);
    // minimize the stored denominator
    Int g = d;
    for (int i = 0; i < basis.rows() && g != 1; ++i)
        for (int j = 0; j < basis.cols() && g != 1; ++j) g = gcd(g, basis.at(i, j));
    if (basis.cols() == 0) g = d;
    if (g > 1) {
        for (int i = 0; i < basis.rows(); ++i)
            for (int j = 0; j < basis.cols(); ++j) basis.at(i, j) /= g;
        d /= g;
    }
    l.denom_ = d;
    l.ibasis_ = basis;
    return l;
}

IntLattice IntLattice::from_columns(const IntMat& generators) {
    return from_columns(to_rat(generators));
}

RatMat IntLattice::basis() const {
    RatMat b = to_rat(ibasis_);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b.at(i, j) /= Rat(denom_);
    return b;
}

RatVec IntLattice::basis_vector(int j) const {
    RatVec v(ambient_);
    for (int i = 0; i < ambient_; ++i) v[i] = Rat(ibasis_.at(i, j)) / Rat(denom_);
    return v;
}

bool IntLattice::contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != ambient_)
        throw InternalInconsistency("lattice membership: ambient mismatch");
    RatVec target(x.size());
    for (size_t i = 0; i < x.size(); ++i) target[i] = x[i] * Rat(denom_);
    auto sol = solve(to_rat(ibasis_), target);
    if (!sol) return false;
    // Basis columns are independent, so the solution is unique if it exists.
    for (const Rat& c : *sol)
        if (c.get_den() != 1) return false;
    return true;
}

bool IntLattice::contains(const IntLattice& other) const {
    for (int j = 0; j < other.rank(); ++j)
        if (!contains(other.basis_vector(j))) return false;
    return true;
}

IntLattice IntLattice::sum(const IntLattice& other) const {
    if (ambient_ != other.ambient_) throw InternalInconsistency("lattice sum: ambient mismatch");
    return from_columns(hstack(basis(), other.basis()));
}

IntLattice IntLattice::scaled(const Rat& c) const {
    RatMat b = basis();
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b.at(i, j) *= c;
    return from_columns(b);
}

Rat IntLattice::covolume() const {
    if (rank() != ambient_) throw RankMismatch("covolume needs a full-rank lattice");
    Rat d = det(basis());
    return d < 0 ? Rat(-d) : d;
}

CommensurabilityResult lattice_commensurability(const IntLattice& a, const IntLattice& b) {
    if (a.ambient() != b.ambient())
        throw RankMismatch("lattice_commensurability: ambient dimensions differ");
    if (a.rank() != a.ambient() || b.rank() != b.ambient())
        throw RankMismatch("lattice_commensurability: both lattices must be full rank");
    // common integral model: x = Ba u = Bb w with u, w integral
    Int d = lcm(a.denominator(), b.denominator());
    IntMat ba = a.scaled_basis().scaled(d / a.denominator());
    IntMat bb = b.scaled_basis().scaled(d / b.denominator());
    IntMat stacked = hstack(ba, bb.scaled(Int(-1)));
    IntMat ker = int_kernel(stacked);  // saturated, rank = n
    IntMat top(ba.cols(), ker.cols());
    for (int i = 0; i < ba.cols(); ++i)
        for (int j = 0; j < ker.cols(); ++j) top.at(i, j) = ker.at(i, j);
    RatMat inter = to_rat(ba * top);
    for (int i = 0; i < inter.rows(); ++i)
        for (int j = 0; j < inter.cols(); ++j) inter.at(i, j) /= Rat(d);
    CommensurabilityResult res;
    res.intersection = IntLattice::from_columns(inter);
    if (res.intersection.rank() != a.ambient())
        throw InternalInconsistency("intersection of full-rank lattices lost rank");
    Rat ia = res.intersection.covolume() / a.covolume();
    Rat ib = res.intersection.covolume() / b.covolume();
    if (ia.get_den() != 1 || ib.get_den() != 1)
        throw InternalInconsistency("lattice index not integral");
    res.index_in_first = ia.get_num();
    res.index_in_second = ib.get_num();
    return res;
}

bool PreimageLattice::contains(const RatVec& x) const {
    // Membership in B·Z^r + span_Q(K): project out the kernel with a left
    // annihilator P (rows spanning col(K)^⊥); then x belongs iff P x lies in
    // the lattice generated by the columns of P·B.
    RatMat p = flatmod::kernel(kernel.transpose()).transpose();
    RatVec px = p * x;
    RatMat pb = p * lattice_part.basis();
    return IntLattice::from_columns(pb).contains(px);
}

PreimageLattice preimage_lattice(const RatMat& a, const IntLattice& l) {
    if (a.rows() != l.ambient())
        throw InternalInconsistency("preimage_lattice: shape mismatch");
    // integral model: A x ∈ L  <=>  (da·dl·A) x = (da·B_scaled) y, y integral
    Int dl = l.denominator();
    Int da = denominator_lcm(a);
    IntMat ai(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Rat q = a.at(i, j) * Rat(da * dl);
            ai.at(i, j) = q.get_num();
        }
    IntMat bi = l.scaled_basis().scaled(da);
    PreimageLattice out;
    out.kernel = flatmod::kernel(a);
    // reachable sublattice of L: {B y : y ∈ Z^r, B y ∈ colspace(A)}, i.e.
    // y ∈ ker(C^T B) for C spanning colspace(A)^⊥
    RatMat c = flatmod::kernel(to_rat(ai).transpose());
    IntMat ky;
    if (c.cols() == 0) {
        ky = IntMat::identity(bi.cols());
    } else {
        RatMat cb = c.transpose() * to_rat(bi);
        Int dcb = denominator_lcm(cb);
        IntMat cbi(cb.rows(), cb.cols());
        for (int i = 0; i < cb.rows(); ++i)
            for (int j = 0; j < cb.cols(); ++j) {
                Rat q = cb.at(i, j) * Rat(dcb);
                cbi.at(i, j) = q.get_num();
            }
        ky = int_kernel(cbi);
    }
    IntMat l1 = bi * ky;
    // particular solutions x_j with (scaled A) x_j = l1_j; free variables pinned
    // to zero by the solver, so the output is deterministic
    std::vector<RatVec> xs;
    RatMat arat = to_rat(ai);
    for (int j = 0; j < l1.cols(); ++j) {
        RatVec target(l1.rows());
        for (int i = 0; i < l1.rows(); ++i) target[i] = Rat(l1.at(i, j));
        auto x = solve(arat, target);
        if (!x) throw InternalInconsistency("preimage: inconsistent particular solve");
        xs.push_back(*x);
    }
    out.lattice_part = IntLattice::from_columns(from_columns(a.cols(), xs));
    return out;
}

}  // namespace flatmod
