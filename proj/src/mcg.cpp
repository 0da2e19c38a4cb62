#include "flatmod/mcg.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

constexpr long kCandidateCap = 300000;

// Integral saturated column basis, reshaped to matrices, of
// {X : X a_g = b_g X for all g}.  Row-major vec convention.
std::vector<IntMat> twisted_commutant(const std::vector<IntMat>& a, const std::vector<IntMat>& b,
                                      int n) {
    const int nn = n * n;
    std::vector<IntMat> out;
    IntMat sat;
    if (a.empty()) {
        sat = IntMat::identity(nn);
    } else {
        RatMat sys(static_cast<int>(a.size()) * nn, nn);
        int row0 = 0;
        for (std::size_t g = 0; g < a.size(); ++g) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const int r = row0 + i * n + j;
                    for (int q = 0; q < n; ++q) sys.at(r, i * n + q) += Rat(a[g].at(q, j));
                    for (int p = 0; p < n; ++p) sys.at(r, p * n + j) -= Rat(b[g].at(i, p));
                }
            row0 += nn;
        }
        RatMat ker = kernel(sys);
        IntMat igen(nn, ker.cols());
        for (int j = 0; j < ker.cols(); ++j) {
            Int d = 1;
            for (int i = 0; i < nn; ++i) d = lcm(d, Int(ker.at(i, j).get_den()));
            for (int i = 0; i < nn; ++i) igen.at(i, j) = Int(ker.at(i, j).get_num()) * (d / Int(ker.at(i, j).get_den()));
        }
        sat = saturate_columns(igen);
    }
    for (int j = 0; j < sat.cols(); ++j) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int q = 0; q < n; ++q) m.at(i, q) = sat.at(i * n + q, j);
        out.push_back(m);
    }
    return out;
}

// Visit every c in Z^dim with max-norm exactly `height`; stop early when the
// callback returns false.  Deterministic odometer order.
bool visit_shell(int dim, long height, const std::function<bool(const std::vector<long>&)>& fn) {
    std::vector<long> c(static_cast<std::size_t>(dim), -height);
    if (dim == 0) return height == 0 ? fn(c) : true;
    while (true) {
        long mx = 0;
        for (long v : c) mx = std::max(mx, std::labs(v));
        if (mx == height && !fn(c)) return false;
        int i = dim - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == height) {
            c[static_cast<std::size_t>(i)] = -height;
            --i;
        }
        if (i < 0) return true;
        ++c[static_cast<std::size_t>(i)];
    }
}

long effective_height(int dim, long requested, long cap) {
    if (dim == 0) return requested;
    long best = 0;
    for (long b = 1; b <= requested; ++b) {
        double total = 1.0;
        for (int i = 0; i < dim; ++i) {
            total *= static_cast<double>(2 * b + 1);
            if (total > static_cast<double>(cap)) break;
        }
        if (total > static_cast<double>(cap)) break;
        best = b;
    }
    return best;
}

bool coeffs_coprime(const std::vector<long>& c) {
    long g = 0;
    for (long v : c) g = std::gcd(g, std::labs(v));
    return g == 1;
}

IntMat combine(const std::vector<IntMat>& basis, const std::vector<long>& c, int n) {
    IntMat x = IntMat::zero(n, n);
    for (std::size_t l = 0; l < basis.size(); ++l)
        if (c[l] != 0) x = x + basis[l].scaled(Int(c[l]));
    return x;
}

std::vector<RealizedAutomorphism> realized_impl(const CrystGroup& g, long height_bound,
                                                const CocycleSpace* ns) {
    const PointGroup& h = g.holonomy();
    const int n = g.dim();
    std::vector<std::size_t> idperm(h.order());
    for (std::size_t i = 0; i < h.order(); ++i) idperm[i] = i;

    std::vector<RealizedAutomorphism> out;
    for (const std::vector<std::size_t>& perm : automorphism_group(h)) {
        RealizedAutomorphism r;
        r.perm = perm;
        r.searched_height = 0;
        if (perm == idperm) {
            r.realized = true;
            r.witness = IntMat::identity(n);
            if (ns != nullptr && ns->in_normalizer(r.witness)) {
                r.normalizer_witness = true;
                r.normalizer_witness_matrix = r.witness;
            }
            out.push_back(std::move(r));
            continue;
        }
        std::vector<IntMat> amats, bmats;
        for (std::size_t gi : h.generator_indices()) {
            amats.push_back(h.element(gi));
            bmats.push_back(h.element(perm[gi]));
        }
        const std::vector<IntMat> basis = twisted_commutant(amats, bmats, n);
        if (!basis.empty()) {
            const int dim = static_cast<int>(basis.size());
            const long beff = effective_height(dim, height_bound, kCandidateCap);
            r.searched_height = beff;
            auto verify = [&](const IntMat& x) {
                auto xi = inverse_unimodular(x);
                if (!xi) return false;
                for (std::size_t e = 0; e < h.order(); ++e)
                    if (x * h.element(e) * *xi != h.element(perm[e])) return false;
                return true;
            };
            for (long hgt = 1; hgt <= beff; ++hgt) {
                const bool done = !visit_shell(dim, hgt, [&](const std::vector<long>& c) {
                    if (!coeffs_coprime(c)) return true;
                    IntMat x = combine(basis, c, n);
                    Int d = det(x);
                    if (d != 1 && d != -1) return true;
                    if (!verify(x))
                        throw InternalInconsistency("unimodular solution fails conjugation check");
                    if (!r.realized) {
                        r.realized = true;
                        r.witness = x;
                    }
                    if (ns != nullptr && !r.normalizer_witness && ns->in_normalizer(x)) {
                        r.normalizer_witness = true;
                        r.normalizer_witness_matrix = x;
                    }
                    // keep scanning until a normalizer witness shows up (if wanted)
                    return ns != nullptr && !r.normalizer_witness;
                });
                if (done) break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

TranslationNormalizer translation_normalizer_impl(const CrystGroup& g) {
    const PointGroup& h = g.holonomy();
    const int n = g.dim();

    RatMat stacked(0, n);
    for (std::size_t a = 1; a < h.order(); ++a)
        stacked = vstack(stacked, to_rat(h.element(a)) - RatMat::identity(n));
    TranslationNormalizer tn;
    if (stacked.rows() == 0) {
        tn.lattice = IntLattice::zero(n);
        tn.fixed_subspace = RatMat::identity(n);
        tn.quotient = FiniteAbelianGroup{};
        tn.basis_inverse = RatMat::identity(n);
        return tn;
    }
    PreimageLattice pre = preimage_lattice(stacked, IntLattice::standard(stacked.rows()));
    tn.lattice = pre.lattice_part;
    tn.fixed_subspace = pre.kernel;
    const int r = tn.lattice.rank();
    const int df = tn.fixed_subspace.cols();
    if (r + df != n) throw InternalInconsistency("normalizer lattice rank bookkeeping failed");

    RatMat bf = hstack(tn.lattice.basis(), tn.fixed_subspace);
    auto bfi = inverse(bf);
    if (!bfi) throw InternalInconsistency("lattice and fixed subspace do not decompose space");
    tn.basis_inverse = *bfi;

    if (r == 0) {
        tn.quotient = FiniteAbelianGroup{};
        return tn;
    }

    // Integral projection with kernel exactly the fixed subspace.
    IntMat proj;
    const int m = n - df;
    if (df == 0) {
        proj = IntMat::identity(n);
    } else {
        IntMat fgen(n, df);
        for (int j = 0; j < df; ++j) {
            Int d = 1;
            for (int i = 0; i < n; ++i) d = lcm(d, Int(tn.fixed_subspace.at(i, j).get_den()));
            for (int i = 0; i < n; ++i)
                fgen.at(i, j) = Int(tn.fixed_subspace.at(i, j).get_num()) *
                                (d / Int(tn.fixed_subspace.at(i, j).get_den()));
        }
        IntMat fsat = saturate_columns(fgen);
        if (fsat.cols() != df) throw InternalInconsistency("fixed subspace saturation failed");
        SmithResult sf = smith_normal_form(fsat);
        for (int i = 0; i < df; ++i)
            if (sf.d.at(i, i) != 1)
                throw InternalInconsistency("saturated fixed lattice has nontrivial factors");
        proj = IntMat(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) proj.at(i, j) = sf.u.at(df + i, j);
    }

    // Relations among the lattice generators modulo Z^n + fixed subspace:
    // integer t with proj * basis * t = 0 mod Z^m.
    RatMat pb = to_rat(proj) * tn.lattice.basis();
    Int q = denominator_lcm(pb);
    IntMat w(m, r);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j)
            w.at(i, j) = Int(pb.at(i, j).get_num()) * (q / Int(pb.at(i, j).get_den()));
    IntMat rel;
    if (m == 0) {
        rel = IntMat::identity(r);
    } else {
        IntMat aug = hstack(w, IntMat::identity(m).scaled(q));
        IntMat ker = int_kernel(aug);
        IntMat tpart(r, ker.cols());
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < ker.cols(); ++j) tpart.at(i, j) = ker.at(i, j);
        rel = column_lattice_basis(tpart);
    }
    if (rel.rows() != r || rel.cols() != r)
        throw InternalInconsistency("normalizer quotient relations not full rank");
    SmithResult snf = smith_normal_form(rel);
    if (snf.rank != r) throw InternalInconsistency("normalizer quotient not finite");
    tn.snf_u = snf.u;
    tn.snf_diag = snf.diagonal();
    for (int i = 0; i < r; ++i) {
        if (tn.snf_diag[static_cast<std::size_t>(i)] <= 0)
            throw InternalInconsistency("normalizer quotient diagonal not positive");
        if (tn.snf_diag[static_cast<std::size_t>(i)] >= 2) tn.kept.push_back(i);
    }
    tn.quotient = FiniteAbelianGroup::from_relations(tn.snf_diag, r);

    auto uinv = inverse_unimodular(tn.snf_u);
    if (!uinv) throw InternalInconsistency("SNF transform not unimodular");
    for (int pos : tn.kept) {
        RatVec t(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) t[static_cast<std::size_t>(i)] = Rat(uinv->at(i, pos));
        tn.generators.push_back(tn.lattice.basis() * t);
    }
    return tn;
}

}  // namespace

std::vector<Int> TranslationNormalizer::coords(const RatVec& w) const {
    const int r = lattice.rank();
    if (r == 0) return {};
    const RatVec tu = basis_inverse * w;
    IntVec t(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const Rat& v = tu[static_cast<std::size_t>(i)];
        if (v.get_den() != 1)
            throw InternalInconsistency("vector not in the normalizer lattice plus fixed part");
        t[static_cast<std::size_t>(i)] = v.get_num();
    }
    const IntVec y = snf_u * t;
    std::vector<Int> out;
    out.reserve(kept.size());
    for (int pos : kept)
        out.push_back(fmod(y[static_cast<std::size_t>(pos)], snf_diag[static_cast<std::size_t>(pos)]));
    return out;
}

TranslationNormalizer translation_normalizer(const CrystGroup& g) {
    return translation_normalizer_impl(g);
}

CentralizerRing centralizer_ring(const CrystGroup& g) {
    const PointGroup& h = g.holonomy();
    const int n = g.dim();
    std::vector<IntMat> gens;
    for (std::size_t gi : h.generator_indices()) gens.push_back(h.element(gi));
    CentralizerRing ring;
    ring.ambient = n;
    ring.basis = twisted_commutant(gens, gens, n);
    const int dim = ring.rank();
    RatMat flat(n * n, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < n; ++i)
            for (int q = 0; q < n; ++q) flat.at(i * n + q, j) = Rat(ring.basis[static_cast<std::size_t>(j)].at(i, q));
    auto coords_of = [&](const IntMat& x) {
        RatVec v(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int q = 0; q < n; ++q) v[static_cast<std::size_t>(i) * n + q] = Rat(x.at(i, q));
        auto sol = solve(flat, v);
        if (!sol) throw InternalInconsistency("matrix outside the centralizer span");
        IntVec c(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            if ((*sol)[static_cast<std::size_t>(i)].get_den() != 1)
                throw InternalInconsistency("centralizer ring not multiplicatively closed");
            c[static_cast<std::size_t>(i)] = (*sol)[static_cast<std::size_t>(i)].get_num();
        }
        return c;
    };
    ring.identity_coords = coords_of(IntMat::identity(n));
    ring.structure.resize(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        ring.structure[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j)
            ring.structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                coords_of(ring.basis[static_cast<std::size_t>(i)] * ring.basis[static_cast<std::size_t>(j)]);
    }
    return ring;
}

RatMat centralizer_of_group_is_translations(const CrystGroup& g) {
    const PointGroup& h = g.holonomy();
    const int n = g.dim();
    const int nn = n * n;
    // Unknowns: A' = A - I (n^2 entries, row-major), then v (n entries).
    // Lattice translations give A' e_j = 0; each point generator (h, s(h))
    // gives A'h - hA' = 0 and (I - h)v + A' s(h) = 0.
    const std::size_t ngen = h.generator_indices().size();
    RatMat sys(nn + static_cast<int>(ngen) * (nn + n), nn + n);
    int row = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) sys.at(row++, i * n + j) = 1;
    for (std::size_t gi : h.generator_indices()) {
        const IntMat& hm = h.element(gi);
        const RatVec& s = g.vector_system(gi);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                for (int q = 0; q < n; ++q) sys.at(row, i * n + q) += Rat(hm.at(q, j));
                for (int p = 0; p < n; ++p) sys.at(row, p * n + j) -= Rat(hm.at(i, p));
                ++row;
            }
        for (int i = 0; i < n; ++i) {
            for (int q = 0; q < n; ++q) sys.at(row, i * n + q) += s[static_cast<std::size_t>(q)];
            sys.at(row, nn + i) += 1;
            for (int q = 0; q < n; ++q) sys.at(row, nn + q) -= Rat(hm.at(i, q));
            ++row;
        }
    }
    RatMat ker = kernel(sys);
    for (int j = 0; j < ker.cols(); ++j)
        for (int i = 0; i < nn; ++i)
            if (ker.at(i, j) != 0)
                throw LemmaViolation("affine centralizer with nonidentity linear part");
    RatMat fix(n, ker.cols());
    for (int j = 0; j < ker.cols(); ++j)
        for (int i = 0; i < n; ++i) fix.at(i, j) = ker.at(nn + i, j);
    return fix;
}

std::vector<std::vector<std::size_t>> automorphism_group(const PointGroup& h) {
    const std::size_t n = h.order();
    const std::vector<std::size_t>& gidx = h.generator_indices();
    std::vector<std::vector<std::size_t>> cands(gidx.size());
    for (std::size_t gpos = 0; gpos < gidx.size(); ++gpos)
        for (std::size_t e = 0; e < n; ++e)
            if (h.element_order(e) == h.element_order(gidx[gpos])) cands[gpos].push_back(e);

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(gidx.size(), 0);
    const std::size_t kUnset = static_cast<std::size_t>(-1);
    auto try_tuple = [&]() {
        std::vector<std::size_t> img(n, kUnset);
        img[0] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t a = 0; a < n; ++a) {
                if (img[a] == kUnset) continue;
                for (std::size_t gpos = 0; gpos < gidx.size(); ++gpos) {
                    const std::size_t b = h.mul(a, gidx[gpos]);
                    const std::size_t ib = h.mul(img[a], cands[gpos][pick[gpos]]);
                    if (img[b] == kUnset) {
                        img[b] = ib;
                        changed = true;
                    } else if (img[b] != ib) {
                        return;
                    }
                }
            }
        }
        std::vector<bool> seen(n, false);
        for (std::size_t a = 0; a < n; ++a) {
            if (img[a] == kUnset || seen[img[a]]) return;
            seen[img[a]] = true;
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (img[h.mul(a, b)] != h.mul(img[a], img[b])) return;
        out.push_back(img);
    };
    if (gidx.empty()) {
        out.push_back({0});
    } else {
        while (true) {
            try_tuple();
            std::size_t i = gidx.size();
            while (i > 0) {
                --i;
                if (++pick[i] < cands[i].size()) break;
                pick[i] = 0;
                if (i == 0) {
                    std::sort(out.begin(), out.end());
                    return out;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RealizedAutomorphism> realized_automorphisms(const CrystGroup& g, long height_bound) {
    return realized_impl(g, height_bound, nullptr);
}

FiniteKernel mcg_finite_kernel(const CrystGroup& g) {
    const TranslationNormalizer tn = translation_normalizer_impl(g);
    const PointGroup& h = g.holonomy();
    const int n = g.dim();
    FiniteKernel k;
    k.order = tn.quotient.order();
    for (std::size_t j = 0; j < tn.generators.size(); ++j) {
        const RatVec& w = tn.generators[j];
        for (std::size_t e = 0; e < h.order(); ++e) {
            const RatVec moved = (RatMat::identity(n) - to_rat(h.element(e))) * w;
            for (const Rat& x : moved)
                if (x.get_den() != 1)
                    throw InternalInconsistency("finite kernel generator fails to normalize");
        }
        bool nonzero = false;
        for (const Int& c : tn.coords(w)) nonzero = nonzero || c != 0;
        if (!nonzero)
            throw InternalInconsistency("finite kernel generator is trivial in the quotient");
        k.generators.push_back(AffineMap{RatMat::identity(n), w});
    }
    return k;
}

McgSummary mcg_report(const CrystGroup& g, long height_bound) {
    McgSummary s;
    s.height_bound = height_bound;
    s.holonomy_order = Int(static_cast<long>(g.holonomy().order()));
    const CocycleSpace cs(g);
    s.h1 = cs.h1();
    s.own_class = cs.own_class();
    s.tnorm = translation_normalizer_impl(g);
    s.kernel = mcg_finite_kernel(g);
    s.realized = realized_impl(g, height_bound, &cs);
    for (const RealizedAutomorphism& r : s.realized) {
        if (r.realized) ++s.realized_count;
        if (r.normalizer_witness) ++s.normalizer_realized_count;
    }
    bool sign_only = true;
    for (const IntMat& e : g.holonomy().elements())
        sign_only = sign_only && (e.is_identity() || (-e).is_identity());
    s.full_gl_normalizer = sign_only && s.h1.is_trivial();
    s.cring = centralizer_ring(g);

    const int dim = s.cring.rank();
    const long beff = effective_height(dim, height_bound, kCandidateCap);
    s.unit_search_height = beff;
    for (long hgt = 1; hgt <= beff; ++hgt) {
        visit_shell(dim, hgt, [&](const std::vector<long>& c) {
            if (!coeffs_coprime(c)) return true;
            IntMat x = combine(s.cring.basis, c, g.dim());
            Int d = det(x);
            if (d == 1 || d == -1) {
                s.unit_count += 1;
                if (s.unit_witnesses.size() < 16) s.unit_witnesses.push_back(x);
            }
            return true;
        });
    }
    return s;
}

}  // namespace flatmod
