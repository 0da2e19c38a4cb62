#include "flatmod/endo_algebra.hpp"

#include <algorithm>
#include <functional>

#include "flatmod/errors.hpp"
#include "flatmod/lattice.hpp"

namespace flatmod {

namespace {

constexpr long kLambdaHeight = 8;
constexpr long kCandidateCap = 300000;

IntMat clear_denominators_columns(const RatMat& m) {
    IntMat out(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        Int d = 1;
        for (int i = 0; i < m.rows(); ++i) d = lcm(d, Int(m.at(i, j).get_den()));
        for (int i = 0; i < m.rows(); ++i)
            out.at(i, j) = Int(m.at(i, j).get_num()) * (d / Int(m.at(i, j).get_den()));
    }
    return out;
}

bool visit_shell(int dim, long height, const std::function<bool(const std::vector<long>&)>& fn) {
    std::vector<long> c(static_cast<std::size_t>(dim), -height);
    if (dim == 0) return true;
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

}  // namespace

RatVec RationalAlgebra::mul(const RatVec& a, const RatVec& b) const {
    RatVec out(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[static_cast<std::size_t>(j)] == 0) continue;
            const Rat c = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            const RatVec& st = structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < dim; ++k) out[static_cast<std::size_t>(k)] += c * st[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

RatMat RationalAlgebra::left_mult(const RatVec& a) const {
    RatMat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        RatVec e(static_cast<std::size_t>(dim));
        e[static_cast<std::size_t>(j)] = 1;
        const RatVec col = mul(a, e);
        for (int i = 0; i < dim; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

RatMat RationalAlgebra::right_mult(const RatVec& a) const {
    RatMat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        RatVec e(static_cast<std::size_t>(dim));
        e[static_cast<std::size_t>(j)] = 1;
        const RatVec col = mul(e, a);
        for (int i = 0; i < dim; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

bool RationalAlgebra::is_zero(const RatVec& a) const {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

RationalAlgebra isotypic_endomorphism_algebra(const CrystGroup& g, const IsotypicComponent& comp) {
    const PointGroup& h = g.holonomy();
    const int n = g.dim();

    // Saturated lattice of the component: Z^n intersected with the image.
    IntMat image = clear_denominators_columns(comp.projector);
    IntMat lat = saturate_columns(image);
    const int r = lat.cols();
    if (r != comp.rank) throw InternalInconsistency("component lattice rank mismatch");
    const RatMat latq = to_rat(lat);

    // Holonomy generators restricted to the component lattice.
    std::vector<IntMat> restricted;
    for (std::size_t gi : h.generator_indices()) {
        auto sol = solve(latq, to_rat(h.element(gi)) * latq);
        if (!sol) throw InternalInconsistency("holonomy does not preserve the component");
        restricted.push_back(to_int(*sol));
    }

    // Full integral commutant of the restricted action.
    IntMat sat;
    if (restricted.empty()) {
        sat = IntMat::identity(r * r);
    } else {
        RatMat sys(static_cast<int>(restricted.size()) * r * r, r * r);
        int row0 = 0;
        for (const IntMat& a : restricted) {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    const int row = row0 + i * r + j;
                    for (int q = 0; q < r; ++q) sys.at(row, i * r + q) += Rat(a.at(q, j));
                    for (int p = 0; p < r; ++p) sys.at(row, p * r + j) -= Rat(a.at(i, p));
                }
            row0 += r * r;
        }
        sat = saturate_columns(clear_denominators_columns(kernel(sys)));
    }

    RationalAlgebra alg;
    alg.ambient = r;
    alg.dim = sat.cols();
    for (int j = 0; j < sat.cols(); ++j) {
        RatMat m(r, r);
        for (int i = 0; i < r; ++i)
            for (int q = 0; q < r; ++q) m.at(i, q) = Rat(sat.at(i * r + q, j));
        alg.matrix_basis.push_back(m);
    }

    RatMat flat(r * r, alg.dim);
    for (int j = 0; j < alg.dim; ++j)
        for (int i = 0; i < r; ++i)
            for (int q = 0; q < r; ++q)
                flat.at(i * r + q, j) = alg.matrix_basis[static_cast<std::size_t>(j)].at(i, q);
    auto coords_of = [&](const RatMat& x) {
        RatVec v(static_cast<std::size_t>(r) * r);
        for (int i = 0; i < r; ++i)
            for (int q = 0; q < r; ++q) v[static_cast<std::size_t>(i) * r + q] = x.at(i, q);
        auto sol = solve(flat, v);
        if (!sol) throw InternalInconsistency("product escapes the endomorphism algebra");
        return *sol;
    };

    alg.identity = coords_of(RatMat::identity(r));
    alg.structure.resize(static_cast<std::size_t>(alg.dim));
    for (int i = 0; i < alg.dim; ++i) {
        alg.structure[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(alg.dim));
        for (int j = 0; j < alg.dim; ++j) {
            const RatVec c = coords_of(alg.matrix_basis[static_cast<std::size_t>(i)] *
                                       alg.matrix_basis[static_cast<std::size_t>(j)]);
            for (const Rat& x : c)
                if (x.get_den() != 1)
                    throw InternalInconsistency("order not multiplicatively closed");
            alg.structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
        }
    }
    alg.order_basis = IntMat::identity(alg.dim);

    // Exact sanity: identity behaves, associativity on all triples.
    for (int j = 0; j < alg.dim; ++j) {
        RatVec e(static_cast<std::size_t>(alg.dim));
        e[static_cast<std::size_t>(j)] = 1;
        if (alg.mul(alg.identity, e) != e || alg.mul(e, alg.identity) != e)
            throw InternalInconsistency("identity does not act as identity");
    }
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j)
            for (int k = 0; k < alg.dim; ++k) {
                RatVec ei(static_cast<std::size_t>(alg.dim)), ej = ei, ek = ei;
                ei[static_cast<std::size_t>(i)] = 1;
                ej[static_cast<std::size_t>(j)] = 1;
                ek[static_cast<std::size_t>(k)] = 1;
                if (alg.mul(alg.mul(ei, ej), ek) != alg.mul(ei, alg.mul(ej, ek)))
                    throw InternalInconsistency("structure constants not associative");
            }
    return alg;
}

namespace {

// Minimal polynomial of an algebra element by power stacking; primitive
// integer coefficients (monic whenever the element is integral).
IntPoly element_min_poly(const RationalAlgebra& alg, const RatVec& z) {
    std::vector<RatVec> powers = {alg.identity};
    while (true) {
        RatMat m(alg.dim, static_cast<int>(powers.size()));
        for (std::size_t j = 0; j < powers.size(); ++j)
            for (int i = 0; i < alg.dim; ++i)
                m.at(i, static_cast<int>(j)) = powers[j][static_cast<std::size_t>(i)];
        const RatVec next = alg.mul(powers.back(), z);
        auto sol = solve(m, next);
        if (sol) {
            std::vector<Rat> coeffs;
            for (std::size_t i = 0; i < powers.size(); ++i)
                coeffs.push_back(-(*sol)[i]);
            coeffs.push_back(Rat(1));
            Int den = 1;
            for (const Rat& c : coeffs) den = lcm(den, Int(c.get_den()));
            std::vector<Int> ic;
            for (const Rat& c : coeffs) ic.push_back(Int(c.get_num()) * (den / Int(c.get_den())));
            return IntPoly(ic).primitive_part();
        }
        powers.push_back(next);
        if (static_cast<int>(powers.size()) > alg.dim + 1)
            throw InternalInconsistency("minimal polynomial search exceeded dimension");
    }
}

}  // namespace

CenterField center_and_field(const RationalAlgebra& e, std::uint64_t seed) {
    // Center: commutes with every basis element.
    RatMat sys(e.dim * e.dim, e.dim);
    for (int j = 0; j < e.dim; ++j) {
        RatVec ej(static_cast<std::size_t>(e.dim));
        ej[static_cast<std::size_t>(j)] = 1;
        const RatMat d = e.left_mult(ej) - e.right_mult(ej);
        for (int rr = 0; rr < e.dim; ++rr)
            for (int cc = 0; cc < e.dim; ++cc) sys.at(j * e.dim + rr, cc) = d.at(rr, cc);
    }
    CenterField cf;
    cf.center_basis = to_rat(saturate_columns(clear_denominators_columns(kernel(sys))));
    const int cdim = cf.center_basis.cols();
    if (cdim < 1) throw InternalInconsistency("center has dimension zero");

    if (cdim == 1) {
        cf.primitive = e.identity;
        cf.min_poly = IntPoly({-1, 1});
        return cf;
    }

    // Candidate primitive elements: center basis vectors, then seeded small
    // random center combinations.
    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        RatVec z(static_cast<std::size_t>(e.dim));
        if (attempt < cdim) {
            for (int i = 0; i < e.dim; ++i) z[static_cast<std::size_t>(i)] = cf.center_basis.at(i, attempt);
        } else {
            const long spread = 1 + attempt / 50;
            RatVec c(static_cast<std::size_t>(cdim));
            for (int l = 0; l < cdim; ++l) c[static_cast<std::size_t>(l)] = Rat(rng.uniform(-spread, spread));
            z = cf.center_basis * c;
        }
        if (e.is_zero(z)) continue;
        const IntPoly mp = element_min_poly(e, z);
        if (mp.degree() != cdim) continue;
        if (squarefree_part(mp) != mp.primitive_part() && squarefree_part(mp) != -mp.primitive_part())
            continue;
        PolyFactorization f = factor_rational_poly(mp, seed);
        if (f.factors.size() != 1 || f.factors[0].multiplicity != 1)
            throw NotAField("center minimal polynomial splits: " + mp.display());
        cf.primitive = z;
        cf.min_poly = f.factors[0].factor;
        return cf;
    }
    throw InternalInconsistency("no primitive element found for the center");
}

std::string division_kind_name(DivisionKind k) {
    switch (k) {
        case DivisionKind::RationalField: return "rational-field";
        case DivisionKind::NumberField: return "number-field";
        case DivisionKind::Quaternion: return "quaternion";
        case DivisionKind::Undetermined: return "undetermined";
    }
    throw InternalInconsistency("bad division kind");
}

namespace {

// Rows whose common kernel is the reduced-trace-zero subspace: for each
// center basis element z, the Q-trace of left multiplication by (x z).
RatMat trace_zero_rows(const RationalAlgebra& e, const RatMat& center) {
    RatMat rows(center.cols(), e.dim);
    for (int l = 0; l < center.cols(); ++l) {
        RatVec z(static_cast<std::size_t>(e.dim));
        for (int i = 0; i < e.dim; ++i) z[static_cast<std::size_t>(i)] = center.at(i, l);
        for (int j = 0; j < e.dim; ++j) {
            RatVec ej(static_cast<std::size_t>(e.dim));
            ej[static_cast<std::size_t>(j)] = 1;
            rows.at(l, j) = e.left_mult(e.mul(ej, z)).trace();
        }
    }
    return rows;
}

struct CentralSquare {
    RatVec square;     // coordinates of x^2 in the algebra
    RatVec in_center;  // coordinates in the center basis
};

// Whether y (a central element, in center-basis coordinates) is negative in
// every real embedding of the center.
bool totally_negative(const RationalAlgebra& e, const CenterField& cf, const RatVec& center_coords) {
    const int cdim = cf.center_basis.cols();
    if (cdim == 1) {
        // center = Q * identity; identification via the identity coordinates
        Rat val = 0;
        RatVec z = cf.center_basis * center_coords;
        // z = val * identity
        for (int i = 0; i < e.dim; ++i) {
            if (e.identity[static_cast<std::size_t>(i)] != 0) {
                val = z[static_cast<std::size_t>(i)] / e.identity[static_cast<std::size_t>(i)];
                break;
            }
        }
        return val < 0;
    }
    // Express the element as a polynomial in the primitive element.
    RatMat powers(e.dim, cdim);
    RatVec p = e.identity;
    for (int k = 0; k < cdim; ++k) {
        for (int i = 0; i < e.dim; ++i) powers.at(i, k) = p[static_cast<std::size_t>(i)];
        p = e.mul(p, cf.primitive);
    }
    auto q = solve(powers, cf.center_basis * center_coords);
    if (!q) throw InternalInconsistency("center element not polynomial in the primitive element");
    Int den = 1;
    for (const Rat& c : *q) den = lcm(den, Int(c.get_den()));
    std::vector<Int> ic;
    for (const Rat& c : *q) ic.push_back(Int(c.get_num()) * (den / Int(c.get_den())));
    const IntPoly qpoly(ic);  // positive multiple: signs at roots unchanged
    if (qpoly.is_zero()) return false;
    const SignCounts sc = sign_counts_at_roots(cf.min_poly, qpoly);
    const int real_roots = count_real_roots(cf.min_poly);
    return sc.negative == real_roots && sc.zero == 0 && sc.positive == 0;
}

}  // namespace

QuaternionData quaternion_basis(const RationalAlgebra& e, const CenterField& cf,
                                std::uint64_t seed) {
    const int cdim = cf.center_basis.cols();
    if (e.dim != 4 * cdim)
        throw NotQuaternion("dimension over the center is " +
                            std::to_string(cdim == 0 ? 0 : e.dim / cdim) + ", not 4");

    // Division check: 200 deterministic inversion attempts.
    Rng rng(seed);
    for (int t = 0; t < 200; ++t) {
        RatVec x(static_cast<std::size_t>(e.dim));
        bool zero = true;
        for (int i = 0; i < e.dim; ++i) {
            x[static_cast<std::size_t>(i)] = Rat(rng.uniform(-9, 9));
            zero = zero && x[static_cast<std::size_t>(i)] == 0;
        }
        if (zero) continue;
        if (!solve(e.left_mult(x), e.identity)) {
            std::string w;
            for (const Rat& c : x) w += (w.empty() ? "" : ",") + to_string(c);
            throw ZeroDivisorFound("non-invertible element with coordinates (" + w + ")");
        }
    }

    const RatMat trows = trace_zero_rows(e, cf.center_basis);

    // lambda1: trace-zero with totally negative central square, smallest
    // squarefree core over rational centers, earliest shell otherwise.
    auto rational_value = [&](const RatVec& center_coords) {
        RatVec z = cf.center_basis * center_coords;
        for (int i = 0; i < e.dim; ++i)
            if (e.identity[static_cast<std::size_t>(i)] != 0)
                return Rat(z[static_cast<std::size_t>(i)] / e.identity[static_cast<std::size_t>(i)]);
        throw InternalInconsistency("identity coordinates all zero");
    };

    auto search_lambda = [&](const RatMat& space_rows) {
        const IntMat basis = saturate_columns(clear_denominators_columns(kernel(space_rows)));
        const int sdim = basis.cols();
        bool found = false;
        RatVec best;
        Int best_core = 0;
        Rat best_scale = 1;
        const long beff = effective_height(sdim, kLambdaHeight, kCandidateCap);
        for (long hgt = 1; hgt <= beff && !(found && (cdim > 1 || best_core == 1)); ++hgt) {
            visit_shell(sdim, hgt, [&](const std::vector<long>& c) {
                if (!coeffs_coprime(c)) return true;
                RatVec x(static_cast<std::size_t>(e.dim));
                for (int l = 0; l < sdim; ++l)
                    if (c[static_cast<std::size_t>(l)] != 0)
                        for (int i = 0; i < e.dim; ++i)
                            x[static_cast<std::size_t>(i)] += Rat(Int(c[static_cast<std::size_t>(l)]) * basis.at(i, l));
                const RatVec sq = e.mul(x, x);
                auto yopt = solve(cf.center_basis, sq);
                if (!yopt) throw NotQuaternion("trace-zero element with non-central square");
                if (!totally_negative(e, cf, *yopt)) return true;
                if (cdim == 1) {
                    const Rat a = rational_value(*yopt);  // a < 0
                    const Int pq = Int(-a.get_num()) * Int(a.get_den());
                    auto [core, sqpart] = squarefree_decomposition(pq);
                    if (!found || core < best_core) {
                        found = true;
                        best = x;
                        best_core = core;
                        best_scale = Rat(Int(a.get_den())) / Rat(sqpart);
                        return !(abs(best_core) == 1);  // cannot improve on ±1
                    }
                } else if (!found) {
                    found = true;
                    best = x;
                    best_scale = 1;
                    return false;
                }
                return true;
            });
        }
        if (!found)
            throw NotQuaternion("no trace-zero element with totally negative square under the bound");
        RatVec out(static_cast<std::size_t>(e.dim));
        for (int i = 0; i < e.dim; ++i) out[static_cast<std::size_t>(i)] = best[static_cast<std::size_t>(i)] * best_scale;
        return out;
    };

    QuaternionData q;
    q.rational_center = cdim == 1;
    q.lambda1 = search_lambda(trows);
    q.a_coords = e.mul(q.lambda1, q.lambda1);

    // lambda2: additionally anticommutes with lambda1.
    RatMat anti = e.left_mult(q.lambda1) + e.right_mult(q.lambda1);
    q.lambda2 = search_lambda(vstack(trows, anti));
    q.b_coords = e.mul(q.lambda2, q.lambda2);
    q.lambda3 = e.mul(q.lambda1, q.lambda2);

    // Exact relation checks.
    RatVec anticheck = e.mul(q.lambda1, q.lambda2);
    RatVec other = e.mul(q.lambda2, q.lambda1);
    for (int i = 0; i < e.dim; ++i)
        if (anticheck[static_cast<std::size_t>(i)] + other[static_cast<std::size_t>(i)] != 0)
            throw InternalInconsistency("quaternion basis fails anticommutation");
    if (e.is_zero(q.lambda3)) throw InternalInconsistency("degenerate quaternion product");
    if (!solve(cf.center_basis, q.a_coords) || !solve(cf.center_basis, q.b_coords))
        throw InternalInconsistency("quaternion parameters not central");
    if (q.rational_center) {
        q.a_rational = rational_value(*solve(cf.center_basis, q.a_coords));
        q.b_rational = rational_value(*solve(cf.center_basis, q.b_coords));
        if (q.a_rational >= 0 || q.b_rational >= 0)
            throw InternalInconsistency("quaternion parameters not negative");
        if (q.a_rational.get_den() != 1 || q.b_rational.get_den() != 1)
            throw InternalInconsistency("normalized quaternion parameters not integral");
    }
    return q;
}

DivisionDescriptor division_structure(const RationalAlgebra& e, const Int& mult,
                                      const CenterField& cf, std::uint64_t seed) {
    DivisionDescriptor d;
    d.center_min_poly = cf.min_poly;
    d.center_degree = cf.min_poly.degree();
    d.matrix_size = mult;
    const Int cdeg(d.center_degree);
    if (Int(e.dim) == mult * mult * cdeg) {
        d.kind = d.center_degree == 1 ? DivisionKind::RationalField : DivisionKind::NumberField;
        return d;
    }
    if (mult == 1) {
        if (Int(e.dim) % cdeg != 0) {
            d.kind = DivisionKind::Undetermined;
            d.note = "dimension " + std::to_string(e.dim) + " not a multiple of center degree " +
                     std::to_string(d.center_degree);
            return d;
        }
        const Int over_center = Int(e.dim) / cdeg;
        if (over_center == 1) {
            d.kind = d.center_degree == 1 ? DivisionKind::RationalField : DivisionKind::NumberField;
            return d;
        }
        if (over_center == 4) {
            d.kind = DivisionKind::Quaternion;
            d.quat = quaternion_basis(e, cf, seed);
            return d;
        }
        d.kind = DivisionKind::Undetermined;
        d.note = "division algebra of dimension " + to_string(over_center) +
                 " over its center is outside the covered cases";
        return d;
    }
    d.kind = DivisionKind::Undetermined;
    d.note = "dim=" + std::to_string(e.dim) + ", multiplicity=" + to_string(mult) +
             ", center degree=" + std::to_string(d.center_degree) +
             ": noncommutative division part with multiplicity > 1";
    return d;
}

}  // namespace flatmod
