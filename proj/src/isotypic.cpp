#include "flatmod/isotypic.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "flatmod/cyclotomic.hpp"
#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

// Class-sum matrices of the natural integral action of the holonomy.
std::vector<RatMat> natural_class_sums(const PointGroup& h) {
    std::vector<RatMat> sums;
    sums.reserve(h.conjugacy_classes().size());
    for (const auto& cls : h.conjugacy_classes()) {
        IntMat acc = IntMat::zero(h.dim(), h.dim());
        for (std::size_t idx : cls) acc = acc + h.element(idx);
        sums.push_back(to_rat(acc));
    }
    return sums;
}

// Multiplicative closure in (Z/e)^* of the given unit residues.
std::vector<long> unit_subgroup(long e, std::vector<long> gens) {
    std::vector<long> elems = {1 % e};
    bool grew = true;
    while (grew) {
        grew = false;
        for (long g : gens)
            for (std::size_t i = 0; i < elems.size(); ++i) {
                long prod = (elems[i] * g) % e;
                if (std::find(elems.begin(), elems.end(), prod) == elems.end()) {
                    elems.push_back(prod);
                    grew = true;
                }
            }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

// Deterministic sequence of small coefficient vectors (c_1..c_{len}) used to
// pick the element theta = sum c_i z^i whose period generates the fixed
// field: height shells, lexicographic within a shell.
std::vector<std::vector<long>> coefficient_shells(int len, long height) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(static_cast<std::size_t>(len), -height);
    if (len == 0) return out;
    while (true) {
        long mx = 0;
        for (long v : cur) mx = std::max(mx, std::abs(v));
        if (mx == height) out.push_back(cur);
        int i = len - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == height) {
            cur[static_cast<std::size_t>(i)] = -height;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

// Monic minimal polynomial over Q of a primitive element of the degree-f
// subfield of Q(zeta_e) fixed by the unit subgroup S.  Found as the minimal
// polynomial of a period sum_{k in S} sigma_k(theta) for deterministically
// enumerated small theta.
IntPoly fixed_field_min_poly(const CycRing& ring, const std::vector<long>& subgroup, int f) {
    if (f == 1) return IntPoly({-1, 1});
    const int len = ring.degree() - 1;
    {
        // classical period of the root itself, tried before any other element
        CycRing::Elt period = ring.zero();
        for (long k : subgroup) period = ring.add(period, ring.galois(ring.root_power(1), k));
        IntPoly mp = ring.min_poly(period);
        if (mp.degree() == f) return mp;
    }
    for (long height = 1; height <= 8; ++height) {
        for (const auto& coeffs : coefficient_shells(len, height)) {
            CycRing::Elt theta = ring.zero();
            for (int i = 0; i < len; ++i)
                theta = ring.add(theta, ring.scale(ring.root_power(i + 1), Int(coeffs[i])));
            CycRing::Elt period = ring.zero();
            for (long k : subgroup) period = ring.add(period, ring.galois(theta, k));
            IntPoly mp = ring.min_poly(period);
            if (mp.degree() == f) return mp;
        }
    }
    throw InternalInconsistency("no primitive element found for fixed field");
}

IntVec flatten_row(const CharacterTable& t, std::size_t i) {
    IntVec flat;
    for (std::size_t k = 0; k < t.num_classes(); ++k)
        for (const Int& c : t.value(i, k)) flat.push_back(c);
    return flat;
}

bool component_before(const IsotypicComponent& a, const IsotypicComponent& b,
                      const IntVec& fa, const IntVec& fb) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.f != b.f) return a.f < b.f;
    return fa < fb;
}

}  // namespace

std::string real_type_name(RealType t) {
    switch (t) {
        case RealType::R: return "R";
        case RealType::C: return "C";
        case RealType::H: return "H";
    }
    throw InternalInconsistency("bad real type");
}

RealIsotypicData real_isotypic_data(const IsotypicComponent& c) {
    return {c.real_multiplicity, c.type, c.real_component_count};
}

std::vector<IsotypicComponent> rational_isotypic_decomposition(const CrystGroup& g,
                                                               const CharacterTable& t) {
    const PointGroup& h = g.holonomy();
    const int n = g.dim();
    const Int order(static_cast<long>(h.order()));
    const long e = t.ring().conductor();
    const std::vector<long> units = t.ring().units();
    const std::vector<RatMat> csums = natural_class_sums(h);

    std::vector<IsotypicComponent> comps;
    std::vector<IntVec> sort_keys;
    RatMat total = RatMat::zero(n, n);

    for (std::size_t o = 0; o < t.galois_orbits().size(); ++o) {
        const std::vector<std::size_t>& orbit = t.galois_orbits()[o];
        const std::size_t rep = orbit.front();
        const Int m = t.natural_multiplicity(rep);
        for (std::size_t i : orbit)
            if (t.natural_multiplicity(i) != m)
                throw InternalInconsistency("conjugate characters with unequal multiplicity");

        // Rational central idempotent summed over the Galois orbit:
        // (d/|H|) * sum_k trace-sum(k^-1) * classsum_k.
        const Int d = t.degree(rep);
        RatMat proj = RatMat::zero(n, n);
        for (std::size_t k = 0; k < t.num_classes(); ++k) {
            CycRing::Elt acc = t.ring().zero();
            for (std::size_t i : orbit)
                acc = t.ring().add(acc, t.value(i, t.inverse_class(k)));
            if (!t.ring().is_rational(acc))
                throw InternalInconsistency("orbit-summed character value not rational");
            const Int tk = t.ring().rational_value(acc);
            if (tk != 0) proj = proj + csums[k].scaled(Rat(tk));
        }
        proj = proj.scaled(Rat(d) / Rat(order));

        if (proj * proj != proj) throw InternalInconsistency("projector not idempotent");
        for (std::size_t gi : h.generator_indices()) {
            const RatMat a = to_rat(h.element(gi));
            if (a * proj != proj * a) throw InternalInconsistency("projector not equivariant");
        }

        if (m == 0) {
            if (!proj.is_zero())
                throw InternalInconsistency("zero multiplicity with nonzero projector");
            continue;
        }
        total = total + proj;

        IsotypicComponent c;
        c.projector = proj;
        c.degree = d;
        c.m = m;
        c.rep_char = rep;
        c.orbit = o;

        const int ind = t.indicator(rep);
        c.type = ind == 1 ? RealType::R : ind == 0 ? RealType::C : RealType::H;
        c.schur_flag = ind == -1 ? "suspect" : "assumed";

        if (c.type == RealType::H) {
            if (m % 2 != 0)
                throw OddQuaternionMultiplicity(
                    "quaternionic character with odd multiplicity in the lattice action");
            c.real_multiplicity = m / 2;
        } else {
            c.real_multiplicity = m;
        }

        // Stabilizer of the character values inside (Z/e)^*, then adjoin
        // complex conjugation to cut out K = Q(chi) intersect R.
        std::vector<long> stab;
        for (long k : units)
            if (t.galois_permute(rep, k) == rep) stab.push_back(k);
        if (units.size() != stab.size() * orbit.size())
            throw InternalInconsistency("orbit size vs stabilizer mismatch");
        std::vector<long> sub;
        if (e == 1) {
            sub = {0};
        } else {
            std::vector<long> gens = stab;
            gens.push_back(e - 1);  // complex conjugation
            sub = unit_subgroup(e, gens);
        }
        c.f = static_cast<int>(units.size() / sub.size());
        c.real_component_count = c.f;
        c.field_min_poly = fixed_field_min_poly(t.ring(), sub, c.f);

        const Int expected_rank = m * d * Int(c.f) * (c.type == RealType::C ? 2 : 1);
        c.rank = rank(proj);
        if (Int(c.rank) != expected_rank)
            throw InternalInconsistency("projector rank does not match multiplicity data");

        comps.push_back(std::move(c));
        sort_keys.push_back(flatten_row(t, rep));
    }

    if (!total.is_identity()) throw InternalInconsistency("isotypic projectors do not sum to 1");
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            if (!(comps[i].projector * comps[j].projector).is_zero())
                throw InternalInconsistency("isotypic projectors not orthogonal");

    Int dim_check = 0;
    for (const IsotypicComponent& c : comps) {
        const Int real_dim = c.degree * (c.type == RealType::R ? 1 : 2);
        dim_check += Int(c.f) * c.real_multiplicity * real_dim;
    }
    if (dim_check != Int(n))
        throw InternalInconsistency("real multiplicities do not account for the dimension");

    std::vector<std::size_t> idx(comps.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return component_before(comps[a], comps[b], sort_keys[a], sort_keys[b]);
    });
    std::vector<IsotypicComponent> out;
    out.reserve(comps.size());
    for (std::size_t i : idx) out.push_back(std::move(comps[i]));
    return out;
}

}  // namespace flatmod
