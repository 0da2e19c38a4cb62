#include "flatmod/report.hpp"

#include <algorithm>
#include <sstream>

#include "flatmod/character.hpp"
#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

// Exact symmetric positive definiteness via leading principal minors.
bool is_spd(const RatMat& b) {
    if (!b.is_square()) return false;
    const int n = b.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (b.at(i, j) != b.at(j, i)) return false;
    for (int k = 1; k <= n; ++k) {
        RatMat sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = b.at(i, j);
        if (det(sub) <= 0) return false;
    }
    return true;
}

RatMat average_over(const PointGroup& h, const RatMat& s) {
    const int n = s.rows();
    RatMat sum = RatMat::zero(n, n);
    for (std::size_t i = 0; i < h.order(); ++i) {
        RatMat r = to_rat(h.element(i));
        sum = sum + r.transpose() * s * r;
    }
    return sum.scaled(Rat(1) / Rat(Int(h.order())));
}

bool invariant_under(const RatMat& b, const IntMat& x) {
    RatMat r = to_rat(x);
    return (r.transpose() * b * r - b).is_zero();
}

std::string field_symbol(RealType t) {
    switch (t) {
        case RealType::R: return "R";
        case RealType::C: return "C";
        default: return "H";
    }
}

std::string compact_symbol(RealType t, const Int& m) {
    std::string ms = to_string(m);
    switch (t) {
        case RealType::R: return "O(" + ms + ")";
        case RealType::C: return "U(" + ms + ")";
        default: return "Sp(" + ms + ")";
    }
}

Int factor_dimension(RealType t, const Int& m) {
    switch (t) {
        case RealType::R: return m * (m + 1) / 2;
        case RealType::C: return m * m;
        default: return 2 * m * m - m;
    }
}

std::string order_display_of(const RationalAlgebra& alg, const DivisionDescriptor& dv) {
    switch (dv.kind) {
        case DivisionKind::RationalField:
            return "Z";
        case DivisionKind::NumberField:
            return "Z[t]/(" + dv.center_min_poly.display("t") + ")";
        case DivisionKind::Quaternion: {
            std::string s = "quaternion order";
            if (dv.quat.rational_center) {
                s += ", a=" + to_string(dv.quat.a_rational) + ", b=" + to_string(dv.quat.b_rational) +
                     ", over Z";
            } else {
                s += " over Z[t]/(" + dv.center_min_poly.display("t") + ")";
            }
            return s;
        }
        default:
            return "order of rank " + std::to_string(alg.dim);
    }
}

Json json_int(const Int& v) { return Json(to_long(v)); }

Json json_ivec(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(to_long(x));
    return a;
}

Json json_int_mat(const IntMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_long(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json json_rat_vec(const RatVec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(to_string(x));
    return a;
}

Json json_affine(const AffineMap& m) {
    Json j;
    j["linear"] = json_int_mat(to_int(m.linear));
    j["translation"] = json_rat_vec(m.translation);
    return j;
}

std::string kind_label(DivisionKind k) { return division_kind_name(k); }

}  // namespace

RatMat invariant_inner_product(const CrystGroup& g, const RatMat& seed) {
    const int n = g.dim();
    if (!seed.is_square() || seed.rows() != n)
        throw DimensionMismatch("inner product seed has wrong shape");
    if (!is_spd(seed)) throw NotSPD("seed matrix is not symmetric positive definite");
    RatMat b = average_over(g.holonomy(), seed);
    if (!is_spd(b)) throw InternalInconsistency("holonomy average lost positive definiteness");
    for (std::size_t i = 0; i < g.holonomy().order(); ++i)
        if (!invariant_under(b, g.holonomy().element(i)))
            throw InternalInconsistency("holonomy average is not invariant");
    return b;
}

ConvexityCheck fixset_convexity_check(const CrystGroup& g, const std::vector<IntMat>& f,
                                      int sample_pairs, std::uint64_t seed,
                                      std::size_t max_order) {
    const int n = g.dim();
    CocycleSpace cs(g);
    for (const IntMat& x : f) {
        if (!x.is_square() || x.rows() != n)
            throw DimensionMismatch("fixed-set element has wrong shape");
        if (!cs.in_normalizer(x))
            throw NotInNormalizer("matrix is not in the affine normalizer image");
    }
    std::vector<IntMat> gens;
    for (std::size_t idx : g.holonomy().generator_indices())
        gens.push_back(g.holonomy().element(idx));
    for (const IntMat& x : f) gens.push_back(x);
    if (gens.empty()) gens.push_back(IntMat::identity(n));
    PointGroup closure = PointGroup::generate(gens, max_order);

    auto double_average = [&](const RatMat& s) {
        return average_over(closure, average_over(g.holonomy(), s));
    };
    auto random_spd = [&](Rng& rng) {
        IntMat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = Int(rng.uniform(-3, 3));
        RatMat ra = to_rat(a);
        return ra.transpose() * ra + RatMat::identity(n);
    };

    Rng rng(seed);
    const std::vector<Rat> knots = {Rat(0), Rat(1) / 4, Rat(1) / 2, Rat(3) / 4, Rat(1)};
    ConvexityCheck out;
    for (int p = 0; p < sample_pairs; ++p) {
        RatMat b1 = double_average(random_spd(rng));
        RatMat b2 = double_average(random_spd(rng));
        for (const Rat& t : knots) {
            RatMat c = b1.scaled(Rat(1) - t) + b2.scaled(t);
            if (!is_spd(c))
                throw InternalInconsistency("convex combination of invariant metrics is not SPD");
            for (std::size_t i = 0; i < closure.order(); ++i)
                if (!invariant_under(c, closure.element(i)))
                    throw InternalInconsistency("convex combination lost group invariance");
            for (const IntMat& x : f)
                if (!invariant_under(c, x))
                    throw InternalInconsistency("convex combination lost fixed-set invariance");
            ++out.combinations_checked;
        }
        ++out.pairs_checked;
    }
    return out;
}

TeichDescriptor teichmuller_descriptor(const std::vector<IsotypicComponent>& comps) {
    TeichDescriptor d;
    d.dimension = 0;
    std::vector<std::string> parts;
    for (const IsotypicComponent& c : comps) {
        TeichFactor fac;
        fac.multiplicity = c.real_multiplicity;
        fac.type = c.type;
        fac.field_degree = c.f;
        fac.dimension = Int(c.f) * factor_dimension(c.type, c.real_multiplicity);
        std::string base = "GL_" + to_string(c.real_multiplicity) + "(" + field_symbol(c.type) +
                           ")/" + compact_symbol(c.type, c.real_multiplicity);
        fac.display = c.f > 1 ? "(" + base + ")^" + std::to_string(c.f) : base;
        d.dimension += fac.dimension;
        parts.push_back(fac.display);
        d.factors.push_back(std::move(fac));
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << " x ";
        os << parts[i];
    }
    d.display = os.str();
    return d;
}

ModuliReport analyze(const CrystGroup& g, const std::string& name, const AnalysisOptions& opt) {
    ModuliReport r;
    r.name = name;
    r.dimension = g.dim();
    r.holonomy_order = Int(g.holonomy().order());
    r.bieberbach = g.is_bieberbach();
    r.seed = opt.seed;
    r.height_bound = opt.height_bound;

    CharacterTable table(g.holonomy());
    std::vector<IsotypicComponent> comps = rational_isotypic_decomposition(g, table);
    r.teich = teichmuller_descriptor(comps);

    r.all_fields_rational = true;
    for (const IsotypicComponent& c : comps) {
        ComponentReport cr;
        cr.component = c;
        cr.algebra = isotypic_endomorphism_algebra(g, c);
        cr.center = center_and_field(cr.algebra, opt.seed);
        cr.division = division_structure(cr.algebra, c.real_multiplicity, cr.center, opt.seed);
        cr.order_display = order_display_of(cr.algebra, cr.division);
        if (c.f > 1) r.all_fields_rational = false;
        r.components.push_back(std::move(cr));
    }

    CocycleSpace cs(g);
    r.h1 = cs.h1();
    r.h1_class = cs.own_class();
    r.mcg = mcg_report(g, opt.height_bound);

    std::vector<std::string> parts;
    for (const ComponentReport& cr : r.components) {
        const IsotypicComponent& c = cr.component;
        std::string ms = to_string(c.real_multiplicity);
        std::string middle = "GL_" + ms + "(" + field_symbol(c.type) + ")";
        if (c.f > 1) middle = "(" + middle + ")^" + std::to_string(c.f);
        parts.push_back(compact_symbol(c.type, c.real_multiplicity) + "\\" + middle + "/GL_" + ms +
                        "(" + cr.order_display + ")");
    }
    std::ostringstream shape;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) shape << " x ";
        shape << parts[i];
    }
    r.shape = shape.str();

    bool any_suspect = false;
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        if (r.components[i].component.schur_flag == "suspect") {
            any_suspect = true;
            r.flags.push_back("component " + std::to_string(i) + ": schur flag suspect");
        }
    }
    if (!any_suspect) r.flags.push_back("all component schur flags assumed");
    r.orbifold_note =
        "the moduli space is a very good orbifold: it is finitely covered by a manifold";
    return r;
}

Json teich_to_json(const TeichDescriptor& t) {
    Json j;
    j["dimension"] = json_int(t.dimension);
    j["display"] = t.display;
    Json facs = Json::array();
    for (const TeichFactor& f : t.factors) {
        Json fj;
        fj["multiplicity"] = json_int(f.multiplicity);
        fj["type"] = real_type_name(f.type);
        fj["field_degree"] = f.field_degree;
        fj["dimension"] = json_int(f.dimension);
        fj["display"] = f.display;
        facs.push_back(fj);
    }
    j["factors"] = facs;
    return j;
}

Json h1_to_json(const CocycleSpace& cs) {
    Json j;
    j["modulus"] = static_cast<long long>(cs.modulus());
    j["group"] = cs.h1().display();
    j["invariant_factors"] = json_ivec(cs.invariant_factors());
    std::vector<Int> cls = cs.own_class();
    j["class"] = json_ivec(cls);
    bool trivial = true;
    for (const Int& c : cls)
        if (c != 0) trivial = false;
    j["class_trivial"] = trivial;
    return j;
}

Json mcg_to_json(const McgSummary& s) {
    Json j;
    j["holonomy_order"] = json_int(s.holonomy_order);
    j["h1_group"] = s.h1.display();
    j["h1_class"] = json_ivec(s.own_class);
    j["translation_quotient"] = s.tnorm.quotient.display();
    j["finite_kernel_order"] = json_int(s.kernel.order);
    Json kgens = Json::array();
    for (const AffineMap& m : s.kernel.generators) kgens.push_back(json_affine(m));
    j["finite_kernel_generators"] = kgens;
    j["automorphism_count"] = static_cast<long long>(s.realized.size());
    j["realized_count"] = static_cast<long long>(s.realized_count);
    j["normalizer_realized_count"] = static_cast<long long>(s.normalizer_realized_count);
    j["full_gl_normalizer"] = s.full_gl_normalizer;
    Json auts = Json::array();
    for (const RealizedAutomorphism& a : s.realized) {
        Json aj;
        aj["realized"] = a.realized;
        if (a.realized) aj["witness"] = json_int_mat(a.witness);
        aj["normalizer_witness"] = a.normalizer_witness;
        aj["searched_height"] = static_cast<long long>(a.searched_height);
        auts.push_back(aj);
    }
    j["automorphisms"] = auts;
    j["centralizer_rank"] = s.cring.rank();
    j["unit_count"] = json_int(s.unit_count);
    j["unit_search_height"] = static_cast<long long>(s.unit_search_height);
    j["height_bound"] = static_cast<long long>(s.height_bound);
    return j;
}

Json report_to_json(const ModuliReport& r) {
    Json j;
    j["name"] = r.name;
    j["dimension"] = r.dimension;
    j["holonomy_order"] = json_int(r.holonomy_order);
    j["bieberbach"] = r.bieberbach;
    j["teichmueller"] = teich_to_json(r.teich);

    Json comps = Json::array();
    for (const ComponentReport& cr : r.components) {
        const IsotypicComponent& c = cr.component;
        Json cj;
        cj["degree"] = json_int(c.degree);
        cj["complex_multiplicity"] = json_int(c.m);
        cj["real_multiplicity"] = json_int(c.real_multiplicity);
        cj["type"] = real_type_name(c.type);
        cj["field_degree"] = c.f;
        cj["field_min_poly"] = c.field_min_poly.display("t");
        cj["rank"] = c.rank;
        cj["schur_flag"] = c.schur_flag;
        Json aj;
        aj["dimension"] = cr.algebra.dim;
        aj["center_degree"] = cr.division.center_degree;
        aj["center_min_poly"] = cr.division.center_min_poly.display("t");
        aj["kind"] = kind_label(cr.division.kind);
        aj["order"] = cr.order_display;
        if (cr.division.kind == DivisionKind::Quaternion) {
            Json qj;
            qj["rational_center"] = cr.division.quat.rational_center;
            if (cr.division.quat.rational_center) {
                qj["a"] = to_string(cr.division.quat.a_rational);
                qj["b"] = to_string(cr.division.quat.b_rational);
            } else {
                qj["a_coords"] = json_rat_vec(cr.division.quat.a_coords);
                qj["b_coords"] = json_rat_vec(cr.division.quat.b_coords);
            }
            aj["quaternion"] = qj;
        }
        if (!cr.division.note.empty()) aj["note"] = cr.division.note;
        cj["algebra"] = aj;
        comps.push_back(cj);
    }
    j["components"] = comps;

    Json h1j;
    h1j["group"] = r.h1.display();
    h1j["invariant_factors"] = json_ivec(r.h1.invariant_factors);
    h1j["class"] = json_ivec(r.h1_class);
    bool trivial = true;
    for (const Int& c : r.h1_class)
        if (c != 0) trivial = false;
    h1j["class_trivial"] = trivial;
    j["h1"] = h1j;

    j["mcg"] = mcg_to_json(r.mcg);

    Json mj;
    mj["shape"] = r.shape;
    mj["all_fields_rational"] = r.all_fields_rational;
    Json flags = Json::array();
    for (const std::string& f : r.flags) flags.push_back(f);
    mj["flags"] = flags;
    mj["orbifold_note"] = r.orbifold_note;
    j["moduli"] = mj;

    Json oj;
    oj["seed"] = static_cast<long long>(r.seed);
    oj["height_bound"] = static_cast<long long>(r.height_bound);
    j["options"] = oj;
    return j;
}

std::string report_to_text(const ModuliReport& r) {
    std::ostringstream os;
    os << "group " << r.name << ": dimension " << r.dimension << ", holonomy order "
       << to_string(r.holonomy_order) << ", bieberbach: " << (r.bieberbach ? "yes" : "no") << "\n";
    os << "teichmuller space: " << r.teich.display << "  (dimension "
       << to_string(r.teich.dimension) << ")\n";
    os << "components:\n";
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const ComponentReport& cr = r.components[i];
        const IsotypicComponent& c = cr.component;
        os << "  [" << i << "] degree " << to_string(c.degree) << ", type "
           << real_type_name(c.type) << ", M=" << to_string(c.real_multiplicity)
           << ", f=" << c.f << ", field min poly " << c.field_min_poly.display("t")
           << ", schur " << c.schur_flag << "\n";
        os << "      algebra: dim " << cr.algebra.dim << ", kind " << kind_label(cr.division.kind)
           << ", center Z[t]/(" << cr.division.center_min_poly.display("t") << "), order "
           << cr.order_display << "\n";
        if (cr.division.kind == DivisionKind::Quaternion && cr.division.quat.rational_center) {
            os << "      quaternion parameters: a=" << to_string(cr.division.quat.a_rational)
               << ", b=" << to_string(cr.division.quat.b_rational) << "\n";
        }
    }
    os << "h1: " << r.h1.display() << ", class [";
    for (std::size_t i = 0; i < r.h1_class.size(); ++i) {
        if (i) os << ", ";
        os << to_string(r.h1_class[i]);
    }
    bool trivial = true;
    for (const Int& c : r.h1_class)
        if (c != 0) trivial = false;
    os << "] (" << (trivial ? "trivial" : "nontrivial") << ")\n";
    os << "mcg: finite kernel order " << to_string(r.mcg.kernel.order) << ", automorphisms "
       << r.mcg.realized_count << "/" << r.mcg.realized.size() << " realized ("
       << r.mcg.normalizer_realized_count << " with normalizer witness), centralizer rank "
       << r.mcg.cring.rank() << ", units found " << to_string(r.mcg.unit_count)
       << " at height " << r.mcg.unit_search_height << "\n";
    os << "moduli shape: " << r.shape << "\n";
    os << "flags:";
    for (const std::string& f : r.flags) os << " " << f << ";";
    os << "\n";
    os << "note: " << r.orbifold_note << "\n";
    return os.str();
}

}  // namespace flatmod
