#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatmod/cohomology.hpp"
#include "flatmod/cryst_group.hpp"
#include "flatmod/endo_algebra.hpp"
#include "flatmod/group_io.hpp"
#include "flatmod/isotypic.hpp"
#include "flatmod/mcg.hpp"

namespace flatmod {

// Exact holonomy average of a symmetric positive definite seed; throws NotSPD
// when the seed fails the leading-principal-minor test.  The result is
// invariant: h^T B h = B exactly for every h.
RatMat invariant_inner_product(const CrystGroup& g, const RatMat& seed);

struct ConvexityCheck {
    int pairs_checked = 0;
    int combinations_checked = 0;
};

// Invariance and convexity of the invariant-metric cone under the group
// generated by the holonomy and the given normalizer elements: averages
// seeded SPD pairs and verifies convex combinations stay invariant and SPD.
// Throws NotInNormalizer if an element of f fails the membership test.
ConvexityCheck fixset_convexity_check(const CrystGroup& g, const std::vector<IntMat>& f,
                                      int sample_pairs = 32, std::uint64_t seed = 1,
                                      std::size_t max_order = 2000);

struct TeichFactor {
    Int multiplicity;  // M
    RealType type;
    int field_degree;  // f
    Int dimension;     // f * (M(M+1)/2 | M^2 | 2M^2 - M)
    std::string display;
};

struct TeichDescriptor {
    std::vector<TeichFactor> factors;
    Int dimension;
    std::string display;
};

TeichDescriptor teichmuller_descriptor(const std::vector<IsotypicComponent>& comps);

struct ComponentReport {
    IsotypicComponent component;
    RationalAlgebra algebra;
    CenterField center;
    DivisionDescriptor division;
    std::string order_display;
};

struct ModuliReport {
    std::string name;
    int dimension = 0;
    Int holonomy_order = 1;
    bool bieberbach = false;
    TeichDescriptor teich;
    std::vector<ComponentReport> components;
    FiniteAbelianGroup h1;
    std::vector<Int> h1_class;
    McgSummary mcg;
    std::string shape;
    bool all_fields_rational = true;
    std::vector<std::string> flags;
    std::string orbifold_note;
    std::uint64_t seed = 1;
    long height_bound = 10;
};

struct AnalysisOptions {
    long height_bound = 10;
    std::size_t max_order = 2000;
    std::uint64_t seed = 1;
};

ModuliReport analyze(const CrystGroup& g, const std::string& name, const AnalysisOptions& opt = {});

Json report_to_json(const ModuliReport& r);
std::string report_to_text(const ModuliReport& r);

Json teich_to_json(const TeichDescriptor& t);
Json h1_to_json(const CocycleSpace& cs);
Json mcg_to_json(const McgSummary& s);

}  // namespace flatmod
