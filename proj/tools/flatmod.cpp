#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatmod/character.hpp"
#include "flatmod/cohomology.hpp"
#include "flatmod/cryst_group.hpp"
#include "flatmod/errors.hpp"
#include "flatmod/group_io.hpp"
#include "flatmod/isotypic.hpp"
#include "flatmod/mcg.hpp"
#include "flatmod/report.hpp"

namespace {

struct Options {
    std::string catalog = flatmod::default_catalog_root();
    long height_bound = 10;
    std::size_t max_order = 2000;
    std::uint64_t seed = 1;
};

struct Loaded {
    std::string name;
    flatmod::CrystGroup group;
};

Loaded load(const std::string& target, const Options& opt) {
    flatmod::GroupSpec spec = flatmod::load_group(target, opt.catalog);
    std::string name = spec.name.empty() ? target : spec.name;
    return Loaded{name, flatmod::CrystGroup::from_affine_generators(spec.generators, opt.max_order)};
}

flatmod::AnalysisOptions analysis_options(const Options& opt) {
    flatmod::AnalysisOptions a;
    a.height_bound = opt.height_bound;
    a.max_order = opt.max_order;
    a.seed = opt.seed;
    return a;
}

void print_json(const flatmod::Json& j) { std::cout << j.dump(2) << "\n"; }

int run_report(const std::string& target, const Options& opt, bool as_text) {
    Loaded l = load(target, opt);
    flatmod::ModuliReport r = flatmod::analyze(l.group, l.name, analysis_options(opt));
    if (as_text)
        std::cout << flatmod::report_to_text(r);
    else
        print_json(flatmod::report_to_json(r));
    return 0;
}

int run_batch(const std::string& dir, const Options& opt) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw flatmod::InputError("not a directory: " + dir);
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    flatmod::Json arr = flatmod::Json::array();
    for (const std::string& path : files) {
        flatmod::GroupSpec spec = flatmod::load_group_file(path);
        std::string name = spec.name.empty() ? fs::path(path).stem().string() : spec.name;
        flatmod::CrystGroup g =
            flatmod::CrystGroup::from_affine_generators(spec.generators, opt.max_order);
        arr.push_back(flatmod::report_to_json(flatmod::analyze(g, name, analysis_options(opt))));
    }
    print_json(arr);
    return 0;
}

int run_teich(const std::string& target, const Options& opt) {
    Loaded l = load(target, opt);
    flatmod::CharacterTable table(l.group.holonomy());
    auto comps = flatmod::rational_isotypic_decomposition(l.group, table);
    flatmod::TeichDescriptor d = flatmod::teichmuller_descriptor(comps);
    flatmod::Json out;
    out["name"] = l.name;
    out["teichmueller"] = flatmod::teich_to_json(d);
    print_json(out);
    return 0;
}

int run_h1(const std::string& target, const Options& opt) {
    Loaded l = load(target, opt);
    flatmod::CocycleSpace cs(l.group);
    flatmod::Json out;
    out["name"] = l.name;
    out["h1"] = flatmod::h1_to_json(cs);
    print_json(out);
    return 0;
}

int run_mcg(const std::string& target, const Options& opt) {
    Loaded l = load(target, opt);
    flatmod::McgSummary s = flatmod::mcg_report(l.group, opt.height_bound);
    flatmod::Json out;
    out["name"] = l.name;
    out["mcg"] = flatmod::mcg_to_json(s);
    print_json(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moduli analysis of flat orbifolds and crystallographic groups"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--catalog", opt.catalog, "catalog root directory");
    app.add_option("--height-bound", opt.height_bound, "max matrix entry height for searches");
    app.add_option("--max-order", opt.max_order, "bound on generated group order");
    app.add_option("--seed", opt.seed, "seed for all randomized steps");

    std::string target;
    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis of one group (json)");
    analyze_cmd->add_option("target", target, "file path or catalog name")->required();

    std::string batch_dir;
    auto* batch_cmd = app.add_subcommand("batch", "analyze every .json group in a directory");
    batch_cmd->add_option("dir", batch_dir, "directory of group files")->required();

    auto* teich_cmd = app.add_subcommand("teich", "Teichmueller space descriptor");
    teich_cmd->add_option("target", target, "file path or catalog name")->required();

    auto* h1_cmd = app.add_subcommand("h1", "vector-system cohomology and class");
    h1_cmd->add_option("target", target, "file path or catalog name")->required();

    auto* mcg_cmd = app.add_subcommand("mcg", "mapping class group data");
    mcg_cmd->add_option("target", target, "file path or catalog name")->required();

    auto* report_cmd = app.add_subcommand("report", "full analysis, json or text");
    report_cmd->add_option("target", target, "file path or catalog name")->required();
    bool as_json = false;
    bool as_text = false;
    report_cmd->add_flag("--json", as_json, "emit json (default)");
    report_cmd->add_flag("--text", as_text, "emit readable text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return run_report(target, opt, false);
        if (batch_cmd->parsed()) return run_batch(batch_dir, opt);
        if (teich_cmd->parsed()) return run_teich(target, opt);
        if (h1_cmd->parsed()) return run_h1(target, opt);
        if (mcg_cmd->parsed()) return run_mcg(target, opt);
        if (report_cmd->parsed()) return run_report(target, opt, as_text && !as_json);
    } catch (const flatmod::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const flatmod::AnalysisError& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
