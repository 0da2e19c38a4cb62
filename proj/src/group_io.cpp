#include "flatmod/group_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

Rat json_rational(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(Int(static_cast<long>(v.get<long long>())));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError(where + ": expected an integer or a rational string like \"1/2\"");
}

}  // namespace

GroupSpec parse_group_json(const Json& j) {
    if (!j.is_object()) throw ParseError("group description must be a JSON object");
    GroupSpec spec;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw ParseError("\"name\" must be a string");
        spec.name = j.at("name").get<std::string>();
    }
    if (!j.contains("dim") || !j.at("dim").is_number_integer())
        throw ParseError("missing integer field \"dim\"");
    spec.dim = j.at("dim").get<int>();
    if (spec.dim < 1 || spec.dim > 8)
        throw DimensionMismatch("\"dim\" must be between 1 and 8, got " +
                                std::to_string(spec.dim));
    if (!j.contains("generators") || !j.at("generators").is_array() ||
        j.at("generators").empty())
        throw ParseError("missing non-empty array field \"generators\"");
    int gi = 0;
    for (const Json& g : j.at("generators")) {
        std::string where = "generators[" + std::to_string(gi) + "]";
        if (!g.is_object() || !g.contains("linear") || !g.contains("translation"))
            throw ParseError(where + ": expected an object with \"linear\" and \"translation\"");
        const Json& lin = g.at("linear");
        if (!lin.is_array() || static_cast<int>(lin.size()) != spec.dim)
            throw DimensionMismatch(where + ".linear: expected " + std::to_string(spec.dim) +
                                    " rows");
        RatMat a(spec.dim, spec.dim);
        for (int r = 0; r < spec.dim; ++r) {
            const Json& row = lin.at(static_cast<size_t>(r));
            if (!row.is_array() || static_cast<int>(row.size()) != spec.dim)
                throw DimensionMismatch(where + ".linear[" + std::to_string(r) +
                                        "]: expected " + std::to_string(spec.dim) + " entries");
            for (int c = 0; c < spec.dim; ++c)
                a.at(r, c) = json_rational(row.at(static_cast<size_t>(c)),
                                           where + ".linear[" + std::to_string(r) + "][" +
                                               std::to_string(c) + "]");
        }
        const Json& tr = g.at("translation");
        if (!tr.is_array() || static_cast<int>(tr.size()) != spec.dim)
            throw DimensionMismatch(where + ".translation: expected " + std::to_string(spec.dim) +
                                    " entries");
        RatVec t(static_cast<size_t>(spec.dim));
        for (int c = 0; c < spec.dim; ++c)
            t[static_cast<size_t>(c)] = json_rational(
                tr.at(static_cast<size_t>(c)), where + ".translation[" + std::to_string(c) + "]");
        spec.generators.push_back({std::move(a), std::move(t)});
        ++gi;
    }
    if (j.contains("expect")) spec.expect_raw = j.at("expect").dump();
    return spec;
}

GroupSpec load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    GroupSpec spec = parse_group_json(j);
    if (spec.name.empty()) spec.name = std::filesystem::path(path).stem().string();
    return spec;
}

std::string default_catalog_root() {
#ifdef FLATMOD_SOURCE_CATALOG
    return FLATMOD_SOURCE_CATALOG;
#else
    return "catalog";
#endif
}

GroupSpec load_group(const std::string& spec, const std::string& catalog_root) {
    namespace fs = std::filesystem;
    if (fs::exists(spec) && fs::is_regular_file(spec)) return load_group_file(spec);
    fs::path in_catalog = fs::path(catalog_root) / (spec + ".json");
    if (fs::exists(in_catalog)) {
        GroupSpec g = load_group_file(in_catalog.string());
        g.name = spec;
        return g;
    }
    throw CatalogNotFound("no such file or catalog entry: " + spec);
}

Json group_to_json(const GroupSpec& spec) {
    Json j;
    if (!spec.name.empty()) j["name"] = spec.name;
    j["dim"] = spec.dim;
    Json gens = Json::array();
    for (const AffineMap& g : spec.generators) {
        Json lin = Json::array();
        for (int r = 0; r < g.linear.rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < g.linear.cols(); ++c) {
                const Rat& x = g.linear.at(r, c);
                if (x.get_den() == 1 && abs(x.get_num()) < 1000000)
                    row.push_back(to_long(x.get_num()));
                else
                    row.push_back(to_string(x));
            }
            lin.push_back(std::move(row));
        }
        Json tr = Json::array();
        for (const Rat& x : g.translation) tr.push_back(to_string(x));
        gens.push_back(Json{{"linear", std::move(lin)}, {"translation", std::move(tr)}});
    }
    j["generators"] = std::move(gens);
    if (!spec.expect_raw.empty()) j["expect"] = Json::parse(spec.expect_raw);
    return j;
}

std::vector<std::string> catalog_entries(const std::string& catalog_root) {
    namespace fs = std::filesystem;
    std::vector<std::string> out;
    if (!fs::exists(catalog_root)) return out;
    for (const auto& e : fs::recursive_directory_iterator(catalog_root)) {
        if (!e.is_regular_file() || e.path().extension() != ".json") continue;
        out.push_back(fs::relative(e.path(), catalog_root).replace_extension("").generic_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace flatmod
