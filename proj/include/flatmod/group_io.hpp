#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flatmod/cryst_group.hpp"

namespace flatmod {

using Json = nlohmann::ordered_json;

// A group description as read from disk: affine generators in input
// coordinates, plus optional metadata carried through to reports and tests.
struct GroupSpec {
    std::string name;
    int dim = 0;
    std::vector<AffineMap> generators;
    std::string expect_raw;  // serialized "expect" object, empty if absent
};

GroupSpec parse_group_json(const Json& j);
GroupSpec load_group_file(const std::string& path);

// Resolves either a filesystem path or a catalog identifier such as
// "wallpaper/p4" relative to the catalog root.
GroupSpec load_group(const std::string& spec, const std::string& catalog_root);

// The compile-time default catalog location.
std::string default_catalog_root();

Json group_to_json(const GroupSpec& spec);

// Lists catalog identifiers (relative paths without .json), sorted.
std::vector<std::string> catalog_entries(const std::string& catalog_root);

}  // namespace flatmod
