#pragma once

// Built-in models, addressable from the command line as "builtin:<name>".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lscat {

struct CatalogEntry {
    std::string name;
    std::string description;
    std::string source;  // model file text
};

const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_catalog_entry(std::string_view name);

}  // namespace lscat
