#include "lscat/catalog.hpp"

namespace lscat {

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"example1", "pure model x2, x6, y5, y15, y23 with dy15 = x2^2 x6^2",
         "generator x2 2\ngenerator x6 6\ngenerator y5 5\ngenerator y15 15\ngenerator y23 23\n"
         "d y5 = x2^3\nd y15 = x2^2*x6^2\nd y23 = x6^4\n"},
        {"example2", "pure model x2, x6, y5, y13, y23 with dy13 = x2 x6^2",
         "generator x2 2\ngenerator x6 6\ngenerator y5 5\ngenerator y13 13\ngenerator y23 23\n"
         "d y5 = x2^3\nd y13 = x2*x6^2\nd y23 = x6^4\n"},
        {"example1-d3", "example1 truncated to its cubic part (not elliptic)",
         "generator x2 2\ngenerator x6 6\ngenerator y5 5\ngenerator y15 15\ngenerator y23 23\n"
         "d y5 = x2^3\n"},
        {"truncated-cubic", "x2, y5 with dy5 = x2^3",
         "generator x2 2\ngenerator y5 5\nd y5 = x2^3\n"},
        {"sphere2", "the 2-sphere: x2, y3 with dy3 = x2^2",
         "generator x2 2\ngenerator y3 3\nd y3 = x2^2\n"},
    };
    return entries;
}

std::optional<CatalogEntry> find_catalog_entry(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

}  // namespace lscat
