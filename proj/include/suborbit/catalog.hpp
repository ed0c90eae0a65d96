#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "suborbit/group_table.hpp"
#include "suborbit/perm.hpp"

namespace suborbit {

struct CatalogEntry {
    enum class Kind { perm_gens, group_table, construction };

    std::string name;
    Kind kind = Kind::perm_gens;
    int line = 0;

    // perm_gens payload
    Point degree = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation> regular_subgroup;

    // group_table payload
    std::optional<GroupTable> table;

    // construction payload
    std::string expr;
};

// One JSON object per line; blank lines are skipped.
std::vector<CatalogEntry> parse_catalog(std::istream& in);
std::vector<CatalogEntry> parse_catalog_file(const std::string& path);

// Constructor expressions, e.g. "central(dihedral(4), dihedral(4), 2, 2)".
// Grammar: cyclic(n) | elementary_abelian(k) | dihedral(k) |
//          dicyclic(expr, y) | direct(expr, expr) |
//          central(expr, expr, za, zb) | semidirect(h12|h24)
GroupTable construct_expression(const std::string& expr);

// The ambient permutation group an entry denotes: perm_gens directly,
// tables and constructions through their regular action.
PermGroup entry_group(const CatalogEntry& entry);

}  // namespace suborbit
