#include "suborbit/catalog.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "suborbit/errors.hpp"
#include "suborbit/gf2.hpp"

namespace suborbit {

namespace {

Permutation parse_image_array(const nlohmann::json& arr, int line) {
    if (!arr.is_array()) throw ParseError(line, "generator is not an array");
    std::vector<Point> im;
    for (const auto& v : arr) {
        if (!v.is_number_unsigned())
            throw ParseError(line, "generator entry is not a nonnegative integer");
        im.push_back(v.get<Point>());
    }
    // Permutation's constructor validates the bijection.
    return Permutation(std::move(im));
}

std::vector<Permutation> parse_gen_list(const nlohmann::json& arr, Point degree,
                                        const std::string& name, int line) {
    if (!arr.is_array()) throw ParseError(line, "gens is not an array");
    std::vector<Permutation> gens;
    for (const auto& g : arr) {
        Permutation p = [&] {
            try {
                return parse_image_array(g, line);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ValidationError(name, e.what());
            }
        }();
        if (p.degree() != degree)
            throw ValidationError(name, "generator degree mismatch");
        gens.push_back(std::move(p));
    }
    return gens;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
    std::vector<CatalogEntry> entries;
    std::set<std::string> names;
    std::string text;
    int line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(line, e.what());
        }
        if (!obj.is_object()) throw ParseError(line, "line is not a JSON object");
        if (!obj.contains("name") || !obj["name"].is_string())
            throw ParseError(line, "missing string field \"name\"");
        CatalogEntry entry;
        entry.name = obj["name"].get<std::string>();
        entry.line = line;
        if (!names.insert(entry.name).second)
            throw ValidationError(entry.name, "duplicate name");
        const std::string kind = obj.value("kind", "");
        if (kind == "perm_gens") {
            entry.kind = CatalogEntry::Kind::perm_gens;
            if (!obj.contains("degree") || !obj["degree"].is_number_unsigned())
                throw ParseError(line, "perm_gens needs an unsigned \"degree\"");
            entry.degree = obj["degree"].get<Point>();
            if (!obj.contains("gens"))
                throw ParseError(line, "perm_gens needs \"gens\"");
            entry.gens = parse_gen_list(obj["gens"], entry.degree, entry.name, line);
            if (obj.contains("regular_subgroup"))
                entry.regular_subgroup = parse_gen_list(
                    obj["regular_subgroup"], entry.degree, entry.name, line);
        } else if (kind == "group_table") {
            entry.kind = CatalogEntry::Kind::group_table;
            if (!obj.contains("order") || !obj["order"].is_number_unsigned())
                throw ParseError(line, "group_table needs an unsigned \"order\"");
            if (!obj.contains("table") || !obj["table"].is_array())
                throw ParseError(line, "group_table needs an array \"table\"");
            const int order = obj["order"].get<int>();
            std::vector<int> flat;
            for (const auto& v : obj["table"]) {
                if (!v.is_number_unsigned())
                    throw ParseError(line, "table entry is not an index");
                flat.push_back(v.get<int>());
            }
            try {
                entry.table.emplace(order, std::move(flat));
            } catch (const std::exception& e) {
                throw ValidationError(entry.name, e.what());
            }
        } else if (kind == "construction") {
            entry.kind = CatalogEntry::Kind::construction;
            if (!obj.contains("expr") || !obj["expr"].is_string())
                throw ParseError(line, "construction needs a string \"expr\"");
            entry.expr = obj["expr"].get<std::string>();
            try {
                entry.table.emplace(construct_expression(entry.expr));
            } catch (const std::exception& e) {
                throw ValidationError(entry.name, e.what());
            }
        } else {
            throw ParseError(line, "unknown kind \"" + kind + "\"");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CatalogEntry> parse_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_catalog(in);
}

namespace {

// Tiny recursive-descent parser over the constructor grammar.
struct ExprParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    void expect(char c) {
        skip();
        if (pos >= s.size() || s[pos] != c)
            throw BadConstructorInput("expected '" + std::string(1, c) +
                                      "' at offset " + std::to_string(pos));
        ++pos;
    }

    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw BadConstructorInput("expected a name at offset " +
                                                    std::to_string(pos));
        return s.substr(start, pos - start);
    }

    int number() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            throw BadConstructorInput("expected a number at offset " +
                                      std::to_string(pos));
        return std::stoi(s.substr(start, pos - start));
    }

    GroupTable expr() {
        const std::string head = ident();
        expect('(');
        GroupTable result = [&]() -> GroupTable {
            if (head == "cyclic") return cyclic_group(number());
            if (head == "elementary_abelian")
                return elementary_abelian_group(number());
            if (head == "dihedral") return dihedral_group(number());
            if (head == "dicyclic") {
                GroupTable a = expr();
                expect(',');
                return generalized_dicyclic_group(a, number());
            }
            if (head == "direct") {
                GroupTable a = expr();
                expect(',');
                return direct_product(a, expr());
            }
            if (head == "central") {
                GroupTable a = expr();
                expect(',');
                GroupTable b = expr();
                expect(',');
                const int za = number();
                expect(',');
                return central_product(a, b, za, number());
            }
            if (head == "semidirect") {
                const std::string which = ident();
                const Theorem2Groups& t2 = theorem2_groups();
                if (which == "h12") return semidirect_v_h(t2.h12);
                if (which == "h24") return semidirect_v_h(t2.h24);
                throw BadConstructorInput("semidirect expects h12 or h24");
            }
            throw BadConstructorInput("unknown constructor \"" + head + "\"");
        }();
        expect(')');
        return result;
    }
};

}  // namespace

GroupTable construct_expression(const std::string& expr) {
    ExprParser parser{expr};
    GroupTable result = parser.expr();
    parser.skip();
    if (parser.pos != expr.size())
        throw BadConstructorInput("trailing input at offset " +
                                  std::to_string(parser.pos));
    return result;
}

PermGroup entry_group(const CatalogEntry& entry) {
    if (entry.kind == CatalogEntry::Kind::perm_gens)
        return PermGroup(entry.degree, entry.gens);
    return coset_action(*entry.table, trivial_subgroup(*entry.table));
}

}  // namespace suborbit
