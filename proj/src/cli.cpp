#include "suborbit/cli.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "suborbit/catalog.hpp"
#include "suborbit/errors.hpp"
#include "suborbit/gf2.hpp"

namespace suborbit {

using Json = nlohmann::ordered_json;

namespace {

Permutation random_permutation(Point degree, std::mt19937_64& eng) {
    std::vector<Point> im(degree);
    for (Point i = 0; i < degree; ++i) im[i] = i;
    // Explicit Fisher-Yates: std::shuffle's draw sequence is not pinned by
    // the standard, and reports must be byte-identical everywhere.
    for (Point i = degree - 1; i > 0; --i)
        std::swap(im[i], im[eng() % (i + 1)]);
    return Permutation(std::move(im));
}

}  // namespace

std::vector<PermGroup> sample_groups(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::vector<PermGroup> groups;
    while (groups.size() < count) {
        const Point degree = static_cast<Point>(4 + eng() % 5);  // 4..8
        const Permutation a = random_permutation(degree, eng);
        const Permutation b = random_permutation(degree, eng);
        PermGroup g(degree, {a, b});
        if (!is_transitive(g)) continue;
        groups.push_back(std::move(g));
    }
    return groups;
}

std::vector<SuborbitProfile> sample_profiles(std::size_t count,
                                             std::uint64_t seed) {
    std::vector<SuborbitProfile> profiles;
    for (const PermGroup& g : sample_groups(count, seed))
        profiles.push_back(suborbit_profile(g, 0));
    return profiles;
}

std::vector<HarnessPair> standard_harness() {
    std::vector<HarnessPair> pairs;
    auto add = [&](std::string name, PermGroup g, std::vector<Permutation> r) {
        pairs.push_back({std::move(name), std::move(g), std::move(r)});
    };
    const Permutation c3 = perm_from_cycles(3, {{0, 1, 2}});
    add("sym3_c3", PermGroup(3, {perm_from_cycles(3, {{0, 1}}), c3}), {c3});

    const Permutation c4 = perm_from_cycles(4, {{0, 1, 2, 3}});
    const Permutation dbl = perm_from_cycles(4, {{0, 1}, {2, 3}});
    const Permutation dbl2 = perm_from_cycles(4, {{0, 2}, {1, 3}});
    const PermGroup sym4(4, {perm_from_cycles(4, {{0, 1}}), c4});
    add("sym4_v4", sym4, {dbl, dbl2});
    add("sym4_c4", sym4, {c4});
    add("d8_c4", PermGroup(4, {c4, perm_from_cycles(4, {{1, 3}})}), {c4});
    add("a4_v4", PermGroup(4, {perm_from_cycles(4, {{0, 1, 2}}), dbl}),
        {dbl, dbl2});

    for (int n : {5, 6, 8, 10, 12}) {
        std::vector<Point> shift(n);
        for (int x = 0; x < n; ++x) shift[x] = static_cast<Point>((x + 1) % n);
        add("hol_c" + std::to_string(n), holomorph_cyclic(n),
            {Permutation(std::move(shift))});
    }
    return pairs;
}

namespace {

Json ratio_json(const ExactRatio& r) { return Json(r.str()); }

Json conjecture_json(const ExactRatio& ratio) {
    const ConjectureFormResult res = conjecture_form_check(ratio);
    Json j;
    j["conforms"] = res.conforms;
    if (res.q) j["q"] = res.q->str();
    return j;
}

Json profile_json(const SuborbitProfile& p) {
    Json sizes = Json::object();
    for (const auto& [size, points] : p.parts)
        sizes[std::to_string(size)] = points.size();
    Json j;
    j["ratio"] = ratio_json(p.ratio);
    j["points_by_suborbit_size"] = sizes;
    return j;
}

bool in_violation_window(const ExactRatio& r) {
    return ExactRatio(5, 6) < r && r < ExactRatio(1, 1);
}

int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err) {
    const auto entries = parse_catalog_file(path);
    bool violation = false;
    for (const auto& entry : entries) {
        const PermGroup g = entry_group(entry);
        if (!is_transitive(g))
            throw ValidationError(entry.name, "analyze needs transitive groups");
        const SuborbitProfile profile = suborbit_profile(g, 0);
        Json j;
        j["entry"] = entry.name;
        j["degree"] = g.degree();
        j["order"] = g.order();
        j.update(profile_json(profile));
        if (profile.ratio == ExactRatio(1, 1)) {
            j["trichotomy"] = to_string(bergman_lenstra_classify(g).tag);
        } else if (ExactRatio(1, 2) < profile.ratio) {
            Json checks = Json::object();
            for (const auto& [name, ok] : lemma_structure_check(g, 0).checks)
                checks[name] = ok;
            j["lemma_checks"] = checks;
        }
        j["conjecture"] = conjecture_json(profile.ratio);
        if (in_violation_window(profile.ratio)) {
            j["gap_violation"] = true;
            violation = true;
        }
        out << j.dump() << '\n';
    }
    err << "analyze: " << entries.size() << " entries, "
        << (violation ? "GAP VIOLATION FOUND" : "no gap violations") << '\n';
    return violation ? 1 : 0;
}

int cmd_gap_scan(const std::string& path, long long sample, std::uint64_t seed,
                 std::ostream& out, std::ostream& err) {
    std::vector<SuborbitProfile> profiles;
    std::vector<std::string> labels;
    if (!path.empty()) {
        for (const auto& entry : parse_catalog_file(path)) {
            const PermGroup g = entry_group(entry);
            if (!is_transitive(g))
                throw ValidationError(entry.name, "gap-scan needs transitive groups");
            profiles.push_back(suborbit_profile(g, 0));
            labels.push_back(entry.name);
        }
    } else {
        profiles = sample_profiles(static_cast<std::size_t>(sample), seed);
        for (std::size_t i = 0; i < profiles.size(); ++i)
            labels.push_back("sample_" + std::to_string(i));
    }
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        Json j;
        j["entry"] = labels[i];
        j.update(profile_json(profiles[i]));
        out << j.dump() << '\n';
    }
    const GapScanReport report = gap_scan(profiles);
    Json summary;
    summary["profiles"] = report.profiles;
    if (path.empty()) summary["seed"] = seed;
    summary["ratio_histogram"] = report.ratio_histogram;
    summary["violations"] = report.violations;
    out << summary.dump() << '\n';
    err << "gap-scan: " << report.profiles << " profiles, "
        << report.violations.size() << " violations\n";
    return report.violations.empty() ? 0 : 1;
}

int cmd_conjecture(const std::string& path, std::ostream& out,
                   std::ostream& err) {
    bool counterexample = false;
    std::size_t checked = 0;
    for (const auto& entry : parse_catalog_file(path)) {
        const PermGroup g = entry_group(entry);
        if (!is_transitive(g))
            throw ValidationError(entry.name, "conjecture needs transitive groups");
        const SuborbitProfile profile = suborbit_profile(g, 0);
        Json j;
        j["entry"] = entry.name;
        j["ratio"] = ratio_json(profile.ratio);
        j["conjecture"] = conjecture_json(profile.ratio);
        if (ExactRatio(1, 2) < profile.ratio &&
            !conjecture_form_check(profile.ratio).conforms) {
            j["conjecture_counterexample"] = true;
            counterexample = true;
        }
        out << j.dump() << '\n';
        ++checked;
    }
    err << "conjecture: " << checked << " entries, "
        << (counterexample ? "COUNTEREXAMPLE FOUND (publishable!)"
                           : "all ratios conform")
        << '\n';
    return counterexample ? 1 : 0;
}

int cmd_verify_gl42(unsigned threads, std::ostream& out, std::ostream& err) {
    const ScanReport report = two_generated_scan(threads);
    const Theorem2Groups& t2 = theorem2_groups();
    const GroupTable alt4 = table_from_matrix_group(t2.h12);
    const GroupTable sym4 = table_from_matrix_group(t2.h24);

    Json classes = Json::array();
    bool classes_ok = report.extremal_classes.size() == 2;
    for (const auto& cls : report.extremal_classes) {
        const GroupTable table = table_from_matrix_group(cls);
        const bool is_h12 = k_conjugate(cls, t2.h12).conjugate;
        const bool is_h24 = k_conjugate(cls, t2.h24).conjugate;
        Json c;
        c["order"] = table.order();
        c["isomorphism_type"] = brute_isomorphic(table, alt4)   ? "Alt(4)"
                                : brute_isomorphic(table, sym4) ? "Sym(4)"
                                                                : "other";
        c["k_conjugate_to"] = is_h12 ? "H12" : is_h24 ? "H24" : "neither";
        classes.push_back(c);
        if (!(is_h12 || is_h24)) classes_ok = false;
    }

    Json j;
    j["pairs_scanned"] = report.pairs_scanned;
    j["distinct_subgroups"] = report.distinct_subgroups;
    j["ratio_histogram"] = report.ratio_histogram;
    j["violations"] = report.violations;
    j["extremal_classes"] = classes;
    j["coverage"] =
        "2-generated subgroups with the selection property only; subgroups "
        "needing three or more generators are outside this scan";
    out << j.dump() << '\n';

    const bool ok = report.violations.empty() && classes_ok;
    err << "verify-gl42: " << report.distinct_subgroups << " subgroups, "
        << report.violations.size() << " violations, "
        << report.extremal_classes.size() << " extremal classes"
        << (ok ? "" : " [FAILED]") << '\n';
    return ok ? 0 : 1;
}

int cmd_census(const std::string& path, std::ostream& out, std::ostream& err) {
    bool violation = false;
    std::size_t reported = 0;
    for (const auto& entry : parse_catalog_file(path)) {
        Json j;
        j["entry"] = entry.name;
        if (entry.kind == CatalogEntry::Kind::perm_gens &&
            !entry.regular_subgroup.empty()) {
            const PermGroup g(entry.degree, entry.gens);
            const RegularEmbedding emb =
                regular_identification(g, entry.regular_subgroup, 0);
            const InvariantCount ic = invariant_count(emb);
            const DigraphBound db = digraph_count_bound(emb);
            const CensusProfile cp = census_profile(emb);
            j["kappa"] = ic.kappa;
            j["c_r"] = c_of_r(emb.table);
            j["bound_96"] = ic.bound_96;
            j["abelian_exponent_gt2"] = ic.abelian_exponent_gt2;
            j["generalized_dicyclic"] = ic.generalized_dicyclic;
            j["trichotomy_ok"] = ic.bound_ok;
            j["digraph_bound_ok"] = db.holds;
            if (cp.applicable) {
                Json cells;
                cells["a"] = cp.a;
                cells["b"] = cp.b;
                cells["c"] = cp.c;
                cells["d"] = cp.d;
                cells["e"] = cp.e;
                cells["f"] = cp.f;
                j["cells"] = cells;
                j["ratio"] = ratio_json(cp.ratio);
                j["ef_lower_bound"] = cp.ef_lower_bound;
                j["orbit_ledger_ok"] = cp.orbit_ledger_ok;
                j["kappa_cell_bound"] = cp.kappa_cell_bound;
                j["kappa_24_bound"] = cp.kappa_24_bound;
                if (!cp.ef_lower_bound || !cp.orbit_ledger_ok ||
                    !cp.kappa_cell_bound || !cp.kappa_24_bound)
                    violation = true;
            }
            if (!ic.bound_ok || !db.holds) violation = true;
        } else if (entry.table) {
            const GroupTable& table = *entry.table;
            int r = -1;
            for (int x = 1; x < table.order() && r < 0; ++x) {
                if (table.mul(x, x) != 0) continue;
                bool central = true;
                for (int y = 0; y < table.order(); ++y)
                    if (table.mul(x, y) != table.mul(y, x)) central = false;
                if (central) r = x;
            }
            if (r < 0 || table.order() <= 2) {
                j["skipped"] = "no central involution in a proper subgroup";
                out << j.dump() << '\n';
                continue;
            }
            const TauReport tau =
                tau_analysis(table, generated_subgroup(table, {r}), r);
            Json t;
            t["fix_identity"] = tau.fix_identity;
            t["fix_iota"] = tau.fix_iota;
            t["fix_tau"] = tau.fix_tau;
            t["fix_iota_tau"] = tau.fix_iota_tau;
            t["fix_formulas_match"] = tau.fix_formulas_match;
            t["kappa"] = tau.kappa_orbits;
            t["kappa_burnside"] = tau.kappa_burnside;
            Json outcomes = Json::array();
            for (TauOutcome o : tau.outcomes) outcomes.push_back(to_string(o));
            t["outcomes"] = outcomes;
            j["tau"] = t;
            if (!tau.fix_formulas_match ||
                tau.kappa_orbits != tau.kappa_burnside || tau.outcomes.empty())
                violation = true;
        } else {
            j["skipped"] = "no regular_subgroup given";
        }
        out << j.dump() << '\n';
        ++reported;
    }
    err << "census: " << reported << " entries, "
        << (violation ? "TRICHOTOMY VIOLATION FOUND" : "all bounds hold")
        << '\n';
    return violation ? 1 : 0;
}

int cmd_construct(const std::string& expr, std::ostream& out,
                  std::ostream& err) {
    const GroupTable table = construct_expression(expr);
    Json j;
    j["expr"] = expr;
    j["order"] = table.order();
    j["table"] = table.mul_flat();
    out << j.dump() << '\n';
    err << "construct: order " << table.order() << '\n';
    return 0;
}

}  // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"Suborbit structure laboratory for finite transitive groups"};
    app.require_subcommand(1);

    std::string analyze_path, scan_path, conjecture_path, census_path, expr;
    long long sample_count = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool seed_given = false;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Suborbit profiles, trichotomy, and structure checks");
    analyze->add_option("catalog", analyze_path)->required();

    CLI::App* gap = app.add_subcommand(
        "gap-scan", "Hunt for ratios in the forbidden window (5/6, 1)");
    gap->add_option("catalog", scan_path);
    gap->add_option("--sample", sample_count, "number of random groups");
    gap->add_option("--seed", seed)->each([&](const std::string&) {
        seed_given = true;
    });

    CLI::App* conj = app.add_subcommand(
        "conjecture", "Check every ratio > 1/2 has the (q+1)/2q shape");
    conj->add_option("catalog", conjecture_path)->required();

    CLI::App* gl42 = app.add_subcommand(
        "verify-gl42", "Scan 2-generated subgroups of GL(4,2)");
    gl42->add_option("--threads", threads);

    CLI::App* census = app.add_subcommand(
        "census", "Invariant-set counts, kappa bounds, and the tau suite");
    census->add_option("catalog", census_path)->required();

    CLI::App* construct = app.add_subcommand("construct", "Emit a group table");
    construct->add_option("expr", expr)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << (e.get_exit_code() == 0 ? app.help() : std::string(e.what()) + "\n");
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_path, out, err);
        if (*gap) {
            if (scan_path.empty() && sample_count <= 0) {
                err << "gap-scan: give a catalog or --sample N --seed S\n";
                return 2;
            }
            if (scan_path.empty() && !seed_given) {
                err << "gap-scan: --seed is mandatory with --sample\n";
                return 2;
            }
            return cmd_gap_scan(scan_path, sample_count, seed, out, err);
        }
        if (*conj) return cmd_conjecture(conjecture_path, out, err);
        if (*gl42) return cmd_verify_gl42(threads, out, err);
        if (*census) return cmd_census(census_path, out, err);
        if (*construct) return cmd_construct(expr, out, err);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const BadConstructorInput& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace suborbit
