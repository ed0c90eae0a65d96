#include "suborbit/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "suborbit/errors.hpp"

namespace suborbit {

int c_of_r(const GroupTable& table) {
    const int n = table.order();
    const int inv = static_cast<int>(subset_size(involution_set(table)));
    return (n + inv) / 2;  // non-involutions pair with their inverses
}

bool Digraph::is_graph() const {
    for (int r = 0; r < vertices; ++r)
        for (int t = 0; t < vertices; ++t)
            if (arc[r][t] != arc[t][r]) return false;
    return true;
}

Digraph cayley_digraph(const GroupTable& table, const ElementSubset& s) {
    const int n = table.order();
    Digraph g;
    g.vertices = n;
    g.arc.assign(n, std::vector<bool>(n, false));
    for (int r = 0; r < n; ++r)
        for (int t = 0; t < n; ++t)
            if (s[table.mul(t, table.inv(r))]) g.arc[r][t] = true;
    return g;
}

RegularEmbedding regular_identification(const PermGroup& g,
                                        const std::vector<Permutation>& r_gens,
                                        Point alpha) {
    PermGroup r(g.degree(), r_gens);
    if (!g.contains_all(r))
        throw NotASubgroup("regular_identification: R is not inside G");
    if (!is_transitive(r))
        throw NotRegular("regular_identification: R is not transitive");
    if (r.order() != g.degree())
        throw NotRegular("regular_identification: |R| != degree");

    RegularEmbedding emb{g, r, from_regular_action(r), alpha, {}, {}};
    // Element indexing must match the table: canonical (lexicographic) order.
    std::vector<Permutation> sorted = r.elements();
    std::sort(sorted.begin(), sorted.end());
    emb.point_to_elem.assign(g.degree(), -1);
    emb.elem_to_point.assign(g.degree(), 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Point image = sorted[i].image(alpha);
        emb.point_to_elem[image] = static_cast<int>(i);
        emb.elem_to_point[i] = image;
    }
    return emb;
}

namespace {

Permutation inversion_perm(const GroupTable& table) {
    std::vector<Point> im(table.order());
    for (int x = 0; x < table.order(); ++x)
        im[x] = static_cast<Point>(table.inv(x));
    return Permutation(std::move(im));
}

// The point stabilizer of the base point, transported to R-element indices.
std::vector<Permutation> stabilizer_on_elements(const RegularEmbedding& emb) {
    const PermGroup stab = point_stabilizer(emb.ambient, emb.alpha);
    std::vector<Permutation> out;
    for (const auto& g : stab.elements()) {
        std::vector<Point> im(emb.table.order());
        for (int i = 0; i < emb.table.order(); ++i)
            im[i] = static_cast<Point>(
                emb.point_to_elem[g.image(emb.elem_to_point[i])]);
        out.emplace_back(std::move(im));
    }
    return out;
}

int orbit_count(const PermGroup& g) {
    std::vector<bool> seen(g.degree(), false);
    int count = 0;
    for (Point p = 0; p < g.degree(); ++p) {
        if (seen[p]) continue;
        ++count;
        for (Point q : orbit(g, p)) seen[q] = true;
    }
    return count;
}

bool is_c4_times_c2s(const GroupTable& table) {
    const int n = table.order();
    if ((n & (n - 1)) != 0 || n < 4) return false;
    return table.is_abelian() && table.exponent() == 4 &&
           static_cast<int>(subset_size(involution_set(table))) == n / 2;
}

}  // namespace

InvariantCount invariant_count(const RegularEmbedding& emb) {
    if (emb.ambient.order() <= emb.table.order())
        throw NotProper("invariant_count: G must properly contain R");
    std::vector<Permutation> gens = stabilizer_on_elements(emb);
    gens.push_back(inversion_perm(emb.table));
    const PermGroup t(static_cast<Point>(emb.table.order()), gens);

    InvariantCount res;
    res.kappa = orbit_count(t);
    const int n = emb.table.order();
    res.bound_96 = 96LL * res.kappa <= 96LL * c_of_r(emb.table) - n;
    res.abelian_exponent_gt2 =
        emb.table.is_abelian() && emb.table.exponent() > 2;
    res.generalized_dicyclic = is_generalized_dicyclic(emb.table).has_value();
    res.bound_ok =
        res.bound_96 || res.abelian_exponent_gt2 || res.generalized_dicyclic;
    return res;
}

DigraphBound digraph_count_bound(const RegularEmbedding& emb) {
    if (emb.ambient.order() <= emb.table.order())
        throw NotProper("digraph_count_bound: G must properly contain R");
    const PermGroup g1(static_cast<Point>(emb.table.order()),
                       stabilizer_on_elements(emb));
    DigraphBound res;
    res.orbits = orbit_count(g1);
    res.holds = 4 * res.orbits <= 3 * emb.table.order();
    return res;
}

std::string to_string(SquareRootFamily family) {
    switch (family) {
        case SquareRootFamily::d8_chain:
            return "D8chain";
        case SquareRootFamily::q8_chain:
            return "Q8chain";
        case SquareRootFamily::c4_chain:
            return "C4chain";
        case SquareRootFamily::c4_c2s:
            return "C4xC2s";
    }
    return "?";
}

std::string to_string(TauOutcome outcome) {
    switch (outcome) {
        case TauOutcome::bound_48:
            return "bound_48";
        case TauOutcome::generalized_dicyclic:
            return "generalized_dicyclic";
        case TauOutcome::c4_times_c2s:
            return "C4xC2s";
    }
    return "?";
}

TauReport tau_analysis(const GroupTable& table, const ElementSubset& u, int r) {
    const int n = table.order();
    if (!is_subgroup(table, u) || subset_size(u) == static_cast<std::size_t>(n))
        throw BadTauInput("tau_analysis: U must be a proper subgroup");
    if (r <= 0 || r >= n || !u[r] || table.mul(r, r) != 0)
        throw BadTauInput("tau_analysis: r must be an involution inside U");
    for (int x = 0; x < n; ++x)
        if (table.mul(r, x) != table.mul(x, r))
            throw BadTauInput("tau_analysis: r must be central");

    std::vector<Point> tau_im(n);
    for (int x = 0; x < n; ++x)
        tau_im[x] = static_cast<Point>(u[x] ? x : table.mul(x, r));
    const Permutation tau(std::move(tau_im));
    const Permutation iota = inversion_perm(table);
    const PermGroup t(static_cast<Point>(n), {iota, tau});

    TauReport report;
    report.t_order = static_cast<int>(t.order());

    // Fixed points by the closed-form expressions.
    const ElementSubset inv_r = involution_set(table);
    report.fix_identity = n;
    report.fix_iota = static_cast<int>(subset_size(inv_r));
    report.fix_tau = static_cast<int>(subset_size(u));
    int iu = 0, s_out = 0;
    for (int x = 0; x < n; ++x) {
        if (u[x] && inv_r[x]) ++iu;
        if (!u[x] && table.mul(x, x) == r) ++s_out;
    }
    report.fix_iota_tau = iu + s_out;

    auto fixed_count = [n](const Permutation& p) {
        int c = 0;
        for (int x = 0; x < n; ++x)
            if (p.image(x) == static_cast<Point>(x)) ++c;
        return c;
    };
    report.fix_formulas_match =
        fixed_count(tau) == report.fix_tau &&
        fixed_count(iota) == report.fix_iota &&
        fixed_count(iota * tau) == report.fix_iota_tau;

    report.kappa_orbits = orbit_count(t);
    long long fix_sum = 0;
    for (const auto& e : t.elements()) fix_sum += fixed_count(e);
    if (fix_sum % t.order() != 0)
        throw Error("tau_analysis: Burnside sum not divisible by |T|");
    report.kappa_burnside = static_cast<int>(fix_sum / t.order());

    if (48LL * report.kappa_orbits <= 48LL * c_of_r(table) - n)
        report.outcomes.push_back(TauOutcome::bound_48);
    if (is_generalized_dicyclic(table))
        report.outcomes.push_back(TauOutcome::generalized_dicyclic);
    if (is_c4_times_c2s(table))
        report.outcomes.push_back(TauOutcome::c4_times_c2s);
    return report;
}

namespace {

// The shared central involution of these families is the unique non-trivial
// square (all squares lie in its span).
int unique_nontrivial_square(const GroupTable& table) {
    int r = -1;
    for (int x = 0; x < table.order(); ++x) {
        const int sq = table.mul(x, x);
        if (sq == 0) continue;
        if (r >= 0 && r != sq)
            throw NotExtraspecialShape("squares span more than one involution");
        r = sq;
    }
    if (r < 0) throw NotExtraspecialShape("group has exponent at most 2");
    return r;
}

GroupTable build_family(SquareRootFamily family, int t, int ell) {
    const GroupTable d8 = dihedral_group(4);
    const int z_d8 = 2;  // r^2 in the i + 4j encoding
    GroupTable chain = [&] {
        switch (family) {
            case SquareRootFamily::d8_chain:
                return d8;
            case SquareRootFamily::q8_chain:
                return generalized_dicyclic_group(cyclic_group(4), 2);
            case SquareRootFamily::c4_chain:
                return central_product(cyclic_group(4), d8, 2, z_d8);
            case SquareRootFamily::c4_c2s:
                return cyclic_group(4);
        }
        throw BadConstructorInput("build_family: unknown family");
    }();
    const int extra_d8 =
        family == SquareRootFamily::c4_c2s
            ? 0
            : (family == SquareRootFamily::c4_chain ? t - 1 : t - 1);
    for (int i = 0; i < extra_d8; ++i)
        chain = central_product(chain, d8, unique_nontrivial_square(chain), z_d8);
    if (ell > 0) chain = direct_product(chain, elementary_abelian_group(ell));
    return chain;
}

}  // namespace

SFormulaReport s_set_formula_check(SquareRootFamily family, int t, int ell) {
    if (ell < 0 || ell > 3) throw BadConstructorInput("s_set_formula_check: ell out of range");
    if (family != SquareRootFamily::c4_c2s && (t < 1 || t > 3))
        throw BadConstructorInput("s_set_formula_check: t out of range");

    const GroupTable table = build_family(family, t, ell);
    const int r = unique_nontrivial_square(table);
    SFormulaReport report;
    report.family = family;
    report.t = t;
    report.ell = ell;
    report.order = table.order();
    for (int x = 0; x < table.order(); ++x)
        if (table.mul(x, x) == r) ++report.s_count;
    const int n = table.order();
    switch (family) {
        case SquareRootFamily::d8_chain:
            report.s_formula = ((1 << t) - 1) * n / (1 << (t + 1));
            break;
        case SquareRootFamily::q8_chain:
            report.s_formula = ((1 << t) + 1) * n / (1 << (t + 1));
            break;
        case SquareRootFamily::c4_chain:
        case SquareRootFamily::c4_c2s:
            report.s_formula = n / 2;
            break;
    }
    report.match = report.s_count == report.s_formula;
    return report;
}

QuadraticFormClass quadratic_form_classify(const GroupTable& table, int r) {
    const int n = table.order();
    if (r <= 0 || r >= n || table.mul(r, r) != 0)
        throw NotExtraspecialShape("quadratic_form_classify: r not an involution");
    for (int x = 0; x < n; ++x)
        if (table.mul(r, x) != table.mul(x, r))
            throw NotExtraspecialShape("quadratic_form_classify: r not central");
    auto in_span = [&](int x) { return x == 0 || x == r; };
    for (int x = 0; x < n; ++x) {
        if (!in_span(table.mul(x, x)))
            throw NotExtraspecialShape(
                "quadratic_form_classify: a square lies outside <r>");
        for (int y = 0; y < n; ++y) {
            const int comm = table.mul(
                table.inv(x), table.mul(table.inv(y), table.mul(x, y)));
            if (!in_span(comm))
                throw NotExtraspecialShape(
                    "quadratic_form_classify: quotient is not elementary abelian");
        }
    }

    // Coset space R/<r> with GF(2) coordinates from a greedy basis.
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        coset_of[x] = coset_of[table.mul(x, r)] = static_cast<int>(reps.size());
        reps.push_back(x);
    }
    const int q_size = static_cast<int>(reps.size());

    auto bform = [&](int cx, int cy) {
        const int x = reps[cx], y = reps[cy];
        const int comm =
            table.mul(table.inv(x), table.mul(table.inv(y), table.mul(x, y)));
        return comm == r ? 1 : 0;
    };
    auto qform = [&](int cx) { return table.mul(reps[cx], reps[cx]) == r ? 1 : 0; };

    QuadraticFormClass result;
    result.polarization_ok = true;
    for (int cx = 0; cx < q_size; ++cx)
        for (int cy = 0; cy < q_size; ++cy) {
            const int cxy = coset_of[table.mul(reps[cx], reps[cy])];
            if ((qform(cxy) + qform(cx) + qform(cy)) % 2 != bform(cx, cy))
                result.polarization_ok = false;
        }

    int rad_size = 0, rad_q_zero = 0, q_zeros = 0;
    for (int cx = 0; cx < q_size; ++cx) {
        if (qform(cx) == 0) ++q_zeros;
        bool in_rad = true;
        for (int cy = 0; cy < q_size; ++cy)
            if (bform(cx, cy)) {
                in_rad = false;
                break;
            }
        if (in_rad) {
            ++rad_size;
            if (qform(cx) == 0) ++rad_q_zero;
        }
    }
    int m = 0;
    while ((1 << m) < q_size) ++m;
    int k = 0;
    while ((1 << k) < rad_size) ++k;

    if (rad_size == q_size) {
        // Zero bilinear form: abelian, so C4 x C2^ell.
        result.family = SquareRootFamily::c4_c2s;
        result.t = 0;
        result.ell = m - 1;
    } else if (rad_q_zero == rad_size) {
        result.t = (m - k) / 2;
        result.ell = k;
        // Plus type iff the zero count matches the split form.
        const int t = result.t;
        const int plus_zeros = (1 << k) * ((1 << (2 * t - 1)) + (1 << (t - 1)));
        result.family = q_zeros == plus_zeros ? SquareRootFamily::d8_chain
                                              : SquareRootFamily::q8_chain;
    } else {
        result.family = SquareRootFamily::c4_chain;
        result.t = (m - k) / 2;
        result.ell = k - 1;
    }

    if (n <= 64) {
        const GroupTable expected = build_family(
            result.family, result.family == SquareRootFamily::c4_c2s ? 0 : result.t,
            result.ell);
        result.cross_validated = brute_isomorphic(table, expected);
    }
    return result;
}

CensusProfile census_profile(const RegularEmbedding& emb) {
    const SuborbitProfile profile = suborbit_profile(emb.ambient, emb.alpha);
    CensusProfile out;
    out.ratio = profile.ratio;
    if (profile.ratio == ExactRatio(1, 1)) return out;  // not applicable
    out.applicable = true;

    const int n = emb.table.order();
    const ElementSubset invs = involution_set(emb.table);
    // Cell index 0..5 = a..f.
    std::vector<int> cell(n, -1);
    auto assign = [&](const PointSet& pts, int cell_inv, int cell_non) {
        for (Point p : pts) {
            const int e = emb.point_to_elem[p];
            cell[e] = invs[e] ? cell_inv : cell_non;
        }
    };
    for (const auto& [size, pts] : profile.parts) {
        if (size == 1)
            assign(pts, 0, 1);
        else if (size == 2)
            assign(pts, 2, 3);
        else
            assign(pts, 4, 5);
    }
    int counts[6] = {0, 0, 0, 0, 0, 0};
    for (int e = 0; e < n; ++e) ++counts[cell[e]];
    out.a = counts[0];
    out.b = counts[1];
    out.c = counts[2];
    out.d = counts[3];
    out.e = counts[4];
    out.f = counts[5];
    out.c_r = c_of_r(emb.table);
    out.ef_lower_bound = 6 * (out.e + out.f) >= n;

    std::vector<Permutation> gens = stabilizer_on_elements(emb);
    gens.push_back(inversion_perm(emb.table));
    const PermGroup t(static_cast<Point>(n), gens);

    // Per-orbit size floors. An orbit of T may straddle several cells (the
    // stabilizer action on elements need not preserve the involution set),
    // so the floors depend on which cells the orbit meets:
    //  - meets a: the element is fixed by the stabilizer and by inversion,
    //    so the orbit is a singleton;
    //  - meets b, c, or d: the element is moved by inversion or by the
    //    stabilizer, so the orbit has size >= 2;
    //  - meets e or f: the stabilizer orbit alone has size >= 3;
    //  - meets f with no involution in the orbit: the orbit is closed under
    //    inversion with no fixed points, hence even, hence >= 4.
    out.orbit_ledger_ok = true;
    std::vector<bool> seen(n, false);
    for (int e = 0; e < n; ++e) {
        if (seen[e]) continue;
        const PointSet orb = orbit(t, static_cast<Point>(e));
        for (Point p : orb) seen[p] = true;
        ++out.kappa;
        bool meets[6] = {false, false, false, false, false, false};
        bool has_involution = false;
        for (Point p : orb) {
            meets[cell[p]] = true;
            if (invs[p]) has_involution = true;
        }
        const std::size_t sz = orb.size();
        if (meets[0] && sz != 1) out.orbit_ledger_ok = false;
        if ((meets[1] || meets[2] || meets[3]) && sz < 2)
            out.orbit_ledger_ok = false;
        if ((meets[4] || meets[5]) && sz < 3) out.orbit_ledger_ok = false;
        if (meets[5] && !has_involution && sz < 4)
            out.orbit_ledger_ok = false;
    }
    out.kappa_cell_bound = 12LL * out.kappa <= 12LL * out.a + 6LL * out.b +
                                                   6LL * out.c + 6LL * out.d +
                                                   4LL * out.e + 3LL * out.f;
    out.kappa_24_bound = 24LL * out.kappa <= 24LL * out.c_r - n;
    return out;
}

PermGroup holomorph_cyclic(int n) {
    if (n < 2) throw BadConstructorInput("holomorph_cyclic: need n >= 2");
    std::vector<Permutation> gens;
    std::vector<Point> shift(n);
    for (int x = 0; x < n; ++x) shift[x] = static_cast<Point>((x + 1) % n);
    gens.emplace_back(std::move(shift));
    for (int u = 2; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        std::vector<Point> mulmap(n);
        for (int x = 0; x < n; ++x) mulmap[x] = static_cast<Point>((x * u) % n);
        gens.emplace_back(std::move(mulmap));
    }
    return PermGroup(static_cast<Point>(n), gens);
}

}  // namespace suborbit
