#include "suborbit/suborbit.hpp"

#include <algorithm>
#include <set>

#include "suborbit/errors.hpp"

namespace suborbit {

SuborbitProfile suborbit_profile(const PermGroup& group, Point alpha) {
    if (!is_transitive(group))
        throw NotTransitive("suborbit_profile: group not transitive");
    const PermGroup stab = point_stabilizer(group, alpha);
    SuborbitProfile profile;
    profile.alpha = alpha;
    std::vector<bool> assigned(group.degree(), false);
    for (Point p = 0; p < group.degree(); ++p) {
        if (assigned[p]) continue;
        const PointSet orb = orbit(stab, p);
        for (Point q : orb) assigned[q] = true;
        PointSet& part = profile.parts[static_cast<int>(orb.size())];
        part.insert(part.end(), orb.begin(), orb.end());
    }
    for (auto& [size, part] : profile.parts) std::sort(part.begin(), part.end());

    profile.d = static_cast<int>(profile.parts.at(1).size());
    for (const auto& [size, part] : profile.parts) {
        if (part.size() % profile.d != 0)
            throw Error("suborbit_profile: d does not divide a part size");
        profile.x[size] = static_cast<int>(part.size()) / profile.d;
    }
    std::int64_t small = profile.parts.at(1).size();
    if (auto it = profile.parts.find(2); it != profile.parts.end())
        small += it->second.size();
    profile.ratio = ExactRatio(small, group.degree());
    return profile;
}

bool fixed_block_check(const PermGroup& group, Point alpha) {
    const SuborbitProfile profile = suborbit_profile(group, alpha);
    const PermGroup stab = point_stabilizer(group, alpha);
    const PermGroup norm = normalizer(group, stab);
    const PointSet norm_orbit = orbit(norm, alpha);
    if (norm_orbit != profile.parts.at(1)) return false;
    return is_block(group, profile.parts.at(1));
}

std::string to_string(TrichotomyTag tag) {
    switch (tag) {
        case TrichotomyTag::regular:
            return "regular";
        case TrichotomyTag::stabilizer_order_2:
            return "stabilizer_order_2";
        case TrichotomyTag::elementary_abelian_index_2:
            return "elementary_abelian_index_2";
        case TrichotomyTag::not_applicable:
            return "not_applicable";
    }
    return "?";
}

namespace {

bool is_elementary_abelian_2(const PermGroup& g) {
    for (const auto& a : g.elements()) {
        if (!(a * a).is_identity()) return false;
        for (const auto& b : g.elements())
            if (!(a * b == b * a)) return false;
    }
    return true;
}

bool is_normal_in(const PermGroup& group, const PermGroup& sub) {
    std::set<std::vector<Point>> subset;
    for (const auto& e : sub.elements()) subset.insert(e.images());
    for (const auto& g : group.elements()) {
        const Permutation ginv = g.inverse();
        for (const auto& x : sub.elements())
            if (!subset.count((ginv * x * g).images())) return false;
    }
    return true;
}

}  // namespace

TrichotomyVerdict bergman_lenstra_classify(const PermGroup& group) {
    if (!is_transitive(group))
        throw NotTransitive("bergman_lenstra_classify: group not transitive");
    TrichotomyVerdict verdict;
    if (suborbit_profile(group, 0).ratio != ExactRatio(1, 1)) return verdict;

    const PermGroup stab = point_stabilizer(group, 0);
    if (stab.order() == 1) {
        verdict.tag = TrichotomyTag::regular;
        return verdict;
    }
    if (stab.order() == 2) {
        verdict.tag = TrichotomyTag::stabilizer_order_2;
        return verdict;
    }
    // Family (c): N = <stab, t> of order 2|stab| for a central-to-stab
    // involution t outside the stabilizer; the scan is complete because any
    // qualifying N is elementary abelian, so any t in N \ stab works.
    if (is_elementary_abelian_2(stab)) {
        for (const auto& t : group.elements()) {
            if (stab.contains(t) || !(t * t).is_identity() || t.is_identity())
                continue;
            bool central = true;
            for (const auto& s : stab.elements())
                if (!(t * s == s * t)) {
                    central = false;
                    break;
                }
            if (!central) continue;
            std::vector<Permutation> n_elems = stab.elements();
            for (const auto& s : stab.elements()) n_elems.push_back(s * t);
            const PermGroup n = PermGroup::from_elements(group.degree(), n_elems);
            if (is_normal_in(group, n)) {
                verdict.tag = TrichotomyTag::elementary_abelian_index_2;
                verdict.witness = n;
                return verdict;
            }
        }
    }
    throw Error("bergman_lenstra_classify: ratio is 1 but no family matched; "
                "this contradicts the trichotomy and signals a bug");
}

namespace {

std::set<std::vector<Point>> elem_set(const PermGroup& g) {
    std::set<std::vector<Point>> s;
    for (const auto& e : g.elements()) s.insert(e.images());
    return s;
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
    const auto bs = elem_set(b);
    std::vector<Permutation> keep;
    for (const auto& e : a.elements())
        if (bs.count(e.images())) keep.push_back(e);
    return PermGroup::from_elements(a.degree(), std::move(keep));
}

bool same_group(const PermGroup& a, const PermGroup& b) {
    return a.order() == b.order() && elem_set(a) == elem_set(b);
}

bool commutes(const PermGroup& a, const PermGroup& b) {
    for (const auto& x : a.elements())
        for (const auto& y : b.elements())
            if (!(x * y == y * x)) return false;
    return true;
}

}  // namespace

BipartiteCommuteResult bipartite_commute_check(const PermGroup& ambient,
                                               const PermGroup& x,
                                               const PermGroup& y) {
    BipartiteCommuteResult res;
    res.commute = commutes(x, y);
    const PermGroup z = intersection(x, y);
    if (x.order() != y.order() || x.order() != 4 * z.order()) return res;

    // The three subgroups between Z and X: Z together with one non-trivial
    // coset each (the quotient is a Klein group).
    auto middle = [&](const PermGroup& top) {
        const auto zs = elem_set(z);
        std::vector<std::set<std::vector<Point>>> subs;
        std::set<std::vector<Point>> covered;
        for (const auto& images : zs) covered.insert(images);
        for (const auto& e : top.elements()) {
            if (covered.count(e.images())) continue;
            std::set<std::vector<Point>> sub = zs;
            for (const auto& s : z.elements()) {
                const auto im = (s * e).images();
                sub.insert(im);
                covered.insert(im);
            }
            subs.push_back(std::move(sub));
        }
        return subs;
    };
    const auto xs = middle(x);
    const auto ys = middle(y);
    if (xs.size() != 3 || ys.size() != 3) return res;

    const auto xset = elem_set(x);
    for (const auto& xi : xs)
        for (const auto& yj : ys) {
            // Product set; adjacency means it is a subgroup conjugate to X.
            std::set<std::vector<Point>> prod;
            for (const auto& aim : xi)
                for (const auto& bim : yj)
                    prod.insert((Permutation(aim) * Permutation(bim)).images());
            if (prod.size() != xset.size()) continue;
            bool conj = false;
            for (const auto& g : ambient.elements()) {
                const Permutation ginv = g.inverse();
                std::set<std::vector<Point>> image;
                for (const auto& xim : xset)
                    image.insert((ginv * Permutation(xim) * g).images());
                if (image == prod) {
                    conj = true;
                    break;
                }
            }
            if (conj) ++res.edges;
        }
    return res;
}

bool valency2_closure_check(const std::vector<std::vector<int>>& adjacency,
                            const std::vector<int>& subset) {
    const int n = static_cast<int>(adjacency.size());
    for (const auto& nbrs : adjacency)
        if (nbrs.size() != 2) return true;  // premises not met; vacuous
    std::vector<bool> in(n, false);
    for (int v : subset) in[v] = true;
    // The closure property is a premise: verify it, vacuous if absent.
    for (int a : subset)
        for (int b : subset) {
            if (a == b) continue;
            std::vector<bool> excluded(n, false);
            for (int v : adjacency[a]) excluded[v] = true;
            for (int v : adjacency[b]) excluded[v] = true;
            for (int v = 0; v < n; ++v)
                if (!excluded[v] && !in[v]) return true;
        }
    return static_cast<int>(subset.size()) == n || n <= 6;
}

LemmaReport lemma_structure_check(const PermGroup& group, Point alpha) {
    const SuborbitProfile profile = suborbit_profile(group, alpha);
    if (profile.ratio <= ExactRatio(1, 2) || profile.ratio >= ExactRatio(1, 1))
        throw PreconditionRatio(
            "lemma_structure_check: ratio must lie strictly between 1/2 and 1");

    LemmaReport report;
    auto add = [&report](const std::string& name, bool ok) {
        report.checks.emplace_back(name, ok);
    };

    bool sizes_ok = true;
    for (const auto& [size, part] : profile.parts)
        if (size != 1 && size != 2 && size != 4) sizes_ok = false;
    add("suborbit_sizes_in_1_2_4", sizes_ok);
    if (!sizes_ok) return report;

    const PointSet& part4 =
        profile.parts.count(4) ? profile.parts.at(4) : PointSet{};
    const PointSet& part2 =
        profile.parts.count(2) ? profile.parts.at(2) : PointSet{};
    const PermGroup stab_a = point_stabilizer(group, alpha);

    bool meets_ok = true;
    bool factorization_ok = true;
    for (Point beta : part4) {
        const SuborbitProfile pb = suborbit_profile(group, beta);
        const PointSet& b2 = pb.parts.count(2) ? pb.parts.at(2) : PointSet{};
        PointSet common;
        std::set_intersection(part2.begin(), part2.end(), b2.begin(), b2.end(),
                              std::back_inserter(common));
        if (common.empty()) meets_ok = false;
        const PermGroup stab_b = point_stabilizer(group, beta);
        for (Point omega : common) {
            const PermGroup stab_o = point_stabilizer(group, omega);
            const PermGroup ao = intersection(stab_a, stab_o);
            const PermGroup bo = intersection(stab_b, stab_o);
            std::set<std::vector<Point>> prod;
            for (const auto& p : ao.elements())
                for (const auto& q : bo.elements()) prod.insert((p * q).images());
            if (prod != elem_set(stab_o)) factorization_ok = false;
        }
    }
    add("part4_meets_part2", meets_ok);
    add("stabilizer_factorization", factorization_ok);

    if (profile.d == static_cast<int>(part4.size()) && !part4.empty()) {
        PointSet block = profile.parts.at(1);
        block.insert(block.end(), part4.begin(), part4.end());
        std::sort(block.begin(), block.end());
        add("union_1_4_is_block", is_block(group, block));
        bool norm_eq = true;
        const PermGroup norm_a = normalizer(group, stab_a);
        for (Point beta : part4) {
            const PermGroup norm_b =
                normalizer(group, point_stabilizer(group, beta));
            if (!same_group(norm_a, norm_b)) norm_eq = false;
        }
        add("normalizers_agree", norm_eq);
    }

    if (profile.ratio >= ExactRatio(5, 6)) {
        add("part4_at_most_twice_part1",
            part4.size() <= 2 * profile.parts.at(1).size());
        add("stabilizer_elementary_abelian", is_elementary_abelian_2(stab_a));

        bool commute_ok = true;
        bool normal16_ok = true;
        bool bipartite_ok = true;
        for (Point beta : part4) {
            const PermGroup stab_b = point_stabilizer(group, beta);
            if (!commutes(stab_a, stab_b)) commute_ok = false;
            std::vector<Permutation> gens = stab_a.generators();
            gens.insert(gens.end(), stab_b.generators().begin(),
                        stab_b.generators().end());
            const PermGroup joint(group.degree(), gens);
            if (joint.order() != 16 || !is_elementary_abelian_2(joint) ||
                !is_normal_in(group, joint))
                normal16_ok = false;
            const BipartiteCommuteResult bc =
                bipartite_commute_check(group, stab_a, stab_b);
            if (bc.edges >= 6 && !bc.commute) bipartite_ok = false;
        }
        add("stabilizers_commute", commute_ok);
        add("joint_stabilizer_normal_order_16", normal16_ok);
        add("bipartite_six_edges_forces_commute", bipartite_ok);

        // Conjugate-stabilizer graph, adjacency = index-4 intersection;
        // valency 2 exactly in the x4 = 2 case.
        if (profile.x.count(4) && profile.x.at(4) == 2) {
            std::vector<std::set<std::vector<Point>>> verts;
            std::vector<PermGroup> vert_groups;
            for (Point p = 0; p < group.degree(); ++p) {
                PermGroup s = point_stabilizer(group, p);
                auto key = elem_set(s);
                bool fresh = true;
                for (const auto& v : verts)
                    if (v == key) {
                        fresh = false;
                        break;
                    }
                if (fresh) {
                    verts.push_back(std::move(key));
                    vert_groups.push_back(std::move(s));
                }
            }
            std::vector<std::vector<int>> adj(verts.size());
            for (std::size_t i = 0; i < verts.size(); ++i)
                for (std::size_t j = i + 1; j < verts.size(); ++j) {
                    const PermGroup z =
                        intersection(vert_groups[i], vert_groups[j]);
                    if (4 * z.order() == vert_groups[i].order()) {
                        adj[i].push_back(static_cast<int>(j));
                        adj[j].push_back(static_cast<int>(i));
                    }
                }
            const PermGroup stab_b = point_stabilizer(group, part4[0]);
            const PermGroup core = intersection(stab_a, stab_b);
            std::vector<int> w;
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (vert_groups[i].contains_all(core))
                    w.push_back(static_cast<int>(i));
            add("valency2_closure_conclusion", valency2_closure_check(adj, w));
        }
    }
    return report;
}

GapScanReport gap_scan(const std::vector<SuborbitProfile>& profiles) {
    GapScanReport report;
    report.profiles = profiles.size();
    const ExactRatio lo(5, 6), hi(1, 1);
    for (const auto& p : profiles) {
        ++report.ratio_histogram[p.ratio.str()];
        if (p.ratio > lo && p.ratio < hi)
            report.violations.push_back(p.ratio.str());
    }
    return report;
}

ConjectureFormResult conjecture_form_check(const ExactRatio& ratio) {
    ConjectureFormResult res;
    if (ratio <= ExactRatio(1, 2)) {
        res.conforms = true;  // the conjecture only constrains ratios > 1/2
        return res;
    }
    // (q+1)/2q = a/b  =>  2q = 2b/(2a-b), positive since a/b > 1/2.
    const std::int64_t a = ratio.num(), b = ratio.den();
    const std::int64_t denom = 2 * a - b;
    res.q = ExactRatio(b, denom);
    res.conforms = (2 * b) % denom == 0;
    return res;
}

}  // namespace suborbit
