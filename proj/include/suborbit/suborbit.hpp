#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suborbit/perm.hpp"
#include "suborbit/rational.hpp"

namespace suborbit {

// Partition of the domain by stabilizer-orbit size at a base point.
struct SuborbitProfile {
    Point alpha = 0;
    std::map<int, PointSet> parts;  // suborbit size -> points in such suborbits
    int d = 0;                      // |parts[1]|
    std::map<int, int> x;           // size i -> |parts[i]| / d
    ExactRatio ratio;               // (|parts[1]| + |parts[2]|) / |domain|
};

SuborbitProfile suborbit_profile(const PermGroup& group, Point alpha);

// Checks that the fixed-point set of the stabilizer is the normalizer orbit
// of the base point and a block. This is a theorem; false means a bug.
bool fixed_block_check(const PermGroup& group, Point alpha);

enum class TrichotomyTag {
    regular,
    stabilizer_order_2,
    elementary_abelian_index_2,
    not_applicable,
};

struct TrichotomyVerdict {
    TrichotomyTag tag = TrichotomyTag::not_applicable;
    std::optional<PermGroup> witness;  // the normal subgroup N for family (c)
};

TrichotomyVerdict bergman_lenstra_classify(const PermGroup& group);
std::string to_string(TrichotomyTag tag);

struct LemmaReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_pass() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

// Structure checks for transitive groups with 1/2 < ratio < 1: suborbit
// sizes restricted to {1,2,4}, the stabilizer factorization, and (at
// ratio >= 5/6) the elementary abelian order-16 normal subgroup.
LemmaReport lemma_structure_check(const PermGroup& group, Point alpha);

// Standalone predicate: bipartite subgroup-product graph on the proper
// subgroups between Z = X cap Y and X resp. Y; at least 6 edges forces
// X and Y to commute. Returns {edges, commute}.
struct BipartiteCommuteResult {
    int edges = 0;
    bool commute = false;
};
BipartiteCommuteResult bipartite_commute_check(const PermGroup& ambient,
                                               const PermGroup& x,
                                               const PermGroup& y);

// Standalone predicate: for a vertex-transitive valency-2 graph and a set
// containing two adjacent vertices and closed under "complement of two
// neighbourhoods", either the set is everything or the graph has <= 6
// vertices. Returns false only if the stated conclusion fails.
bool valency2_closure_check(const std::vector<std::vector<int>>& adjacency,
                            const std::vector<int>& subset);

struct GapScanReport {
    std::size_t profiles = 0;
    std::map<std::string, std::size_t> ratio_histogram;
    std::vector<std::string> violations;  // ratios strictly inside (5/6, 1)
};

GapScanReport gap_scan(const std::vector<SuborbitProfile>& profiles);

struct ConjectureFormResult {
    bool conforms = false;
    std::optional<ExactRatio> q;
};

// Tests whether ratio = (q+1)/2q with 2q a positive integer; ratios <= 1/2
// conform vacuously.
ConjectureFormResult conjecture_form_check(const ExactRatio& ratio);

}  // namespace suborbit
