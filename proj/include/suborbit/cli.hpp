#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "suborbit/census.hpp"
#include "suborbit/perm.hpp"
#include "suborbit/suborbit.hpp"

namespace suborbit {

// Seeded sampler: transitive 2-generated subgroups of Sym(4..8).
// Deterministic for a fixed seed.
std::vector<PermGroup> sample_groups(std::size_t count, std::uint64_t seed);
std::vector<SuborbitProfile> sample_profiles(std::size_t count,
                                             std::uint64_t seed);

// Stock (G, R) pairs with R regular and G proper, used by the census
// subcommand's self-test and by the test suite.
struct HarnessPair {
    std::string name;
    PermGroup ambient;
    std::vector<Permutation> regular_gens;
};
std::vector<HarnessPair> standard_harness();

// Dispatch for: analyze, gap-scan, conjecture, verify-gl42, census,
// construct. Reports go to `out` as JSON lines, a human summary to `err`.
// Exit code 0 = pass, 1 = theorem violation, 2 = usage or parse error.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

}  // namespace suborbit
