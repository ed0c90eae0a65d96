#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "suborbit/rational.hpp"

namespace suborbit {

// Vector in GF(2)^4, bit i = coordinate on e_{i+1}.
using GF2Vec = std::uint8_t;

// 4x4 matrix over GF(2), stored by rows. Vectors are rows and act from the
// left: v * M = xor of rows of M selected by the bits of v.
struct GF2Matrix {
    std::array<std::uint8_t, 4> row{0, 0, 0, 0};

    static GF2Matrix identity();
    static GF2Matrix decode(std::uint16_t code);
    std::uint16_t encode() const;

    GF2Matrix operator*(const GF2Matrix& other) const;
    GF2Matrix inverse() const;
    GF2Matrix transpose() const;
    bool invertible() const;

    bool operator==(const GF2Matrix& o) const { return row == o.row; }
    bool operator<(const GF2Matrix& o) const { return encode() < o.encode(); }
};

GF2Vec apply(GF2Vec v, const GF2Matrix& m);

// Subspace of GF(2)^4 with a canonical reduced-row-echelon basis. The
// 16-bit membership mask makes equality and intersection dimension exact.
struct GF2Subspace {
    std::uint16_t members = 1;              // bit v set iff v is in the subspace
    std::vector<GF2Vec> basis;              // RREF, unique per subspace
    int dim = 0;

    static GF2Subspace span(const std::vector<GF2Vec>& vectors);
    GF2Subspace image(const GF2Matrix& m) const;
    int intersection_dim(const GF2Subspace& other) const;
    bool operator==(const GF2Subspace& o) const { return members == o.members; }
    bool operator<(const GF2Subspace& o) const { return members < o.members; }
};

GF2Subspace subspace_w();  // W = <e1, e2>

const std::vector<GF2Matrix>& enumerate_gl42();       // order 20160
std::vector<GF2Subspace> enumerate_2subspaces();      // 35 planes
const std::vector<GF2Matrix>& stabilizer_of_w();      // K, order 576

std::vector<GF2Matrix> close_matrices(const std::vector<GF2Matrix>& gens);
bool is_closed(const std::vector<GF2Matrix>& h);

ExactRatio orbit_ratio(const std::vector<GF2Matrix>& h);
bool selection_property(const std::vector<GF2Matrix>& h);

struct Theorem2Groups {
    std::vector<GF2Matrix> h12;  // = Alt(4), closed
    std::vector<GF2Matrix> h24;  // = Sym(4), closed
};
const Theorem2Groups& theorem2_groups();

struct KConjugacyResult {
    bool conjugate = false;
    GF2Matrix witness;
};
KConjugacyResult k_conjugate(const std::vector<GF2Matrix>& h1,
                             const std::vector<GF2Matrix>& h2);

std::vector<GF2Matrix> gl42_class_representatives();

struct ScanReport {
    std::size_t pairs_scanned = 0;
    std::size_t distinct_subgroups = 0;
    std::map<std::string, std::size_t> ratio_histogram;  // over selected subgroups
    std::vector<std::string> violations;                 // ratios in (5/6, 1)
    // One representative per K-conjugacy class of ratio-5/6 subgroups.
    std::vector<std::vector<GF2Matrix>> extremal_classes;
};

// Closes <c, g> for every conjugacy-class representative c and every
// g in GL4(2), keeps the subgroups with the selection property, and
// tabulates their orbit ratios. Covers 2-generated subgroups only; the
// report banner in the CLI states this coverage gap.
ScanReport two_generated_scan(unsigned threads = 0);

}  // namespace suborbit
