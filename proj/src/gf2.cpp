#include "suborbit/gf2.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "suborbit/errors.hpp"

namespace suborbit {

GF2Matrix GF2Matrix::identity() {
    GF2Matrix m;
    for (int i = 0; i < 4; ++i) m.row[i] = static_cast<std::uint8_t>(1u << i);
    return m;
}

GF2Matrix GF2Matrix::decode(std::uint16_t code) {
    GF2Matrix m;
    for (int i = 0; i < 4; ++i) m.row[i] = static_cast<std::uint8_t>((code >> (4 * i)) & 0xF);
    return m;
}

std::uint16_t GF2Matrix::encode() const {
    std::uint16_t code = 0;
    for (int i = 0; i < 4; ++i) code |= static_cast<std::uint16_t>(row[i]) << (4 * i);
    return code;
}

GF2Vec apply(GF2Vec v, const GF2Matrix& m) {
    GF2Vec out = 0;
    for (int i = 0; i < 4; ++i)
        if (v & (1u << i)) out ^= m.row[i];
    return out;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& other) const {
    GF2Matrix out;
    for (int i = 0; i < 4; ++i) out.row[i] = apply(row[i], other);
    return out;
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (row[i] & (1u << j)) out.row[j] |= static_cast<std::uint8_t>(1u << i);
    return out;
}

bool GF2Matrix::invertible() const {
    std::array<std::uint8_t, 4> rows = row;
    int rank = 0;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int i = rank; i < 4; ++i)
            if (rows[i] & (1u << col)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < 4; ++i)
            if (i != rank && (rows[i] & (1u << col))) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank == 4;
}

GF2Matrix GF2Matrix::inverse() const {
    // Gauss-Jordan on [M | I].
    std::array<std::uint8_t, 4> a = row;
    GF2Matrix inv = identity();
    int rank = 0;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int i = rank; i < 4; ++i)
            if (a[i] & (1u << col)) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw Error("GF2Matrix::inverse: singular matrix");
        std::swap(a[rank], a[pivot]);
        std::swap(inv.row[rank], inv.row[pivot]);
        for (int i = 0; i < 4; ++i)
            if (i != rank && (a[i] & (1u << col))) {
                a[i] ^= a[rank];
                inv.row[i] ^= inv.row[rank];
            }
        ++rank;
    }
    return inv;
}

GF2Subspace GF2Subspace::span(const std::vector<GF2Vec>& vectors) {
    // Row reduce to RREF; membership mask from all linear combinations.
    std::vector<GF2Vec> basis;
    for (GF2Vec v : vectors) {
        GF2Vec w = v;
        for (GF2Vec b : basis) {
            const int lead = std::bit_width(static_cast<unsigned>(b)) - 1;
            if (w & (1u << lead)) w ^= b;
        }
        if (w) basis.push_back(w);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    // Back-substitute for the reduced form.
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const int lead = std::bit_width(static_cast<unsigned>(basis[i])) - 1;
            if (basis[j] & (1u << lead)) basis[j] ^= basis[i];
        }
    GF2Subspace s;
    s.basis = basis;
    s.dim = static_cast<int>(basis.size());
    s.members = 1;
    for (unsigned combo = 0; combo < (1u << basis.size()); ++combo) {
        GF2Vec v = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (combo & (1u << i)) v ^= basis[i];
        s.members |= static_cast<std::uint16_t>(1u << v);
    }
    return s;
}

GF2Subspace GF2Subspace::image(const GF2Matrix& m) const {
    std::vector<GF2Vec> imgs;
    for (GF2Vec b : basis) imgs.push_back(apply(b, m));
    return span(imgs);
}

int GF2Subspace::intersection_dim(const GF2Subspace& other) const {
    const int common = std::popcount(static_cast<unsigned>(members & other.members));
    // Intersection is a subspace, so the common count is a power of two.
    int d = 0;
    while ((1 << (d + 1)) <= common) ++d;
    return d;
}

GF2Subspace subspace_w() { return GF2Subspace::span({0b0001, 0b0010}); }

const std::vector<GF2Matrix>& enumerate_gl42() {
    static const std::vector<GF2Matrix> all = [] {
        std::vector<GF2Matrix> out;
        out.reserve(20160);
        for (std::uint32_t code = 0; code < 65536; ++code) {
            GF2Matrix m = GF2Matrix::decode(static_cast<std::uint16_t>(code));
            if (m.invertible()) out.push_back(m);
        }
        return out;
    }();
    return all;
}

std::vector<GF2Subspace> enumerate_2subspaces() {
    std::set<std::uint16_t> seen;
    std::vector<GF2Subspace> out;
    for (GF2Vec a = 1; a < 16; ++a)
        for (GF2Vec b = 1; b < 16; ++b) {
            if (a == b) continue;
            GF2Subspace s = GF2Subspace::span({a, b});
            if (s.dim == 2 && seen.insert(s.members).second) out.push_back(s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<GF2Matrix>& stabilizer_of_w() {
    static const std::vector<GF2Matrix> k = [] {
        const GF2Subspace w = subspace_w();
        std::vector<GF2Matrix> out;
        for (const auto& m : enumerate_gl42())
            if (w.image(m) == w) out.push_back(m);
        return out;
    }();
    return k;
}

std::vector<GF2Matrix> close_matrices(const std::vector<GF2Matrix>& gens) {
    std::vector<bool> seen(65536, false);
    std::vector<std::uint16_t> queue;
    const std::uint16_t id = GF2Matrix::identity().encode();
    seen[id] = true;
    queue.push_back(id);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const GF2Matrix cur = GF2Matrix::decode(queue[head]);
        for (const auto& g : gens) {
            const std::uint16_t next = (cur * g).encode();
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    std::vector<GF2Matrix> out;
    out.reserve(queue.size());
    for (std::uint16_t c : queue) out.push_back(GF2Matrix::decode(c));
    return out;
}

bool is_closed(const std::vector<GF2Matrix>& h) {
    std::set<std::uint16_t> codes;
    for (const auto& m : h) codes.insert(m.encode());
    if (!codes.count(GF2Matrix::identity().encode())) return false;
    for (const auto& a : h)
        for (const auto& b : h)
            if (!codes.count((a * b).encode())) return false;
    return true;
}

namespace {

std::vector<std::uint16_t> subspace_orbit(const std::vector<GF2Matrix>& h) {
    const GF2Subspace w = subspace_w();
    std::set<std::uint16_t> masks;
    for (const auto& m : h) masks.insert(w.image(m).members);
    return {masks.begin(), masks.end()};
}

int mask_rank(std::uint16_t members) {
    std::vector<GF2Vec> vecs;
    for (GF2Vec v = 1; v < 16; ++v)
        if (members & (1u << v)) vecs.push_back(v);
    return GF2Subspace::span(vecs).dim;
}

}  // namespace

ExactRatio orbit_ratio(const std::vector<GF2Matrix>& h) {
    if (!is_closed(h)) throw NotClosed("orbit_ratio: H is not a closed subgroup");
    const std::uint16_t wmask = subspace_w().members;
    const auto orb = subspace_orbit(h);
    std::int64_t close = 0;
    for (std::uint16_t mask : orb)
        if (std::popcount(static_cast<unsigned>(mask & wmask)) >= 2) ++close;
    return ExactRatio(close, static_cast<std::int64_t>(orb.size()));
}

bool selection_property(const std::vector<GF2Matrix>& h) {
    if (!is_closed(h)) throw NotClosed("selection_property: H is not closed");
    const auto orb = subspace_orbit(h);
    std::uint16_t common = 0xFFFF;
    std::uint16_t unionmask = 0;
    for (std::uint16_t mask : orb) {
        common &= mask;
        unionmask |= mask;
    }
    return mask_rank(unionmask) == 4 && common == 0x0001;
}

const Theorem2Groups& theorem2_groups() {
    // Generator matrices transcribed row by row. The intended action
    // convention (rows from the right vs columns from the left) is pinned
    // at first use: the reading must reproduce orders 12 and 24 and orbit
    // ratio 5/6, and exactly one of the two readings does.
    static const Theorem2Groups groups = [] {
        // Row entries listed column 1 first; bit j holds column j+1.
        const GF2Matrix m1 = {{0b1000, 0b0011, 0b0100, 0b1001}};  // 0001/1100/0010/1001
        const GF2Matrix m2 = {{0b1111, 0b0100, 0b0010, 0b1000}};  // 1111/0010/0100/0001
        const GF2Matrix m3 = {{0b0001, 0b0010, 0b1011, 0b0111}};  // 1000/0100/1101/1110
        auto build = [](const GF2Matrix& a, const GF2Matrix& b, const GF2Matrix& c) {
            Theorem2Groups g;
            g.h12 = close_matrices({a, b});
            g.h24 = close_matrices({a, b, c});
            return g;
        };
        auto valid = [](const Theorem2Groups& g) {
            return g.h12.size() == 12 && g.h24.size() == 24 &&
                   orbit_ratio(g.h12) == ExactRatio(5, 6) &&
                   orbit_ratio(g.h24) == ExactRatio(5, 6);
        };
        Theorem2Groups as_printed = build(m1, m2, m3);
        if (valid(as_printed)) return as_printed;
        Theorem2Groups transposed =
            build(m1.transpose(), m2.transpose(), m3.transpose());
        if (valid(transposed)) return transposed;
        throw Error("theorem2_groups: neither reading of the generator "
                    "matrices reproduces the expected orders and ratio");
    }();
    return groups;
}

namespace {

std::vector<std::uint16_t> encode_sorted(const std::vector<GF2Matrix>& h) {
    std::vector<std::uint16_t> codes;
    codes.reserve(h.size());
    for (const auto& m : h) codes.push_back(m.encode());
    std::sort(codes.begin(), codes.end());
    return codes;
}

}  // namespace

KConjugacyResult k_conjugate(const std::vector<GF2Matrix>& h1,
                             const std::vector<GF2Matrix>& h2) {
    if (!is_closed(h1) || !is_closed(h2))
        throw NotClosed("k_conjugate: inputs must be closed subgroups");
    KConjugacyResult res;
    if (h1.size() != h2.size()) return res;
    const auto target = encode_sorted(h2);
    for (const auto& k : stabilizer_of_w()) {
        const GF2Matrix kinv = k.inverse();
        std::vector<std::uint16_t> conj;
        conj.reserve(h1.size());
        for (const auto& m : h1) conj.push_back((kinv * m * k).encode());
        std::sort(conj.begin(), conj.end());
        if (conj == target) {
            res.conjugate = true;
            res.witness = k;
            return res;
        }
    }
    return res;
}

namespace {

// Two standard generators: the basis 4-cycle and a single transvection.
// That they generate all of GL4(2) is asserted once at first use.
const std::vector<GF2Matrix>& gl42_generators() {
    static const std::vector<GF2Matrix> gens = [] {
        const GF2Matrix cycle = {{0b0010, 0b0100, 0b1000, 0b0001}};
        const GF2Matrix transvection = {{0b0011, 0b0010, 0b0100, 0b1000}};
        std::vector<GF2Matrix> g{cycle, transvection};
        if (close_matrices(g).size() != 20160)
            throw Error("gl42_generators: generating pair does not close to GL4(2)");
        return g;
    }();
    return gens;
}

}  // namespace

std::vector<GF2Matrix> gl42_class_representatives() {
    const auto& gens = gl42_generators();
    std::vector<bool> assigned(65536, false);
    std::vector<GF2Matrix> reps;
    for (const auto& x : enumerate_gl42()) {
        if (assigned[x.encode()]) continue;
        reps.push_back(x);
        // Conjugation orbit via the two group generators.
        std::vector<std::uint16_t> queue{x.encode()};
        assigned[x.encode()] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const GF2Matrix cur = GF2Matrix::decode(queue[head]);
            for (const auto& g : gens) {
                const std::uint16_t next = (g.inverse() * cur * g).encode();
                if (!assigned[next]) {
                    assigned[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    return reps;
}

namespace {

struct PairRowTable {
    // v -> v*g for all 16 row values; one product is then 4 lookups.
    std::array<std::uint8_t, 16> map{};
    void build(const GF2Matrix& g) {
        for (GF2Vec v = 0; v < 16; ++v) map[v] = apply(v, g);
    }
    std::uint16_t mul(std::uint16_t code) const {
        return static_cast<std::uint16_t>(
            map[code & 0xF] | (map[(code >> 4) & 0xF] << 4) |
            (map[(code >> 8) & 0xF] << 8) | (map[(code >> 12) & 0xF] << 12));
    }
};

std::uint64_t fnv1a(const std::vector<std::uint16_t>& codes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint16_t c : codes) {
        h ^= static_cast<std::uint64_t>(c) + 1;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

ScanReport two_generated_scan(unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const auto reps = gl42_class_representatives();
    const auto& all = enumerate_gl42();

    struct Task {
        std::uint16_t c;
        std::uint16_t g;
    };
    std::vector<Task> tasks;
    tasks.reserve(reps.size() * all.size());
    for (const auto& c : reps)
        for (const auto& g : all) tasks.push_back({c.encode(), g.encode()});

    std::mutex merge_mutex;
    std::unordered_map<std::uint64_t, std::vector<std::uint16_t>> distinct;
    std::atomic<std::size_t> next_task{0};
    const std::size_t chunk = 1024;

    auto worker = [&] {
        std::vector<std::uint64_t> seen(1024);
        std::vector<std::uint16_t> queue;
        queue.reserve(20160);
        std::unordered_map<std::uint64_t, std::vector<std::uint16_t>> local;
        PairRowTable ta, tb;
        for (;;) {
            const std::size_t begin = next_task.fetch_add(chunk);
            if (begin >= tasks.size()) break;
            const std::size_t end = std::min(begin + chunk, tasks.size());
            for (std::size_t i = begin; i < end; ++i) {
                const GF2Matrix a = GF2Matrix::decode(tasks[i].c);
                const GF2Matrix b = GF2Matrix::decode(tasks[i].g);
                ta.build(a);
                tb.build(b);
                std::memset(seen.data(), 0, seen.size() * sizeof(std::uint64_t));
                queue.clear();
                const std::uint16_t id = GF2Matrix::identity().encode();
                seen[id >> 6] |= 1ULL << (id & 63);
                queue.push_back(id);
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    const std::uint16_t cur = queue[head];
                    for (const PairRowTable* t : {&ta, &tb}) {
                        const std::uint16_t next = t->mul(cur);
                        if (!(seen[next >> 6] & (1ULL << (next & 63)))) {
                            seen[next >> 6] |= 1ULL << (next & 63);
                            queue.push_back(next);
                        }
                    }
                }
                // Sweep the bitset in order: sorted element list for free.
                std::vector<std::uint16_t> codes;
                codes.reserve(queue.size());
                for (std::size_t w = 0; w < seen.size(); ++w) {
                    std::uint64_t word = seen[w];
                    while (word) {
                        const int bit = std::countr_zero(word);
                        codes.push_back(static_cast<std::uint16_t>(w * 64 + bit));
                        word &= word - 1;
                    }
                }
                const std::uint64_t h = fnv1a(codes);
                auto it = local.find(h);
                if (it == local.end())
                    local.emplace(h, std::move(codes));
                else if (it->second != codes)
                    throw Error("two_generated_scan: subgroup hash collision");
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (auto& [h, codes] : local) {
            auto it = distinct.find(h);
            if (it == distinct.end())
                distinct.emplace(h, std::move(codes));
            else if (it->second != codes)
                throw Error("two_generated_scan: subgroup hash collision");
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    ScanReport report;
    report.pairs_scanned = tasks.size();
    report.distinct_subgroups = distinct.size();

    // Deterministic processing order.
    std::vector<const std::vector<std::uint16_t>*> subgroups;
    subgroups.reserve(distinct.size());
    for (const auto& [h, codes] : distinct) subgroups.push_back(&codes);
    std::sort(subgroups.begin(), subgroups.end(),
              [](const auto* x, const auto* y) { return *x < *y; });

    std::vector<std::vector<GF2Matrix>> extremal;
    for (const auto* codes : subgroups) {
        std::vector<GF2Matrix> h;
        h.reserve(codes->size());
        for (std::uint16_t c : *codes) h.push_back(GF2Matrix::decode(c));
        if (!selection_property(h)) continue;
        const ExactRatio r = orbit_ratio(h);
        ++report.ratio_histogram[r.str()];
        if (r > ExactRatio(5, 6) && r < ExactRatio(1, 1))
            report.violations.push_back(r.str());
        if (r == ExactRatio(5, 6)) extremal.push_back(std::move(h));
    }

    for (auto& h : extremal) {
        bool known = false;
        for (const auto& cls : report.extremal_classes)
            if (k_conjugate(h, cls).conjugate) {
                known = true;
                break;
            }
        if (!known) report.extremal_classes.push_back(std::move(h));
    }
    return report;
}

}  // namespace suborbit
