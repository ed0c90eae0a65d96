#include "suborbit/group_table.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "suborbit/errors.hpp"

namespace suborbit {

GroupTable::GroupTable(int order, std::vector<int> mul_flat)
    : order_(order), mul_(std::move(mul_flat)) {
    if (order_ < 1 || mul_.size() != static_cast<std::size_t>(order_) * order_)
        throw Error("GroupTable: bad table size");
    for (int v : mul_)
        if (v < 0 || v >= order_) throw Error("GroupTable: entry out of range");
    for (int x = 0; x < order_; ++x)
        if (mul(0, x) != x || mul(x, 0) != x)
            throw Error("GroupTable: element 0 is not the identity");

    inv_.assign(order_, -1);
    for (int x = 0; x < order_; ++x) {
        for (int y = 0; y < order_; ++y)
            if (mul(x, y) == 0 && mul(y, x) == 0) {
                inv_[x] = y;
                break;
            }
        if (inv_[x] < 0) throw Error("GroupTable: element without inverse");
    }

    // Associativity: exhaustive for small tables, seeded sampling above.
    auto check = [this](int a, int b, int c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error("GroupTable: multiplication is not associative");
    };
    if (order_ <= 64) {
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                for (int c = 0; c < order_; ++c) check(a, b, c);
    } else {
        std::mt19937 rng(0);
        std::uniform_int_distribution<int> pick(0, order_ - 1);
        for (int i = 0; i < 10000; ++i) check(pick(rng), pick(rng), pick(rng));
    }
}

int GroupTable::element_order(int a) const {
    int ord = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

bool GroupTable::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int GroupTable::exponent() const {
    int e = 1;
    for (int a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
    return e;
}

GroupTable from_regular_action(const PermGroup& group) {
    // Canonical element order is lexicographic on image arrays; the
    // identity is automatically first.
    std::vector<Permutation> elems = group.elements();
    std::sort(elems.begin(), elems.end());
    std::map<std::vector<Point>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index[elems[i].images()] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[a * n + b] = index.at((elems[a] * elems[b]).images());
    return GroupTable(n, std::move(mul));
}

GroupTable cyclic_group(int k) {
    if (k < 1) throw BadConstructorInput("cyclic_group: order must be >= 1");
    std::vector<int> mul(static_cast<std::size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) mul[a * k + b] = (a + b) % k;
    return GroupTable(k, std::move(mul));
}

GroupTable elementary_abelian_group(int k) {
    if (k < 0 || k > 16)
        throw BadConstructorInput("elementary_abelian_group: bad rank");
    const int n = 1 << k;
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = a ^ b;
    return GroupTable(n, std::move(mul));
}

GroupTable dihedral_group(int k) {
    if (k < 1) throw BadConstructorInput("dihedral_group: need k >= 1");
    // Element r^i s^j encoded as i + k*j; s r s = r^-1.
    const int n = 2 * k;
    auto enc = [k](int i, int j) { return ((i % k) + k) % k + k * j; };
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int i1 = 0; i1 < k; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < k; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // r^i1 s^j1 r^i2 s^j2 = r^(i1 +/- i2) s^(j1+j2)
                    const int i = j1 == 0 ? i1 + i2 : i1 - i2;
                    mul[enc(i1, j1) * n + enc(i2, j2)] = enc(i, (j1 + j2) % 2);
                }
    return GroupTable(n, std::move(mul));
}

GroupTable generalized_dicyclic_group(const GroupTable& a, int y) {
    const int n = a.order();
    if (!a.is_abelian() || n % 2 != 0 || a.exponent() <= 2)
        throw BadConstructorInput(
            "generalized_dicyclic_group: A must be abelian of even order and "
            "exponent > 2");
    if (y <= 0 || y >= n || a.mul(y, y) != 0)
        throw BadConstructorInput("generalized_dicyclic_group: y must be an involution");
    // Element a*x^j encoded as a + n*j, with x^2 = y and a^x = a^-1.
    const int m = 2 * n;
    std::vector<int> mul(static_cast<std::size_t>(m) * m);
    for (int a1 = 0; a1 < n; ++a1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int a2 = 0; a2 < n; ++a2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    const int b = j1 == 0 ? a2 : a.inv(a2);
                    int prod = a.mul(a1, b);
                    if (j1 == 1 && j2 == 1) prod = a.mul(prod, y);
                    mul[(a1 + n * j1) * m + (a2 + n * j2)] =
                        prod + n * ((j1 + j2) % 2);
                }
    return GroupTable(m, std::move(mul));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    const int na = a.order(), nb = b.order();
    const int n = na * nb;
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    auto enc = [na](int x, int y) { return x + na * y; };
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    mul[enc(x1, y1) * n + enc(x2, y2)] =
                        enc(a.mul(x1, x2), b.mul(y1, y2));
    return GroupTable(n, std::move(mul));
}

namespace {

bool is_central(const GroupTable& g, int z) {
    for (int x = 0; x < g.order(); ++x)
        if (g.mul(z, x) != g.mul(x, z)) return false;
    return true;
}

}  // namespace

GroupTable central_product(const GroupTable& a, const GroupTable& b, int za,
                           int zb) {
    const int na = a.order(), nb = b.order();
    auto bad = [&](int z, const GroupTable& g) {
        return z <= 0 || z >= g.order() || g.mul(z, z) != 0 || !is_central(g, z);
    };
    if (bad(za, a) || bad(zb, b))
        throw BadConstructorInput(
            "central_product: za, zb must be central involutions");
    // (x, y) identified with (x*za, y*zb); representative is the smaller pair.
    auto partner = [&](int x, int y) {
        return std::pair<int, int>{a.mul(x, za), b.mul(y, zb)};
    };
    std::map<std::pair<int, int>, int> rep_index;
    std::vector<std::pair<int, int>> reps;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            const std::pair<int, int> p{x, y};
            if (p < partner(x, y)) {
                rep_index[p] = static_cast<int>(reps.size());
                reps.push_back(p);
            }
        }
    auto index_of = [&](int x, int y) {
        const std::pair<int, int> p{x, y};
        const auto q = partner(x, y);
        return rep_index.at(std::min(p, q));
    };
    const int n = static_cast<int>(reps.size());
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mul[i * n + j] = index_of(a.mul(reps[i].first, reps[j].first),
                                      b.mul(reps[i].second, reps[j].second));
    return GroupTable(n, std::move(mul));
}

GroupTable semidirect_v_h(const std::vector<GF2Matrix>& h) {
    if (!is_closed(h)) throw NotClosed("semidirect_v_h: H is not closed");
    // Identity first so that element (0, I) lands at index 0.
    std::vector<GF2Matrix> hs;
    hs.push_back(GF2Matrix::identity());
    for (const auto& m : h)
        if (!(m == GF2Matrix::identity())) hs.push_back(m);
    std::map<std::uint16_t, int> hpos;
    for (std::size_t i = 0; i < hs.size(); ++i) hpos[hs[i].encode()] = static_cast<int>(i);
    std::vector<GF2Matrix> hinv;
    for (const auto& m : hs) hinv.push_back(m.inverse());

    const int nh = static_cast<int>(hs.size());
    const int n = 16 * nh;
    auto enc = [](int v, int hi) { return hi * 16 + v; };
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int h1 = 0; h1 < nh; ++h1)
        for (int v1 = 0; v1 < 16; ++v1)
            for (int h2 = 0; h2 < nh; ++h2)
                for (int v2 = 0; v2 < 16; ++v2) {
                    // (v1,h1)(v2,h2) = (v1 + v2*h1^-1, h1 h2)
                    const int v = v1 ^ apply(static_cast<GF2Vec>(v2), hinv[h1]);
                    const int hp = hpos.at((hs[h1] * hs[h2]).encode());
                    mul[enc(v1, h1) * n + enc(v2, h2)] = enc(v, hp);
                }
    return GroupTable(n, std::move(mul));
}

std::size_t subset_size(const ElementSubset& s) {
    std::size_t n = 0;
    for (bool b : s)
        if (b) ++n;
    return n;
}

bool is_subgroup(const GroupTable& group, const ElementSubset& s) {
    if (s.size() != static_cast<std::size_t>(group.order()) || !s[0]) return false;
    for (int a = 0; a < group.order(); ++a) {
        if (!s[a]) continue;
        if (!s[group.inv(a)]) return false;
        for (int b = 0; b < group.order(); ++b)
            if (s[b] && !s[group.mul(a, b)]) return false;
    }
    return true;
}

ElementSubset trivial_subgroup(const GroupTable& group) {
    ElementSubset s(group.order(), false);
    s[0] = true;
    return s;
}

ElementSubset full_subgroup(const GroupTable& group) {
    return ElementSubset(group.order(), true);
}

ElementSubset generated_subgroup(const GroupTable& group,
                                 const std::vector<int>& gens) {
    ElementSubset in(group.order(), false);
    std::vector<int> queue{0};
    in[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int g : gens) {
            const int next = group.mul(queue[head], g);
            if (!in[next]) {
                in[next] = true;
                queue.push_back(next);
            }
        }
    return in;
}

PermGroup coset_action(const GroupTable& group, const ElementSubset& sub) {
    if (!is_subgroup(group, sub))
        throw NotASubgroup("coset_action: sub is not a subgroup");
    const int n = group.order();
    // Coset of g is {s*g}; cosets numbered by ascending minimal element,
    // which puts the subgroup itself (the base point) at 0.
    std::vector<int> coset_of(n, -1);
    int num_cosets = 0;
    for (int g = 0; g < n; ++g) {
        if (coset_of[g] >= 0) continue;
        for (int s = 0; s < n; ++s)
            if (sub[s]) coset_of[group.mul(s, g)] = num_cosets;
        ++num_cosets;
    }
    std::vector<int> rep(num_cosets, -1);
    for (int g = n - 1; g >= 0; --g) rep[coset_of[g]] = g;

    std::set<std::vector<Point>> images;
    for (int g = 0; g < n; ++g) {
        std::vector<Point> im(num_cosets);
        for (int c = 0; c < num_cosets; ++c)
            im[c] = static_cast<Point>(coset_of[group.mul(rep[c], g)]);
        images.insert(std::move(im));
    }
    std::vector<Permutation> elems;
    for (const auto& im : images) elems.emplace_back(im);
    return PermGroup::from_elements(static_cast<Point>(num_cosets),
                                    std::move(elems));
}

ElementSubset involution_set(const GroupTable& group) {
    ElementSubset s(group.order(), false);
    for (int x = 0; x < group.order(); ++x)
        if (group.mul(x, x) == 0) s[x] = true;
    return s;
}

namespace {

// All index-2 subgroups: preimages of hyperplanes of G modulo the
// subgroup generated by squares and commutators.
std::vector<ElementSubset> index2_subgroups(const GroupTable& g) {
    const int n = g.order();
    std::vector<int> gens;
    for (int a = 0; a < n; ++a) {
        gens.push_back(g.mul(a, a));
        for (int b = 0; b < n; ++b)
            gens.push_back(g.mul(g.inv(a), g.mul(g.inv(b), g.mul(a, b))));
    }
    const ElementSubset d = generated_subgroup(g, gens);

    // Cosets of D; the quotient is elementary abelian of order 2^k.
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        for (int s = 0; s < n; ++s)
            if (d[s]) coset_of[g.mul(s, x)] = c;
        reps.push_back(x);
    }
    const int q = static_cast<int>(reps.size());
    // Assign GF(2)-coordinates to cosets by a greedy basis.
    std::vector<int> vec(q, -1);
    vec[coset_of[0]] = 0;
    std::vector<int> basis_rep;
    std::vector<int> span{coset_of[0]};
    for (int c = 0; c < q; ++c) {
        if (vec[c] >= 0) continue;
        const int bit = static_cast<int>(basis_rep.size());
        basis_rep.push_back(reps[c]);
        std::vector<int> added;
        for (int old : span) {
            const int nc = coset_of[g.mul(reps[old], reps[c])];
            vec[nc] = vec[old] | (1 << bit);
            added.push_back(nc);
        }
        span.insert(span.end(), added.begin(), added.end());
    }
    const int k = static_cast<int>(basis_rep.size());

    std::vector<ElementSubset> out;
    for (int phi = 1; phi < (1 << k); ++phi) {
        ElementSubset s(n, false);
        for (int x = 0; x < n; ++x)
            if (std::popcount(static_cast<unsigned>(phi & vec[coset_of[x]])) % 2 == 0)
                s[x] = true;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::optional<DicyclicWitness> is_generalized_dicyclic(const GroupTable& group) {
    const int n = group.order();
    if (n % 4 != 0) return std::nullopt;
    for (const ElementSubset& a : index2_subgroups(group)) {
        // A must be abelian of exponent > 2.
        bool abelian = true;
        int exp = 1;
        for (int x = 0; x < n && abelian; ++x) {
            if (!a[x]) continue;
            exp = std::lcm(exp, group.element_order(x));
            for (int y = x + 1; y < n; ++y)
                if (a[y] && group.mul(x, y) != group.mul(y, x)) {
                    abelian = false;
                    break;
                }
        }
        if (!abelian || exp <= 2) continue;
        for (int x = 0; x < n; ++x) {
            if (a[x]) continue;
            const int y = group.mul(x, x);
            if (y == 0 || !a[y] || group.mul(y, y) != 0) continue;
            bool inverts = true;
            for (int e = 0; e < n && inverts; ++e)
                if (a[e] &&
                    group.mul(group.inv(x), group.mul(e, x)) != group.inv(e))
                    inverts = false;
            if (inverts) return DicyclicWitness{a, y, x};
        }
    }
    return std::nullopt;
}

namespace {

// Greedy generating sequence: repeatedly adjoin the smallest outside element.
std::vector<int> generating_sequence(const GroupTable& g) {
    std::vector<int> gens;
    ElementSubset span = generated_subgroup(g, gens);
    while (subset_size(span) < static_cast<std::size_t>(g.order())) {
        int pick = -1;
        for (int x = 1; x < g.order(); ++x)
            if (!span[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        span = generated_subgroup(g, gens);
    }
    return gens;
}

// Extends a partial map that is defined on a generating set of its domain
// closure; returns false on any inconsistency.
bool close_partial_map(const GroupTable& a, const GroupTable& b,
                       std::vector<int>& map, std::vector<bool>& used) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < a.order(); ++x) {
            if (map[x] < 0) continue;
            for (int y = 0; y < a.order(); ++y) {
                if (map[y] < 0) continue;
                const int z = a.mul(x, y);
                const int mz = b.mul(map[x], map[y]);
                if (map[z] < 0) {
                    if (used[mz]) return false;
                    map[z] = mz;
                    used[mz] = true;
                    grew = true;
                } else if (map[z] != mz) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool iso_backtrack(const GroupTable& a, const GroupTable& b,
                   const std::vector<int>& gens, std::size_t pos,
                   const std::vector<int>& map, const std::vector<bool>& used) {
    if (pos == gens.size()) {
        for (int x = 0; x < a.order(); ++x)
            if (map[x] < 0) return false;
        return true;
    }
    const int g = gens[pos];
    for (int img = 0; img < b.order(); ++img) {
        if (used[img] || b.element_order(img) != a.element_order(g)) continue;
        std::vector<int> next_map = map;
        std::vector<bool> next_used = used;
        next_map[g] = img;
        next_used[img] = true;
        if (close_partial_map(a, b, next_map, next_used) &&
            iso_backtrack(a, b, gens, pos + 1, next_map, next_used))
            return true;
    }
    return false;
}

}  // namespace

bool brute_isomorphic(const GroupTable& a, const GroupTable& b) {
    if (a.order() != b.order()) return false;
    if (a.order() > 64)
        throw OrderTooLarge("brute_isomorphic: capped at order 64");
    std::vector<int> oa, ob;
    for (int x = 0; x < a.order(); ++x) {
        oa.push_back(a.element_order(x));
        ob.push_back(b.element_order(x));
    }
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return false;

    const std::vector<int> gens = generating_sequence(a);
    std::vector<int> map(a.order(), -1);
    std::vector<bool> used(b.order(), false);
    map[0] = 0;
    used[0] = true;
    return iso_backtrack(a, b, gens, 0, map, used);
}

GroupTable table_from_matrix_group(const std::vector<GF2Matrix>& h) {
    if (!is_closed(h)) throw NotClosed("table_from_matrix_group: not closed");
    // Identity first, rest in ascending encode order.
    std::vector<GF2Matrix> elems;
    elems.push_back(GF2Matrix::identity());
    std::vector<GF2Matrix> rest;
    for (const auto& m : h)
        if (!(m == GF2Matrix::identity())) rest.push_back(m);
    std::sort(rest.begin(), rest.end());
    elems.insert(elems.end(), rest.begin(), rest.end());
    std::map<std::uint16_t, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index[elems[i].encode()] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mul[i * n + j] = index.at((elems[i] * elems[j]).encode());
    return GroupTable(n, std::move(mul));
}

}  // namespace suborbit
