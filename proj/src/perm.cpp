#include "suborbit/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "suborbit/errors.hpp"

namespace suborbit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error("Permutation: degree must be >= 1");
    std::vector<bool> seen(images_.size(), false);
    for (Point v : images_) {
        if (v >= images_.size() || seen[v])
            throw Error("Permutation: image array is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(Point degree) {
    std::vector<Point> im(degree);
    for (Point p = 0; p < degree; ++p) im[p] = p;
    return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& other) const {
    std::vector<Point> im(images_.size());
    for (Point p = 0; p < images_.size(); ++p) im[p] = other.images_[images_[p]];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<Point> im(images_.size());
    for (Point p = 0; p < images_.size(); ++p) im[images_[p]] = p;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (Point p = 0; p < images_.size(); ++p)
        if (images_[p] != p) return false;
    return true;
}

Permutation perm_from_cycles(Point degree,
                             const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> im(degree);
    for (Point p = 0; p < degree; ++p) im[p] = p;
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i)
            im[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return Permutation(std::move(im));
}

std::size_t default_closure_cap() {
    if (const char* env = std::getenv("SUBORBIT_LAB_CLOSURE_CAP")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    return 200000;
}

std::vector<Permutation> generate_elements(
    const std::vector<Permutation>& generators, std::size_t cap) {
    if (cap < 1) throw Error("generate_elements: cap must be >= 1");
    Point degree = generators.empty() ? 1 : generators[0].degree();
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw Error("generate_elements: mixed degrees in generating set");

    std::vector<Permutation> out;
    std::set<std::vector<Point>> seen;
    std::deque<std::size_t> frontier;
    out.push_back(Permutation::identity(degree));
    seen.insert(out.back().images());
    frontier.push_back(0);
    while (!frontier.empty()) {
        const std::size_t idx = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            Permutation next = out[idx] * g;
            if (seen.insert(next.images()).second) {
                if (out.size() >= cap)
                    throw ClosureCapExceeded(
                        "generate_elements: closure exceeds cap " +
                        std::to_string(cap));
                out.push_back(std::move(next));
                frontier.push_back(out.size() - 1);
            }
        }
    }
    return out;
}

PermGroup::PermGroup(Point degree, std::vector<Permutation> generators,
                     std::size_t cap)
    : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.degree() != degree_)
            throw Error("PermGroup: generator degree mismatch");
    if (generators_.empty())
        elements_ = {Permutation::identity(degree_)};
    else
        elements_ = generate_elements(generators_, cap);
}

PermGroup PermGroup::from_elements(Point degree,
                                   std::vector<Permutation> elements) {
    PermGroup g;
    g.degree_ = degree;
    g.elements_ = std::move(elements);
    bool has_identity = false;
    for (const auto& e : g.elements_) {
        if (e.degree() != degree) throw Error("from_elements: degree mismatch");
        if (e.is_identity()) has_identity = true;
    }
    if (!has_identity) throw Error("from_elements: identity missing");
    g.generators_ = g.elements_;
    return g;
}

bool PermGroup::contains(const Permutation& g) const {
    for (const auto& e : elements_)
        if (e == g) return true;
    return false;
}

bool PermGroup::contains_all(const PermGroup& sub) const {
    std::set<std::vector<Point>> mine;
    for (const auto& e : elements_) mine.insert(e.images());
    for (const auto& e : sub.elements())
        if (!mine.count(e.images())) return false;
    return true;
}

PointSet orbit(const PermGroup& group, Point point) {
    if (point >= group.degree()) throw Error("orbit: point out of range");
    std::vector<bool> in(group.degree(), false);
    std::deque<Point> frontier{point};
    in[point] = true;
    while (!frontier.empty()) {
        const Point p = frontier.front();
        frontier.pop_front();
        for (const auto& g : group.generators()) {
            const Point q = g.image(p);
            if (!in[q]) {
                in[q] = true;
                frontier.push_back(q);
            }
        }
    }
    PointSet out;
    for (Point p = 0; p < group.degree(); ++p)
        if (in[p]) out.push_back(p);
    return out;
}

bool is_transitive(const PermGroup& group) {
    return orbit(group, 0).size() == group.degree();
}

PermGroup point_stabilizer(const PermGroup& group, Point point) {
    if (point >= group.degree()) throw Error("point_stabilizer: point out of range");
    std::vector<Permutation> fixed;
    for (const auto& g : group.elements())
        if (g.image(point) == point) fixed.push_back(g);
    return PermGroup::from_elements(group.degree(), std::move(fixed));
}

namespace {

std::set<std::vector<Point>> element_set(const PermGroup& g) {
    std::set<std::vector<Point>> s;
    for (const auto& e : g.elements()) s.insert(e.images());
    return s;
}

}  // namespace

PermGroup normalizer(const PermGroup& group, const PermGroup& sub) {
    if (!group.contains_all(sub))
        throw NotASubgroup("normalizer: sub is not contained in group");
    const auto subset = element_set(sub);
    std::vector<Permutation> keep;
    for (const auto& g : group.elements()) {
        const Permutation ginv = g.inverse();
        bool ok = true;
        for (const auto& x : sub.elements()) {
            if (!subset.count((ginv * x * g).images())) {
                ok = false;
                break;
            }
        }
        if (ok) keep.push_back(g);
    }
    return PermGroup::from_elements(group.degree(), std::move(keep));
}

PermGroup centralizer(const PermGroup& group, const PermGroup& sub) {
    if (!group.contains_all(sub))
        throw NotASubgroup("centralizer: sub is not contained in group");
    std::vector<Permutation> keep;
    for (const auto& g : group.elements()) {
        bool ok = true;
        for (const auto& x : sub.elements()) {
            if (!(g * x == x * g)) {
                ok = false;
                break;
            }
        }
        if (ok) keep.push_back(g);
    }
    return PermGroup::from_elements(group.degree(), std::move(keep));
}

bool is_block(const PermGroup& group, const PointSet& candidate) {
    if (!is_transitive(group)) throw NotTransitive("is_block: group not transitive");
    if (candidate.empty()) throw Error("is_block: candidate must be non-empty");
    std::vector<bool> in(group.degree(), false);
    for (Point p : candidate) in[p] = true;
    for (const auto& g : group.elements()) {
        std::size_t inside = 0;
        for (Point p : candidate)
            if (in[g.image(p)]) ++inside;
        if (inside != 0 && inside != candidate.size()) return false;
    }
    return true;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& group) {
    std::set<std::vector<Point>> assigned;
    std::vector<std::vector<Permutation>> classes;
    for (const auto& x : group.elements()) {
        if (assigned.count(x.images())) continue;
        std::set<std::vector<Point>> cls;
        for (const auto& g : group.elements())
            cls.insert((g.inverse() * x * g).images());
        std::vector<Permutation> members;
        for (const auto& im : cls) {
            assigned.insert(im);
            members.emplace_back(im);
        }
        classes.push_back(std::move(members));
    }
    return classes;
}

}  // namespace suborbit
