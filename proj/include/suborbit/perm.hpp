#pragma once

#include <cstdint>
#include <vector>

namespace suborbit {

using Point = std::uint32_t;
using PointSet = std::vector<Point>;  // kept sorted

// Point permutation on {0..n-1}, stored as its image array.
// Action is exponential: p^g = g.image(p). Composition a*b applies a first.
class Permutation {
public:
    explicit Permutation(std::vector<Point> images);
    static Permutation identity(Point degree);

    Point degree() const { return static_cast<Point>(images_.size()); }
    Point image(Point p) const { return images_[p]; }
    const std::vector<Point>& images() const { return images_; }

    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return images_ != o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<Point> images_;
};

// Cycle helper for concise test fixtures: cycles on {0..degree-1}.
Permutation perm_from_cycles(Point degree,
                             const std::vector<std::vector<Point>>& cycles);

std::size_t default_closure_cap();

// Group generated by permutations, with the full element list cached.
// Element order is the breadth-first closure order (deterministic).
class PermGroup {
public:
    PermGroup(Point degree, std::vector<Permutation> generators,
              std::size_t cap = default_closure_cap());

    // Wraps an already-closed element list (identity must be present).
    static PermGroup from_elements(Point degree,
                                   std::vector<Permutation> elements);

    Point degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    bool contains(const Permutation& g) const;
    bool contains_all(const PermGroup& sub) const;

private:
    PermGroup() : degree_(1) {}
    Point degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

std::vector<Permutation> generate_elements(
    const std::vector<Permutation>& generators, std::size_t cap);

PointSet orbit(const PermGroup& group, Point point);
bool is_transitive(const PermGroup& group);
PermGroup point_stabilizer(const PermGroup& group, Point point);
PermGroup normalizer(const PermGroup& group, const PermGroup& sub);
PermGroup centralizer(const PermGroup& group, const PermGroup& sub);
bool is_block(const PermGroup& group, const PointSet& candidate);
std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& group);

}  // namespace suborbit
