#pragma once

#include <optional>
#include <vector>

#include "suborbit/gf2.hpp"
#include "suborbit/perm.hpp"

namespace suborbit {

// Subset of a GroupTable's element indices.
using ElementSubset = std::vector<bool>;

// Finite group as a multiplication table. Element 0 is the identity.
class GroupTable {
public:
    GroupTable(int order, std::vector<int> mul_flat);

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[a * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    const std::vector<int>& mul_flat() const { return mul_; }

    int element_order(int a) const;
    bool is_abelian() const;
    int exponent() const;

private:
    int order_;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

GroupTable from_regular_action(const PermGroup& group);

GroupTable cyclic_group(int k);
GroupTable elementary_abelian_group(int k);  // order 2^k
GroupTable dihedral_group(int k);            // order 2k, k >= 1
GroupTable generalized_dicyclic_group(const GroupTable& a, int y);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable central_product(const GroupTable& a, const GroupTable& b, int za,
                           int zb);
// V semidirect H with V = GF(2)^4; conjugation of v by (0,h) acts as v*h.
GroupTable semidirect_v_h(const std::vector<GF2Matrix>& h);

PermGroup coset_action(const GroupTable& group, const ElementSubset& sub);

ElementSubset involution_set(const GroupTable& group);
std::size_t subset_size(const ElementSubset& s);
bool is_subgroup(const GroupTable& group, const ElementSubset& s);
ElementSubset trivial_subgroup(const GroupTable& group);
ElementSubset full_subgroup(const GroupTable& group);
ElementSubset generated_subgroup(const GroupTable& group,
                                 const std::vector<int>& gens);

struct DicyclicWitness {
    ElementSubset a;  // the index-2 abelian subgroup
    int y;
    int x;
};
std::optional<DicyclicWitness> is_generalized_dicyclic(const GroupTable& group);

bool brute_isomorphic(const GroupTable& a, const GroupTable& b);

GroupTable table_from_matrix_group(const std::vector<GF2Matrix>& h);

}  // namespace suborbit
