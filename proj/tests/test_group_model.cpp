#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "suborbit/errors.hpp"
#include "suborbit/gf2.hpp"
#include "suborbit/group_table.hpp"
#include "suborbit/perm.hpp"

using namespace suborbit;

namespace {

GroupTable q8() { return generalized_dicyclic_group(cyclic_group(4), 2); }

GroupTable alt4_table() {
    const PermGroup a4(4, {perm_from_cycles(4, {{0, 1, 2}}),
                           perm_from_cycles(4, {{0, 1}, {2, 3}})});
    return from_regular_action(a4);
}

}  // namespace

TEST_CASE("table validation") {
    CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}), Error);  // no inverse row
    CHECK_THROWS_AS(GroupTable(2, {1, 0, 0, 1}), Error);  // 0 not identity
    const GroupTable c2(2, {0, 1, 1, 0});
    CHECK(c2.inv(1) == 1);
    CHECK(c2.element_order(1) == 2);
}

TEST_CASE("from_regular_action") {
    CHECK(from_regular_action(PermGroup(2, {perm_from_cycles(2, {{0, 1}})}))
              .order() == 2);
    const GroupTable c4 =
        from_regular_action(PermGroup(4, {perm_from_cycles(4, {{0, 1, 2, 3}})}));
    CHECK(c4.order() == 4);
    CHECK(c4.is_abelian());
    CHECK(c4.exponent() == 4);
    const GroupTable s3 = from_regular_action(PermGroup(
        3, {perm_from_cycles(3, {{0, 1}}), perm_from_cycles(3, {{0, 1, 2}})}));
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
}

TEST_CASE("standard constructors") {
    CHECK(cyclic_group(1).order() == 1);
    CHECK(cyclic_group(6).element_order(1) == 6);
    CHECK(elementary_abelian_group(3).order() == 8);
    CHECK(elementary_abelian_group(3).exponent() == 2);
    CHECK(dihedral_group(4).order() == 8);
    CHECK_FALSE(dihedral_group(3).is_abelian());

    // Q8: order 8, a single involution besides nothing else.
    const GroupTable q = q8();
    CHECK(q.order() == 8);
    CHECK(subset_size(involution_set(q)) == 2);  // identity + the unique involution
    CHECK_FALSE(q.is_abelian());

    CHECK_THROWS_AS(generalized_dicyclic_group(elementary_abelian_group(2), 1),
                    BadConstructorInput);
    CHECK_THROWS_AS(generalized_dicyclic_group(cyclic_group(4), 1),
                    BadConstructorInput);  // y not an involution

    CHECK(direct_product(cyclic_group(2), cyclic_group(3)).order() == 6);
    CHECK(direct_product(cyclic_group(2), cyclic_group(3)).element_order(3) ==
          6);  // (1,1) generates C6
}

TEST_CASE("dicyclic order and quaternion involution count") {
    for (int k : {4, 6, 8}) {
        const GroupTable a = cyclic_group(k);
        const GroupTable dic = generalized_dicyclic_group(a, k / 2);
        CHECK(dic.order() == 2 * k);
        CHECK(subset_size(involution_set(dic)) == 2);  // generalized quaternion
        CHECK(is_generalized_dicyclic(dic).has_value());
    }
}

TEST_CASE("central product") {
    const GroupTable d8 = dihedral_group(4);
    const GroupTable dd = central_product(d8, d8, 2, 2);
    CHECK(dd.order() == 32);  // |A||B|/2
    CHECK_FALSE(dd.is_abelian());
    CHECK(dd.exponent() == 4);
    CHECK_THROWS_AS(central_product(d8, d8, 1, 2), BadConstructorInput);

    const GroupTable cd = central_product(cyclic_group(4), d8, 2, 2);
    CHECK(cd.order() == 16);
}

TEST_CASE("semidirect V x H") {
    const GroupTable v = semidirect_v_h({GF2Matrix::identity()});
    CHECK(v.order() == 16);
    CHECK(v.exponent() == 2);

    const Theorem2Groups& t2 = theorem2_groups();
    const GroupTable g12 = semidirect_v_h(t2.h12);
    CHECK(g12.order() == 192);
    const GroupTable g24 = semidirect_v_h(t2.h24);
    CHECK(g24.order() == 384);

    // V = indices {h=identity block} is normal elementary abelian of order
    // 16 and conjugation by (0,h) is the matrix action.
    ElementSubset vsub(g12.order(), false);
    for (int i = 0; i < 16; ++i) vsub[i] = true;
    CHECK(is_subgroup(g12, vsub));
    for (int g = 0; g < g12.order(); ++g)
        for (int x = 0; x < 16; ++x)
            CHECK(vsub[g12.mul(g12.inv(g), g12.mul(x, g))]);
    CHECK_THROWS_AS(semidirect_v_h({t2.h12[1] == GF2Matrix::identity()
                                        ? t2.h12[2]
                                        : t2.h12[1]}),
                    NotClosed);
}

TEST_CASE("coset action") {
    const GroupTable s3 = from_regular_action(PermGroup(
        3, {perm_from_cycles(3, {{0, 1}}), perm_from_cycles(3, {{0, 1, 2}})}));
    CHECK(coset_action(s3, full_subgroup(s3)).degree() == 1);
    const PermGroup regular = coset_action(s3, trivial_subgroup(s3));
    CHECK(regular.degree() == 6);
    CHECK(regular.order() == 6);
    CHECK(is_transitive(regular));

    const GroupTable g12 = semidirect_v_h(theorem2_groups().h12);
    // W = <e1, e2> sits inside the vector part at indices {0,1,2,3}.
    ElementSubset w(g12.order(), false);
    for (int i = 0; i < 4; ++i) w[i] = true;
    REQUIRE(is_subgroup(g12, w));
    const PermGroup action = coset_action(g12, w);
    CHECK(action.degree() == 48);
    CHECK(is_transitive(action));
}

TEST_CASE("subset helpers") {
    const GroupTable c6 = cyclic_group(6);
    CHECK(subset_size(involution_set(c6)) == 2);
    CHECK(subset_size(generated_subgroup(c6, {2})) == 3);
    CHECK(is_subgroup(c6, generated_subgroup(c6, {2})));
    ElementSubset bad(6, false);
    bad[0] = bad[1] = true;  // {1, g} not closed
    CHECK_FALSE(is_subgroup(c6, bad));
}

TEST_CASE("is_generalized_dicyclic") {
    CHECK(is_generalized_dicyclic(q8()).has_value());
    const auto wit = is_generalized_dicyclic(q8());
    REQUIRE(wit.has_value());
    CHECK(subset_size(wit->a) == 4);
    CHECK_FALSE(wit->a[wit->x]);
    CHECK(is_generalized_dicyclic(direct_product(cyclic_group(4), cyclic_group(2)))
              .has_value() == false);
    CHECK(is_generalized_dicyclic(
              generalized_dicyclic_group(cyclic_group(6), 3))
              .has_value());
    CHECK_FALSE(is_generalized_dicyclic(dihedral_group(4)).has_value());
    CHECK_FALSE(is_generalized_dicyclic(cyclic_group(8)).has_value());
}

TEST_CASE("brute isomorphism") {
    const GroupTable c4 = cyclic_group(4);
    CHECK(brute_isomorphic(c4, c4));
    CHECK_FALSE(brute_isomorphic(c4, elementary_abelian_group(2)));
    CHECK(brute_isomorphic(dihedral_group(3),
                           from_regular_action(PermGroup(
                               3, {perm_from_cycles(3, {{0, 1}}),
                                   perm_from_cycles(3, {{0, 1, 2}})}))));
    CHECK_FALSE(brute_isomorphic(dihedral_group(4), q8()));
    CHECK(brute_isomorphic(table_from_matrix_group(theorem2_groups().h12),
                           alt4_table()));
    CHECK_THROWS_AS(
        brute_isomorphic(cyclic_group(65), cyclic_group(65)), OrderTooLarge);
}

TEST_CASE("regular round trip") {
    for (int k : {4, 5, 6, 8, 12}) {
        const GroupTable t = cyclic_group(k);
        const GroupTable back =
            from_regular_action(coset_action(t, trivial_subgroup(t)));
        CHECK(brute_isomorphic(t, back));
    }
    const GroupTable d8 = dihedral_group(4);
    CHECK(brute_isomorphic(
        d8, from_regular_action(coset_action(d8, trivial_subgroup(d8)))));
}
