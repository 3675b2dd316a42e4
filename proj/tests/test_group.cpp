#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "wig/group.hpp"

using namespace wig;

TEST_CASE("group construction and validation") {
    Group g = make_group({3, 5});
    CHECK(g.cardinality == 15);
    CHECK(g.phase_lcm == 15);
    CHECK(g.rank() == 2);
    CHECK_THROWS_AS(make_group({}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({3, 0}), std::invalid_argument);
}

TEST_CASE("componentwise arithmetic") {
    Group z3 = make_group({3});
    CHECK(add(z3, {2}, {2}) == Element{1});
    Group g = make_group({3, 5});
    CHECK(add(g, {2, 4}, {2, 2}) == Element{1, 1});
    CHECK(neg(g, zero(g)) == zero(g));
    CHECK(sub(g, {1, 1}, {2, 4}) == Element{2, 2});
    CHECK_THROWS_AS(add(g, {1}, {1, 2}), GroupMismatch);
}

TEST_CASE("two-regularity is odd order") {
    CHECK(is_two_regular(make_group({3})));
    CHECK_FALSE(is_two_regular(make_group({4})));
    CHECK(is_two_regular(make_group({3, 5})));
    CHECK_FALSE(is_two_regular(make_group({3, 4})));
}

TEST_CASE("halve inverts doubling") {
    CHECK(halve(make_group({3}), {1}) == Element{2});
    CHECK(halve(make_group({5}), {1}) == Element{3});
    CHECK(halve(make_group({9}), {1}) == Element{5});
    CHECK_THROWS_AS(halve(make_group({4}), {1}), NotTwoRegular);

    for (auto orders : {std::vector<std::int64_t>{9}, {3, 3}, {27}, {3, 5}}) {
        Group g = make_group(orders);
        for (std::int64_t i = 0; i < g.cardinality; ++i) {
            Element x = element_at(g, i);
            CHECK(dbl(g, halve(g, x)) == x);
            for (std::int64_t j = 0; j < g.cardinality; ++j) {
                Element y = element_at(g, j);
                CHECK(halve(g, add(g, x, y)) == add(g, halve(g, x), halve(g, y)));
            }
        }
    }
}

TEST_CASE("character pairing") {
    Group z3 = make_group({3});
    CHECK(std::abs(char_eval(z3, {0}, {2}) - Complex(1.0)) < 1e-15);
    Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    CHECK(std::abs(char_eval(z3, {1}, {1}) - w) < 1e-15);

    std::mt19937_64 rng(7);
    Group g = make_group({3, 9});
    std::uniform_int_distribution<std::int64_t> pick(0, g.cardinality - 1);
    for (int i = 0; i < 200; ++i) {
        Element a = element_at(g, pick(rng));
        Element x = element_at(g, pick(rng));
        Element y = element_at(g, pick(rng));
        CHECK(std::abs(char_eval(g, a, add(g, x, y)) -
                       char_eval(g, a, x) * char_eval(g, a, y)) < 1e-12);
    }
}

TEST_CASE("subgroup enumeration") {
    Group z9 = make_group({9});
    auto subs9 = enumerate_subgroups(z9);
    REQUIRE(subs9.size() == 3);
    CHECK(subs9[0].element_indices == std::vector<std::int64_t>{0});
    CHECK(subs9[1].element_indices == std::vector<std::int64_t>{0, 3, 6});
    CHECK(subs9[2].order() == 9);

    CHECK(enumerate_subgroups(make_group({3, 3})).size() == 6);
    CHECK(enumerate_subgroups(make_group({5})).size() == 2);
    CHECK(enumerate_subgroups(make_group({7})).size() == 2);

    CHECK_THROWS_AS(enumerate_subgroups(make_group({513})), CapExceeded);
    CHECK_THROWS_AS(subgroup_from_indices(make_group({3}), {0, 1}), NotASubgroup);
}

TEST_CASE("annihilators and duality") {
    Group z3 = make_group({3});
    Subgroup trivial = subgroup_from_generators(z3, {});
    CHECK(annihilator(trivial).order() == 3);

    Group z9 = make_group({9});
    Subgroup h = subgroup_from_generators(z9, {Element{3}});
    CHECK(annihilator(h).element_indices == std::vector<std::int64_t>{0, 3, 6});

    Subgroup full = subgroup_from_generators(z9, {Element{1}});
    CHECK(annihilator(full).order() == 1);

    for (auto orders : {std::vector<std::int64_t>{9}, {3, 3}, {27}, {3, 5}}) {
        Group g = make_group(orders);
        for (const auto& sub : enumerate_subgroups(g)) {
            Subgroup perp = annihilator(sub);
            // |H| * |H^perp| = |A| makes the Haar masses multiply to 1.
            CHECK(sub.order() * perp.order() == g.cardinality);
            CHECK(annihilator(perp).element_indices == sub.element_indices);

            // Doubling maps each subgroup onto itself in odd order.
            std::set<std::int64_t> doubled;
            for (auto idx : sub.element_indices) {
                doubled.insert(index_of(g, dbl(g, element_at(g, idx))));
            }
            CHECK(doubled.size() == static_cast<std::size_t>(sub.order()));
            for (auto idx : doubled) CHECK(sub.contains_index(idx));
        }
    }
}

TEST_CASE("trivial group is consistent") {
    Group e = make_group({1});
    CHECK(is_two_regular(e));
    CHECK(enumerate_subgroups(e).size() == 1);
    Subgroup t = subgroup_from_generators(e, {});
    CHECK(annihilator(t).order() == 1);
}
