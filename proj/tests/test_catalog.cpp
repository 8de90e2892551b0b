#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ckq/catalog.hpp"

#include <sstream>

using namespace ckq;

namespace {

std::pair<Mask, Mask> pr(std::initializer_list<int> nil, std::initializer_list<int> J) {
    return {mask_from_slots(nil), mask_from_slots(J)};
}

std::string pairs_str(const std::set<std::pair<Mask, Mask>>& ps) {
    std::string s;
    for (auto& [nil, J] : ps) s += "(" + mask_str(nil) + ";" + mask_str(J) + ") ";
    return s;
}

} // namespace

TEST_CASE("slot mask helpers") {
    CHECK(mask_from_slots({1, 3}) == 0b101u);
    CHECK(mask_slots(0b101u) == std::vector<int>{1, 3});
    CHECK(mask_slots(0) == std::vector<int>{});
    CHECK(slots_less(mask_from_slots({1}), mask_from_slots({1, 2})));
    CHECK(slots_less(mask_from_slots({1, 3}), mask_from_slots({2})));
    CHECK(!slots_less(mask_from_slots({2}), mask_from_slots({1, 3})));
}

TEST_CASE("unit-J families: shapes and witnesses") {
    auto odd5 = unit_odd_family(5);
    REQUIRE(odd5.size() == 3);
    CHECK(odd5[0].nil == mask_from_slots({1, 3}));
    CHECK(odd5[1].nil == mask_from_slots({2, 3}));
    CHECK(odd5[1].sigma == Perm{1, 4, 3, 5, 2});
    CHECK(odd5[2].nil == mask_from_slots({2, 4}));
    for (auto& e : odd5) {
        CHECK(e.J == 0);
        CHECK(perm_valid(e.sigma));
    }

    auto even4 = unit_even_family(4);
    REQUIRE(even4.size() == 3);
    CHECK(even4[0].nil == mask_from_slots({1, 2}));
    CHECK(even4[0].sigma == Perm{3, 1, 2, 4});
    CHECK(even4[1].nil == mask_from_slots({1, 3}));
    CHECK(even4[1].sigma == Perm{2, 1, 4, 3});
    CHECK(even4[2].nil == mask_from_slots({2, 3}));
    CHECK(even4[2].sigma == Perm{1, 3, 4, 2});

    auto even6 = unit_even_family(6);
    REQUIRE(even6.size() == 6);
    std::set<Mask> sets;
    for (auto& e : even6) {
        sets.insert(e.nil);
        CHECK(perm_valid(e.sigma));
    }
    std::set<Mask> expected{mask_from_slots({1, 2, 4}), mask_from_slots({1, 3, 4}),
                            mask_from_slots({1, 3, 5}), mask_from_slots({2, 3, 4}),
                            mask_from_slots({2, 3, 5}), mask_from_slots({2, 4, 5})};
    CHECK(sets == expected);
}

TEST_CASE("nilpotent-J families: witness validity and forms") {
    for (int N : {3, 5, 7}) {
        for (auto& e : nilpotent_odd_family(N)) {
            CHECK(perm_valid(e.sigma));
            CHECK((e.J & e.nil) == e.J);
            CHECK(e.J != 0);
        }
    }
    for (int N : {4, 6}) {
        for (auto& e : nilpotent_even_family(N)) {
            CHECK(perm_valid(e.sigma));
            CHECK((e.J & e.nil) == e.J);
            CHECK(e.J != 0);
        }
    }
    // the inner-window shapes need n >= 2 and are absent at N=3
    for (auto& e : nilpotent_odd_family(3)) {
        CHECK(e.source.find("1a") == std::string::npos);
        CHECK(e.source.find("2a") == std::string::npos);
    }
    CHECK(nilpotent_odd_family(5).size() == 9);
    CHECK(nilpotent_odd_family(3).size() == 7);
    CHECK(nilpotent_even_family(4).size() == 21);
}

TEST_CASE("catalog pairs: frozen expectations at N=3") {
    std::set<std::pair<Mask, Mask>> expected{
        pr({1}, {}),     pr({2}, {}),        pr({1}, {1}),  pr({2}, {2}),
        pr({1, 2}, {1}), pr({1, 2}, {2}),    pr({1, 2}, {1, 2}),
    };
    auto got = catalog_pairs(3);
    INFO("got: " << pairs_str(got));
    CHECK(got == expected);
}

TEST_CASE("catalog pairs: frozen expectations at N=5") {
    std::set<std::pair<Mask, Mask>> expected{
        pr({1}, {}),     pr({3}, {}),     pr({1, 3}, {}),     pr({2}, {}),
        pr({2, 3}, {}),  pr({4}, {}),     pr({2, 4}, {}),     pr({3}, {3}),
        pr({1, 3}, {3}), pr({2}, {2}),    pr({2, 4}, {2}),    pr({2, 3}, {2, 3}),
    };
    auto got = catalog_pairs(5);
    INFO("got: " << pairs_str(got));
    CHECK(got == expected);
}

TEST_CASE("catalog pairs: frozen expectations at N=4") {
    std::set<std::pair<Mask, Mask>> expected;
    // unit J: all nonempty proper subsets reachable from the three maximal sets
    for (auto s : {std::initializer_list<int>{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}})
        expected.insert(pr(s, {}));
    // J = iota_2
    for (auto s : {std::initializer_list<int>{2}, {1, 2}, {2, 3}, {1, 2, 3}})
        expected.insert({mask_from_slots(s), mask_from_slots({2})});
    // J = iota_1
    for (auto s : {std::initializer_list<int>{1}, {1, 2}, {1, 3}, {1, 2, 3}})
        expected.insert({mask_from_slots(s), mask_from_slots({1})});
    // J = iota_3
    for (auto s : {std::initializer_list<int>{3}, {1, 3}, {2, 3}, {1, 2, 3}})
        expected.insert({mask_from_slots(s), mask_from_slots({3})});
    expected.insert(pr({1, 2}, {1, 2}));
    expected.insert(pr({1, 2, 3}, {1, 2}));
    expected.insert(pr({2, 3}, {2, 3}));
    expected.insert(pr({1, 2, 3}, {2, 3}));
    expected.insert(pr({1, 3}, {1, 3}));
    expected.insert(pr({1, 2, 3}, {1, 2, 3}));
    REQUIRE(expected.size() == 24);
    auto got = catalog_pairs(4);
    INFO("got: " << pairs_str(got));
    CHECK(got == expected);
}

TEST_CASE("every catalog witness is admissible (N=3..7)") {
    for (int N = 3; N <= 7; ++N) {
        for (const auto& e : full_catalog(N)) {
            Candidate c{N, e.nil, e.J, e.sigma};
            auto v = check_candidate(c);
            INFO("N=" << N << " source=" << e.source << " " << c.str());
            CHECK(v.admissible());
        }
    }
}

TEST_CASE("catalog deduplication by (slot set, J)") {
    for (int N = 3; N <= 7; ++N) {
        std::set<std::pair<Mask, Mask>> seen;
        for (const auto& e : full_catalog(N))
            CHECK(seen.emplace(e.nil, e.J).second);
    }
}

TEST_CASE("closure never invents a unit-J pair from a nilpotent-J source") {
    // deleting all J slots drops the derived pair instead of claiming J=1
    auto got = catalog_pairs(3);
    CHECK(!got.count(pr({1, 2}, {})));  // {1,2} at unit J is not admissible
}

TEST_CASE("diff machinery names injected and removed pairs") {
    auto found = catalog_pairs(4);
    found.insert(pr({1, 2, 3}, {}));  // bogus: full set with unit J
    auto diff = compare_to_catalog(found, 4);
    REQUIRE(diff.extra.size() == 1);
    CHECK(diff.extra[0] == pr({1, 2, 3}, {}));
    CHECK(diff.missing.empty());

    auto found2 = catalog_pairs(4);
    found2.erase(pr({2}, {2}));
    auto diff2 = compare_to_catalog(found2, 4);
    REQUIRE(diff2.missing.size() == 1);
    CHECK(diff2.missing[0] == pr({2}, {2}));
    CHECK(diff2.extra.empty());

    CHECK(compare_to_catalog(catalog_pairs(4), 4).empty());
}
