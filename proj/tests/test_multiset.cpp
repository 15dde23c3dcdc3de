#include "nvq/io.hpp"
#include "nvq/multiset.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace nvq;

TEST_CASE("from_list tallies") {
    Multiset m = Multiset::from_list({0, 0});
    CHECK(m.total() == 2);
    CHECK(m.multiplicity(0) == 2);

    Multiset m2 = Multiset::from_list({1, 2, 1});
    CHECK(m2.total() == 3);
    CHECK(m2.multiplicity(1) == 2);
    CHECK(m2.multiplicity(2) == 1);

    Multiset empty = Multiset::from_list({});
    CHECK(empty.total() == 0);
    CHECK(empty.counts().empty());
}

TEST_CASE("contains") {
    Multiset m = Multiset::from_list({1, 1, 2});
    CHECK(m.contains(2));
    CHECK_FALSE(Multiset::from_list({1, 1}).contains(0));

    // cell x2*x2 of the 4x4 coset table is [x1,x2]
    Multiset cell = Multiset::from_list({1, 2});
    CHECK(cell.contains(2));
}

TEST_CASE("inclusion modes") {
    Multiset a = Multiset::from_list({1});
    Multiset b = Multiset::from_list({1, 1, 2});
    CHECK(a.included_in(b, Inclusion::multiplicity_aware));

    Multiset three = Multiset::from_list({1, 1, 1});
    Multiset two = Multiset::from_list({1, 1});
    CHECK_FALSE(three.included_in(two, Inclusion::multiplicity_aware));
    CHECK(three.included_in(two, Inclusion::support_only));
}

TEST_CASE("coset table self-distributivity instance") {
    // rows of the 4-class coset table, frozen from the worked example
    std::vector<std::vector<std::vector<int>>> t = {
        {{0, 0}, {0, 0}, {0, 0}, {0, 0}},
        {{1, 1}, {1, 1}, {2, 2}, {2, 2}},
        {{2, 2}, {2, 2}, {1, 2}, {1, 2}},
        {{3, 3}, {3, 3}, {3, 3}, {3, 3}},
    };
    // expand (x1*x2)*x0 and (x1*x0)*(x2*x0) by hand
    std::vector<int> lhs, rhs;
    for (int u : t[1][2])
        for (int v : t[u][0]) lhs.push_back(v);
    for (int u : t[1][0])
        for (int v : t[2][0])
            for (int w : t[u][v]) rhs.push_back(w);
    Multiset l = Multiset::from_list(lhs);
    Multiset r = Multiset::from_list(rhs);
    CHECK(l == Multiset::from_list({2, 2, 2, 2}));
    CHECK(l.included_in(r, Inclusion::multiplicity_aware));
}

TEST_CASE("order independence, exhaustively to length 6") {
    std::vector<std::vector<int>> bases = {
        {}, {3}, {0, 0}, {1, 2, 1}, {0, 1, 2, 0}, {2, 2, 1, 0, 1}, {5, 0, 5, 3, 3, 1},
    };
    for (auto base : bases) {
        Multiset expect = Multiset::from_list(base);
        std::sort(base.begin(), base.end());
        do {
            CHECK(Multiset::from_list(base) == expect);
        } while (std::next_permutation(base.begin(), base.end()));
    }
}

TEST_CASE("inclusion properties on random multisets") {
    std::mt19937 rng(0);
    auto random_ms = [&rng]() {
        std::vector<int> v(rng() % 9);
        for (auto& x : v) x = static_cast<int>(rng() % 6);
        return Multiset::from_list(v);
    };
    for (int trial = 0; trial < 500; ++trial) {
        Multiset a = random_ms(), b = random_ms();
        CHECK(a.included_in(a, Inclusion::multiplicity_aware));
        if (a.included_in(b, Inclusion::multiplicity_aware))
            CHECK(a.included_in(b, Inclusion::support_only));
    }
    // the converse implication fails
    CHECK(Multiset::from_list({1, 1, 1}).included_in(Multiset::from_list({1}),
                                                     Inclusion::support_only));
    CHECK_FALSE(Multiset::from_list({1, 1, 1}).included_in(Multiset::from_list({1}),
                                                           Inclusion::multiplicity_aware));
}

TEST_CASE("serialization") {
    CHECK(Multiset::from_list({2, 1, 1}).str() == "[1,1,2]");
    CHECK(Multiset::from_list({}).str() == "[]");
    CHECK(parse_multiset("[1,1,2]") == Multiset::from_list({1, 1, 2}));
    CHECK(parse_multiset("[]") == Multiset::from_list({}));
    CHECK_THROWS_AS(parse_multiset("1,2"), ParseError);
    CHECK_THROWS_AS(parse_multiset("[1,,2]"), ParseError);
}
