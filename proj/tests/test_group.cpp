#include "nvq/group.hpp"

#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

using namespace nvq;

namespace {

std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("group_from_table validates") {
    FiniteGroup z2 = group_from_table({{0, 1}, {1, 0}});
    CHECK(z2.unit == 0);
    CHECK(z2.inverse == std::vector<int>{0, 1});

    std::string code = error_code([] { group_from_table({{0, 1}, {0, 1}}); });
    bool expected = code == "NotAssociative" || code == "NoUnit";
    CHECK(expected);

    CHECK(error_code([] { group_from_table({{0, 1}, {1, 1}}); }) != "");
    CHECK(error_code([] { group_from_table({{0, 1}}); }) == "NotSquare");
}

TEST_CASE("S3 table agrees with permutation composition") {
    // independent construction: the six permutations of 3 points, product =
    // apply-left-first composition, elements ordered as words in s1, s2
    std::vector<Perm> elems = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                               {2, 0, 1}, {1, 2, 0}, {2, 1, 0}};
    auto comp = [](const Perm& p, const Perm& q) {
        Perm r(3);
        for (int i = 0; i < 3; ++i) r[i] = q[p[i]];
        return r;
    };
    Table oracle(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Perm prod = comp(elems[i], elems[j]);
            oracle[i][j] =
                static_cast<int>(std::find(elems.begin(), elems.end(), prod) - elems.begin());
        }

    FiniteGroup s3 = make_named_group("S3");
    CHECK(s3.table == oracle);
    CHECK(s3.labels == std::vector<std::string>{"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"});
}

TEST_CASE("named groups") {
    FiniteGroup sl2 = make_named_group("SL2F2");
    std::vector<int> orders;
    for (int x = 0; x < sl2.size; ++x) orders.push_back(sl2.order_of(x));
    CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 3});

    FiniteGroup z4 = make_named_group("Z4");
    CHECK(z4.size == 4);
    CHECK(z4.order_of(1) == 4);

    FiniteGroup klein = make_named_group("Klein4");
    for (int x = 1; x < 4; ++x) CHECK(klein.order_of(x) == 2);

    CHECK(error_code([] { make_named_group("Q8"); }) == "UnknownName");
}

TEST_CASE("isomorphism search") {
    FiniteGroup s3 = make_named_group("S3");
    FiniteGroup sl2 = make_named_group("SL2F2");

    // E,A1,A2,A3,C1,C2 -> e,s1,s2,s1s2s1,s2s1,s1s2 (A1A2 = C2, A1A3 = C1)
    auto phi = group_isomorphic(sl2, s3);
    REQUIRE(phi.has_value());
    CHECK(*phi == std::vector<int>{0, 1, 2, 5, 4, 3});
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) CHECK((*phi)[sl2.mul(x, y)] == s3.mul((*phi)[x], (*phi)[y]));

    CHECK_FALSE(group_isomorphic(make_named_group("Z4"), make_named_group("Klein4")).has_value());

    auto id = group_isomorphic(make_named_group("Z2"), make_named_group("Z2"));
    REQUIRE(id.has_value());
    CHECK(*id == std::vector<int>{0, 1});

    CHECK(error_code([] {
              (void)group_isomorphic(make_named_group("Z13"), make_named_group("Z13"));
          }) == "SizeLimitExceeded");
}

TEST_CASE("conjugation action") {
    FiniteGroup s3 = make_named_group("S3");
    Perm c = conjugation_action(s3, 1);  // by s1
    CHECK(c == Perm{0, 1, 5, 4, 3, 2});

    CHECK(conjugation_action(s3, s3.unit) == identity_perm(6));
    FiniteGroup z4 = make_named_group("Z4");
    CHECK(conjugation_action(z4, 1) == identity_perm(4));

    for (int b = 0; b < s3.size; ++b) CHECK(is_group_automorphism(s3, conjugation_action(s3, b)));
}

TEST_CASE("subgroup_generated") {
    PermGroup swap2 = subgroup_generated(2, {{1, 0}});
    CHECK(swap2.order() == 2);

    FiniteGroup s3 = make_named_group("S3");
    PermGroup a = subgroup_generated(6, {conjugation_action(s3, 1)});
    CHECK(a.order() == 2);

    CHECK(subgroup_generated(3, {}).order() == 1);
}

TEST_CASE("orbits") {
    FiniteGroup s3 = make_named_group("S3");
    Partition orb = orbits(subgroup_generated(6, {conjugation_action(s3, 1)}));
    std::vector<std::vector<int>> expect = {{0}, {1}, {2, 5}, {3, 4}};
    CHECK(orb.parts == expect);
    CHECK(orb.proj == std::vector<int>{0, 1, 2, 3, 3, 2});

    FiniteGroup sl2 = make_named_group("SL2F2");
    Partition borb = orbits(subgroup_generated(
        6, {conjugation_action(sl2, 0), conjugation_action(sl2, 2)}));
    CHECK(borb.count() == 4);
    std::vector<size_t> sizes;
    for (const auto& p : borb.parts) sizes.push_back(p.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 2, 2});

    Partition triv = orbits(trivial_perm_group(4));
    CHECK(triv.count() == 4);

    // partition properties
    for (const auto& part : orb.parts) {
        CHECK_FALSE(part.empty());
        CHECK(std::is_sorted(part.begin(), part.end()));
    }
}

TEST_CASE("double cosets") {
    FiniteGroup s3 = make_named_group("S3");

    // oracle: expand HgH directly
    std::vector<int> h = {0, 1};
    std::set<std::set<int>> oracle;
    for (int x = 0; x < 6; ++x) {
        std::set<int> cls;
        for (int h1 : h)
            for (int h2 : h) cls.insert(s3.mul(s3.mul(h1, x), h2));
        oracle.insert(cls);
    }
    Partition dc = double_cosets(s3, h);
    std::set<std::set<int>> got;
    for (const auto& p : dc.parts) got.insert(std::set<int>(p.begin(), p.end()));
    CHECK(got == oracle);
    CHECK(dc.parts == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4, 5}});

    Partition units = double_cosets(s3, {0});
    CHECK(units.count() == 6);

    std::vector<int> all = {0, 1, 2, 3, 4, 5};
    CHECK(double_cosets(s3, all).count() == 1);

    CHECK(error_code([&] { double_cosets(s3, {0, 3}); }) == "NotASubgroup");

    // the unit partition refines any double-coset partition
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            if (units.proj[x] == units.proj[y]) CHECK(dc.proj[x] == dc.proj[y]);
}

TEST_CASE("revalidation is idempotent") {
    for (const char* name : {"S3", "SL2F2", "Z4", "Klein4"}) {
        FiniteGroup g = make_named_group(name);
        FiniteGroup again = group_from_table(g.table, g.labels);
        CHECK(again.unit == g.unit);
        CHECK(again.inverse == g.inverse);
    }
}
