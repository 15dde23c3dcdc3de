#include "nvq/braid.hpp"

#include "doctest.h"

#include <algorithm>

using namespace nvq;

TEST_CASE("swap and constant maps") {
    for (int n : {2, 3, 4}) {
        std::vector<std::pair<int, int>> swap_table;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) swap_table.emplace_back(y, x);
        CHECK(braid_check(braid_from_table(n, swap_table)).all_pass());
    }
}

TEST_CASE("racks give braid solutions") {
    CHECK(braid_check(rack_to_braid(trivial_quandle(2))).all_pass());
    CHECK(braid_check(rack_to_braid(dihedral_quandle(3))).all_pass());
    CHECK(braid_check(rack_to_braid(conj_quandle(make_named_group("S3"), 1))).all_pass());

    CHECK_THROWS_AS(rack_to_braid(QuandleTable{2, {{0, 0}, {0, 0}}, QuandleTable::Kind::rack}),
                    Error);
}

TEST_CASE("every enumerated quandle yields a braid solution") {
    for (int order = 1; order <= 4; ++order)
        for (const auto& q : enumerate_quandles(order, true))
            CHECK(braid_check(rack_to_braid(q)).all_pass());
    // larger named instances
    for (int m = 5; m <= 6; ++m) CHECK(braid_check(rack_to_braid(dihedral_quandle(m))).all_pass());
    CHECK(braid_check(rack_to_braid(core_quandle(make_named_group("SL2F2")))).all_pass());
}

TEST_CASE("window maps") {
    BraidMap shift = braid_from_forms({1, 0, 1}, {0, 1, 0}, 10);  // (x+1, y)
    AxiomReport rep = braid_check(shift);
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(rep.find("braid-equation")->witness.empty());

    BraidMap from_ops = multirack_to_map({-1, 2, 0}, {1, 0, 0}, 15);  // (2y-x, x)
    CHECK(braid_check(from_ops).all_pass());
}

TEST_CASE("the four linear families solve the braid equation") {
    long long w = 15;
    std::vector<long long> bs = {-2, 0, 7};
    std::vector<std::pair<LinearForm, LinearForm>> families;
    families.push_back({{1, 0, 0}, {0, 1, 0}});   // identity
    families.push_back({{-1, 2, 0}, {1, 0, 0}});  // (2y-x, x)
    families.push_back({{0, 1, 0}, {2, -1, 0}});  // (y, 2x-y)
    for (long long b : bs) families.push_back({{1, 0, 0}, {-1, 0, b}});  // (x, -x+b)

    for (const auto& [f1, f2] : families) {
        CHECK(braid_check(braid_from_forms(f1, f2, w)).all_pass());
        // the abelian-group variants Z_m
        for (int m = 3; m <= 8; ++m) CHECK(braid_check(braid_mod(f1, f2, m)).all_pass());
    }
}

TEST_CASE("braid verdict is conjugation-invariant") {
    auto conjugate = [](const BraidMap& r, const Perm& f) {
        Perm fi = inverse_perm(f);
        std::vector<std::pair<int, int>> table(static_cast<size_t>(r.size) * r.size);
        for (int x = 0; x < r.size; ++x)
            for (int y = 0; y < r.size; ++y) {
                auto [a, b] = r.apply(fi[x], fi[y]);
                table[static_cast<size_t>(x) * r.size + y] = {f[a], f[b]};
            }
        return braid_from_table(r.size, std::move(table));
    };

    std::vector<BraidMap> maps = {rack_to_braid(dihedral_quandle(3)),
                                  rack_to_braid(trivial_quandle(4)),
                                  braid_mod({1, 0, 1}, {0, 1, 0}, 4)};
    std::vector<Perm> bijections = {{1, 0, 2}, {2, 0, 1}, {0, 2, 1}, {1, 2, 3, 0}, {3, 1, 0, 2}};
    for (const auto& r : maps) {
        bool verdict = braid_check(r).all_pass();
        for (const auto& f : bijections) {
            if (static_cast<int>(f.size()) != r.size) continue;
            CHECK(braid_check(conjugate(r, f)).all_pass() == verdict);
        }
    }
}

TEST_CASE("degenerate monoid solution") {
    FiniteGroup z3 = make_named_group("Z3");
    DegenerateSolution d = degenerate_monoid_solution(z3.table);
    CHECK(d.braid.all_pass());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(d.map.apply(a, b) == std::pair<int, int>(0, (a + b) % 3));
    CHECK_FALSE(d.assoc.all_pass());
    REQUIRE(d.witness.has_value());
    CHECK((*d.witness)[2] != 0);  // some c != unit witnesses the failure

    DegenerateSolution trivial = degenerate_monoid_solution({{0}});
    CHECK(trivial.braid.all_pass());
    CHECK_FALSE(trivial.witness.has_value());

    DegenerateSolution s3d = degenerate_monoid_solution(make_named_group("S3").table);
    CHECK(s3d.braid.all_pass());
    CHECK(s3d.witness.has_value());

    CHECK_THROWS_WITH_AS(degenerate_monoid_solution({{0, 0}, {0, 0}}), doctest::Contains("unit"),
                         Error);
}
