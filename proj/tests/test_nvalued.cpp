#include "nvq/nvalued.hpp"

#include "doctest.h"

#include <algorithm>
#include <cstdlib>

using namespace nvq;

namespace {

Multiset ms(std::vector<int> v) { return Multiset::from_list(std::move(v)); }

NValuedGroup coset_z4_pm() {
    FiniteGroup z4 = make_named_group("Z4");
    Perm neg = {0, 3, 2, 1};
    return coset_nv_group(z4, subgroup_generated(4, {neg}));
}

NValuedRack coset_q() {
    FiniteGroup s3 = make_named_group("S3");
    return coset_nv_quandle(conj_quandle(s3, 1),
                            subgroup_generated(6, {conjugation_action(s3, 1)}));
}

}  // namespace

TEST_CASE("coset group of (Z4, {id,-id})") {
    NValuedGroup g = coset_z4_pm();
    CHECK(g.product.size == 3);
    CHECK(g.product.n == 2);
    CHECK(g.unit == 0);
    CHECK(g.inv == std::vector<int>{0, 1, 2});
    CHECK(g.product.at(1, 1) == ms({0, 2}));
    CHECK(g.product.at(1, 2) == ms({1, 1}));
    CHECK(g.product.at(2, 2) == ms({0, 0}));
    CHECK(g.report.all_pass());
    CHECK(nv_assoc_check(g.product).all_pass());
}

TEST_CASE("1-valued tables") {
    FiniteGroup z3 = make_named_group("Z3");
    CHECK(nv_assoc_check(nv_from_group(z3)).all_pass());
    std::vector<int> id = {0, 1, 2};
    CHECK(nv_group_check(nv_from_group(z3), 0, {0, 2, 1}).all_pass());

    // a non-associative magma as a 1-valued table
    NValuedTable bad = nv_from_table({{0, 1}, {0, 0}});
    CHECK_FALSE(nv_assoc_check(bad).all_pass());
}

TEST_CASE("trivial coset constructions") {
    FiniteGroup z2 = make_named_group("Z2");
    NValuedGroup same = coset_nv_group(z2, trivial_perm_group(2));
    CHECK(same.product.n == 1);
    CHECK(same.product.at(1, 1) == ms({0}));
    CHECK(same.report.all_pass());
}

TEST_CASE("coset misuse is detected") {
    FiniteGroup z4 = make_named_group("Z4");
    // x -> x+1 is a bijection, not an automorphism
    Perm shift = {1, 2, 3, 0};
    CHECK_THROWS_WITH_AS(coset_nv_group(z4, subgroup_generated(4, {shift})),
                         doctest::Contains("automorphism"), Error);
    CHECK_THROWS_WITH_AS(coset_nv_group(z4, trivial_perm_group(3)), doctest::Contains("degree"),
                         Error);
    CHECK_THROWS_WITH_AS(coset_nv_quandle(dihedral_quandle(5), trivial_perm_group(4)),
                         doctest::Contains("degree"), Error);
}

TEST_CASE("coset quandle reproduces the 4x4 table") {
    NValuedRack q = coset_q();
    CHECK(q.product.size == 4);
    CHECK(q.product.n == 2);
    std::vector<std::vector<Multiset>> expect = {
        {ms({0, 0}), ms({0, 0}), ms({0, 0}), ms({0, 0})},
        {ms({1, 1}), ms({1, 1}), ms({2, 2}), ms({2, 2})},
        {ms({2, 2}), ms({2, 2}), ms({1, 2}), ms({1, 2})},
        {ms({3, 3}), ms({3, 3}), ms({3, 3}), ms({3, 3})},
    };
    CHECK(q.product.cells == expect);
    CHECK(q.report.all_pass());
    CHECK(nv_rack_check(q.product, q.bar, true, Inclusion::multiplicity_aware).all_pass());
}

TEST_CASE("coset quandle of the trivial quandle") {
    FiniteGroup s3 = make_named_group("S3");
    PermGroup a = subgroup_generated(6, {conjugation_action(s3, 1)});
    NValuedRack t = coset_nv_quandle(trivial_quandle(6), a);
    for (int x = 0; x < t.product.size; ++x)
        for (int y = 0; y < t.product.size; ++y)
            CHECK(t.product.at(x, y) == ms({x, x}));
    CHECK(t.report.all_pass());
}

TEST_CASE("dihedral coset cross-check against the closed form") {
    // Core(Z_9) under negation: 5 classes represented by 0..4
    int m = 9;
    QuandleTable r9 = dihedral_quandle(m);
    Perm neg(m);
    for (int i = 0; i < m; ++i) neg[i] = (m - i) % m;
    NValuedRack nv = coset_nv_quandle(r9, subgroup_generated(m, {neg}));
    CHECK(nv.product.size == 5);

    auto fold = [m](long long v) {
        int r = static_cast<int>(((v % m) + m) % m);
        return std::min(r, m - r);
    };
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            Multiset closed = ms({fold(2 * b + a), fold(std::llabs(2LL * b - a))});
            CHECK(nv.product.at(a, b) == closed);
        }
    CHECK(nv.report.all_pass());
}

TEST_CASE("representative independence audit") {
    // audited well-definedness over the instances used across the suite
    CHECK_NOTHROW(coset_q());
    CHECK_NOTHROW(coset_z4_pm());
    FiniteGroup z6 = make_named_group("Z6");
    Perm neg6 = {0, 5, 4, 3, 2, 1};
    CHECK_NOTHROW(coset_nv_group(z6, subgroup_generated(6, {neg6})));
}

TEST_CASE("double coset group") {
    FiniteGroup s3 = make_named_group("S3");
    NValuedGroup dc = double_coset_group(s3, {0, 1});
    CHECK(dc.product.size == 2);
    CHECK(dc.product.n == 2);

    // oracle: expand [pi(g1 h g2)] by hand for minimal representatives
    Partition cls = double_cosets(s3, {0, 1});
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            std::vector<int> vals;
            for (int h : {0, 1}) vals.push_back(cls.proj[s3.mul(s3.mul(cls.parts[x][0], h), cls.parts[y][0])]);
            CHECK(dc.product.at(x, y) == ms(vals));
        }
    CHECK(dc.report.all_pass());

    NValuedGroup self = double_coset_group(s3, {0});
    CHECK(self.product.n == 1);
    CHECK(self.product.size == 6);

    NValuedGroup whole = double_coset_group(s3, {0, 1, 2, 3, 4, 5});
    CHECK(whole.product.size == 1);
    CHECK(whole.product.at(0, 0) == ms(std::vector<int>(6, 0)));
}

TEST_CASE("multi group check") {
    FiniteGroup z4 = make_named_group("Z4");
    FiniteGroup klein = make_named_group("Klein4");

    MultiOpFamily same{4, {z4.table, z4.table}, MultiOpFamily::Flavor::group};
    CHECK(multi_group_check(same).all_pass());

    MultiOpFamily mixed{4, {z4.table, klein.table}, MultiOpFamily::Flavor::group};
    AxiomReport rep = multi_group_check(mixed);
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(rep.find("mixed-associativity")->witness.empty());
}

TEST_CASE("equal units force equal operations") {
    // families built over small groups; whenever a 2-op family with shared
    // units passes the mixed check, the tables must be entrywise equal
    std::vector<FiniteGroup> pool = {make_named_group("Z4"), make_named_group("Klein4"),
                                     make_named_group("Z3"), make_named_group("S3")};
    for (const auto& g1 : pool)
        for (const auto& g2 : pool) {
            if (g1.size != g2.size || g1.unit != g2.unit) continue;
            MultiOpFamily fam{g1.size, {g1.table, g2.table}, MultiOpFamily::Flavor::group};
            if (multi_group_check(fam).all_pass()) CHECK(g1.table == g2.table);
        }
}

TEST_CASE("multi rack check") {
    Table r3 = dihedral_quandle(3).table;
    Table t3 = trivial_quandle(3).table;

    MultiOpFamily ok{3, {r3, t3}, MultiOpFamily::Flavor::quandle};
    CHECK(multi_rack_check(ok).all_pass());

    MultiOpFamily same{3, {r3, r3}, MultiOpFamily::Flavor::quandle};
    CHECK(multi_rack_check(same).all_pass());

    FiniteGroup s3 = make_named_group("S3");
    MultiOpFamily bad{6, {conj_quandle(s3, 1).table, core_quandle(s3).table},
                      MultiOpFamily::Flavor::quandle};
    AxiomReport rep = multi_rack_check(bad);
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(rep.find("mutual-distributivity")->witness.empty());
}

TEST_CASE("multi_to_nvalued") {
    Table r3 = dihedral_quandle(3).table;
    Table t3 = trivial_quandle(3).table;

    MultiToNv two = multi_to_nvalued({3, {r3, t3}, MultiOpFamily::Flavor::quandle});
    CHECK(two.product.n == 2);
    REQUIRE(two.bar.has_value());
    CHECK(two.report.all_pass());
    CHECK(nv_rack_check(two.product, *two.bar, true).all_pass());

    MultiToNv one = multi_to_nvalued({3, {r3}, MultiOpFamily::Flavor::quandle});
    CHECK(one.product.n == 1);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(one.product.at(x, y) == ms({r3[x][y]}));

    Table t2 = trivial_quandle(2).table;
    MultiToNv dbl = multi_to_nvalued({2, {t2, t2}, MultiOpFamily::Flavor::quandle});
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(dbl.product.at(x, y) == ms({x, x}));

    FiniteGroup s3 = make_named_group("S3");
    MultiOpFamily bad{6, {conj_quandle(s3, 1).table, core_quandle(s3).table},
                      MultiOpFamily::Flavor::quandle};
    CHECK_THROWS_AS(multi_to_nvalued(bad), Error);
}

TEST_CASE("conj family") {
    FiniteGroup s3 = make_named_group("S3");
    NValuedRack two = conj_family(s3, {1, 2});
    CHECK(two.product.size == 6);
    CHECK(two.product.n == 2);
    CHECK(two.report.all_pass());

    FiniteGroup z4 = make_named_group("Z4");
    NValuedRack ab = conj_family(z4, {1, 3, 5});
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(ab.product.at(x, y) == ms({x, x, x}));

    NValuedRack zero = conj_family(s3, {0});
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) CHECK(zero.product.at(x, y) == ms({x}));
}

TEST_CASE("conj family satisfies M2 with multiplicities at small orders") {
    for (const char* name : {"S3", "Z4", "SL2F2"}) {
        FiniteGroup g = make_named_group(name);
        NValuedRack nv = conj_family(g, {1, 2});
        CHECK(nv_rack_check(nv.product, nv.bar, true, Inclusion::multiplicity_aware).all_pass());
    }
}

TEST_CASE("power construction") {
    QuandleTable r5 = dihedral_quandle(5);
    NValuedRack p = power_nvalued(r5, 2);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            CHECK(p.product.at(x, y) == ms({((2 * y - x) % 5 + 5) % 5, x}));
    CHECK(p.report.all_pass());

    QuandleTable t3 = trivial_quandle(3);
    NValuedRack one = power_nvalued(t3, 1);
    CHECK(one.product.n == 1);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(one.product.at(x, y) == ms({x}));

    QuandleTable conj = conj_quandle(make_named_group("S3"), 1);
    CHECK_THROWS_WITH_AS(power_nvalued(conj, 2), doctest::Contains("S_y"), Error);
    NValuedRack six = power_nvalued(conj, 6);
    CHECK(six.product.n == 6);
    CHECK(six.report.all_pass());
}

TEST_CASE("power of dihedral equals the closed form for m <= 9") {
    for (int m = 2; m <= 9; ++m) {
        NValuedRack p = power_nvalued(dihedral_quandle(m), 2);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                CHECK(p.product.at(x, y) == ms({((2 * y - x) % m + m) % m, x}));
    }
}

TEST_CASE("degenerate 2-valued multiplication is not associative") {
    // a*b = [a o b, ab] with a o b = unit, on Z3
    FiniteGroup z3 = make_named_group("Z3");
    NValuedTable t;
    t.size = 3;
    t.n = 2;
    t.cells.assign(3, std::vector<Multiset>(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) t.cells[a][b] = ms({0, z3.mul(a, b)});
    AxiomReport rep = nv_assoc_check(t);
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(rep.find("associativity")->witness.empty());
}

TEST_CASE("degenerate single-valued rack check") {
    NValuedTable t2 = nv_from_table(trivial_quandle(2).table);
    CHECK(nv_rack_check(t2, t2, true).all_pass());
}

TEST_CASE("windowed structures on Z+") {
    AxiomReport zplus = windowed_nv_check(
        [](long long x, long long y) { return zplus_group_product(x, y); }, 2, 0,
        [](long long x) { return x; }, 20);
    CHECK(zplus.all_pass());

    for (long long a = 0; a <= 50; ++a)
        for (long long b = 0; b <= 50; ++b)
            CHECK(core_z_coset_product(a, b) == core_z_closed_form(a, b));
}
