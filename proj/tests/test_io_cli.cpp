#include "nvq/bialgebra.hpp"
#include "nvq/cli.hpp"
#include "nvq/io.hpp"

#include "doctest.h"

#include <fstream>
#include <sstream>

using namespace nvq;

namespace {

const std::string kFixtures = NVQ_FIXTURE_DIR;

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

template <typename T, typename R, typename W>
void roundtrip(const T& value, R reader, W writer) {
    std::ostringstream first;
    writer(first, value);
    std::istringstream in(first.str());
    T back = reader(in);
    std::ostringstream second;
    writer(second, back);
    CHECK(first.str() == second.str());
}

}  // namespace

TEST_CASE("group file round trip") {
    roundtrip(
        make_named_group("S3"), [](std::istream& in) { return read_group(in); },
        [](std::ostream& os, const FiniteGroup& g) { write_group(os, g); });
}

TEST_CASE("magma and nvalued round trips") {
    roundtrip(
        dihedral_quandle(5).table, [](std::istream& in) { return read_magma(in); },
        [](std::ostream& os, const Table& t) { write_magma(os, t); });

    FiniteGroup s3 = make_named_group("S3");
    NValuedRack nv = conj_family(s3, {1, 2});
    std::ostringstream first;
    write_nvalued(first, nv.product, &nv.bar);
    std::istringstream in(first.str());
    ParsedNValued back = read_nvalued(in);
    REQUIRE(back.bar.has_value());
    std::ostringstream second;
    write_nvalued(second, back.product, &*back.bar);
    CHECK(first.str() == second.str());
}

TEST_CASE("multi and braid round trips") {
    MultiOpFamily fam{3, {dihedral_quandle(3).table, trivial_quandle(3).table},
                      MultiOpFamily::Flavor::quandle};
    roundtrip(
        fam, [](std::istream& in) { return read_multi(in); },
        [](std::ostream& os, const MultiOpFamily& f) { write_multi(os, f); });

    roundtrip(
        rack_to_braid(dihedral_quandle(3)), [](std::istream& in) { return read_braid(in); },
        [](std::ostream& os, const BraidMap& b) { write_braid(os, b); });
}

TEST_CASE("space round trip") {
    StructureConstantSpace s = functions_space(nv_from_group(make_named_group("Z3"))).space;
    std::ostringstream first;
    write_space(first, s);
    std::istringstream in(first.str());
    StructureConstantSpace back = read_space(in);
    std::ostringstream second;
    write_space(second, back);
    CHECK(first.str() == second.str());
    CHECK(back.dim == s.dim);
    REQUIRE(back.comult.has_value());
    CHECK(back.comult->data == s.comult->data);
}

TEST_CASE("parse errors carry positions") {
    std::istringstream bad_header("grp 3\n");
    CHECK_THROWS_AS(read_group(bad_header), ParseError);

    std::istringstream short_row("magma 3\n0 1 2\n0 1\n2 0 1\n");
    try {
        read_magma(short_row);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    std::istringstream out_of_range("magma 2\n0 3\n1 0\n");
    try {
        read_magma(out_of_range);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 3);
    }

    std::istringstream bad_cell("nvalued 2 2\n[0,0] [0]\n[1,1] [1,1]\n");
    CHECK_THROWS_AS(read_nvalued(bad_cell), ParseError);
}

TEST_CASE("cli exit codes") {
    CHECK(cli({"check", "quandle", kFixtures + "/r3.magma"}) == 0);
    CHECK(cli({"check", "nvquandle", kFixtures + "/cosetq.nv"}) == 0);
    CHECK(cli({"check", "multigroup", kFixtures + "/z4_klein.multi"}) == 1);

    std::string err;
    CHECK(cli({"check", "quandle", kFixtures + "/does_not_exist.magma"}, nullptr, &err) == 2);
    CHECK(cli({"check", "quandle", kFixtures + "/r3.magma", "--bogus-flag"}, nullptr, &err) == 2);
    CHECK(cli({"frobnicate"}, nullptr, &err) == 2);

    // rack file given to the nv checker: kind mismatch
    CHECK(cli({"check", "nvrack", kFixtures + "/r3.magma"}, nullptr, &err) == 2);
}

TEST_CASE("cli determinism") {
    std::vector<std::string> cmd = {"--format", "structured", "build",       "coset-quandle",
                                    "--quandle", "conj:S3:1",  "--aut",      "conj-by:s1"};
    std::string first, second;
    CHECK(cli(cmd, &first) == 0);
    CHECK(cli(cmd, &second) == 0);
    CHECK(first == second);
    CHECK(first.find("status: pass") != std::string::npos);
}

TEST_CASE("build payloads re-parse") {
    std::string out;
    CHECK(cli({"--format", "structured", "build", "conj-family", "--group", "S3", "--exponents",
               "1,2"},
              &out) == 0);
    size_t marker = out.find("payload:\n");
    REQUIRE(marker != std::string::npos);
    std::istringstream payload(out.substr(marker + 9));
    ParsedNValued nv = read_nvalued(payload);
    CHECK(nv.product.size == 6);
    CHECK(nv.product.n == 2);
    CHECK(nv.bar.has_value());
}

TEST_CASE("every build payload re-parses in its own format") {
    std::vector<std::vector<std::string>> nv_builds = {
        {"build", "coset-group", "--group", "Z4", "--aut", "neg"},
        {"build", "coset-quandle", "--quandle", "conj:S3:1", "--aut", "conj-by:s1"},
        {"build", "double-coset", "--group", "S3", "--subgroup", "e,s1"},
        {"build", "powers", "--quandle", "dihedral:5", "--n", "2"},
    };
    for (auto cmd : nv_builds) {
        cmd.insert(cmd.begin(), {"--format", "structured"});
        std::string out;
        REQUIRE(cli(cmd, &out) == 0);
        size_t marker = out.find("payload:\n");
        REQUIRE(marker != std::string::npos);
        std::istringstream payload(out.substr(marker + 9));
        ParsedNValued nv = read_nvalued(payload);
        std::ostringstream again;
        write_nvalued(again, nv.product, nv.bar ? &*nv.bar : nullptr);
        CHECK(again.str() == out.substr(marker + 9));
    }

    for (const char* spec : {"dihedral:3", "trivial:4"}) {
        std::string out;
        REQUIRE(cli({"--format", "structured", "build", "rack-bialgebra", "--quandle", spec},
                    &out) == 0);
        size_t marker = out.find("payload:\n");
        REQUIRE(marker != std::string::npos);
        std::istringstream payload(out.substr(marker + 9));
        StructureConstantSpace s = read_space(payload);
        std::ostringstream again;
        write_space(again, s);
        CHECK(again.str() == out.substr(marker + 9));
    }
}

TEST_CASE("check nvgroup with unit and inverse flags") {
    std::string out;
    REQUIRE(cli({"build", "coset-group", "--group", "Z4", "--aut", "neg", "--out",
                 "/tmp/nvq_z4coset.nv"},
                &out) == 0);
    CHECK(cli({"check", "nvgroup", "/tmp/nvq_z4coset.nv"}, &out) == 0);
    CHECK(out.find("unit: pass") != std::string::npos);
    CHECK(out.find("inverse: pass") != std::string::npos);

    // a wrong unit flips the verdict
    CHECK(cli({"check", "nvgroup", "/tmp/nvq_z4coset.nv", "--unit", "1"}, &out) == 1);
    // out-of-range inverse entries are a usage error, not a crash
    CHECK(cli({"check", "nvgroup", "/tmp/nvq_z4coset.nv", "--inv", "5,5,5"}, &out) == 2);
}

TEST_CASE("braid-multirack sweep lists the linear braid families") {
    std::string out;
    CHECK(cli({"--window", "6", "search", "braid-multirack", "--b-range", "-2..2"}, &out) == 0);
    CHECK(out.find("R(x,y) = (x, y)\n") != std::string::npos);
    CHECK(out.find("R(x,y) = (-x+2y, x)") != std::string::npos);
    CHECK(out.find("R(x,y) = (y, 2x-y)\n") != std::string::npos);
    CHECK(out.find("R(x,y) = (x, -x+2)") != std::string::npos);
    CHECK(out.find("family 3.2") != std::string::npos);
}

TEST_CASE("rack-bialgebra accepts a Q3-violating control file") {
    std::string path = "/tmp/nvq_control.magma";
    {
        std::ofstream f(path);
        f << "magma 3\n0 1 1\n1 0 0\n2 2 2\n";
    }
    std::string out;
    CHECK(cli({"build", "rack-bialgebra", "--quandle", path}, &out) == 1);
    CHECK(out.find("self-dist1: FAIL") != std::string::npos);
}

TEST_CASE("inclusion flag switches the M2 mode") {
    std::string out;
    CHECK(cli({"--inclusion", "support", "check", "nvquandle", kFixtures + "/cosetq.nv"}, &out) ==
          0);
    CHECK(out.find("M2(support)") != std::string::npos);
}

TEST_CASE("powers payload matches the dihedral closed form") {
    std::string out;
    CHECK(cli({"--format", "structured", "build", "powers", "--quandle", "dihedral:5", "--n", "2"},
              &out) == 0);
    size_t marker = out.find("payload:\n");
    REQUIRE(marker != std::string::npos);
    std::istringstream payload(out.substr(marker + 9));
    ParsedNValued nv = read_nvalued(payload);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            CHECK(nv.product.at(x, y) == Multiset::from_list({((2 * y - x) % 5 + 5) % 5, x}));
}

TEST_CASE("multirack enumeration count agrees with a direct filter") {
    long long expect = 0;
    std::vector<QuandleTable> racks = enumerate_racks(3);
    for (size_t i = 0; i < racks.size(); ++i)
        for (size_t j = i; j < racks.size(); ++j) {
            MultiOpFamily fam{3, {racks[i].table, racks[j].table}, MultiOpFamily::Flavor::rack};
            if (multi_rack_check(fam).all_pass()) ++expect;
        }

    std::string out;
    CHECK(cli({"search", "enumerate-multiracks", "--order", "3", "--ops", "2"}, &out) == 0);
    CHECK(out.find("multirack-pairs: " + std::to_string(expect)) != std::string::npos);
}

TEST_CASE("bialgebra subcommands run end to end") {
    std::string out;
    CHECK(cli({"bialgebra", "frobenius", "--nv", kFixtures + "/cosetq.nv", "--n", "2"}, &out) == 0);
    CHECK(out.find("Phi_3 = 0 (basis): pass") != std::string::npos);

    CHECK(cli({"bialgebra", "corack", "--nv", kFixtures + "/cosetq.nv", "--n", "2"}, &out) == 1);
    CHECK(out.find("4 vs 8") != std::string::npos);

    CHECK(cli({"bialgebra", "pairing", "--nv", kFixtures + "/cosetq.nv"}, &out) == 0);
    CHECK(cli({"bialgebra", "invariant-coproduct", "--group", "SL2F2", "--subgroup", "E,A2"},
              &out) == 0);
    CHECK(out.find("dim-invariants: 4") != std::string::npos);
}
