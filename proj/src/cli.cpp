#include "nvq/cli.hpp"

#include "nvq/bialgebra.hpp"
#include "nvq/braid.hpp"
#include "nvq/io.hpp"
#include "nvq/linear.hpp"
#include "nvq/nvalued.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace nvq {

namespace {

struct Globals {
    std::string format = "text";
    long long window = 20;
    unsigned seed = 0;
    Inclusion inclusion = Inclusion::multiplicity_aware;
};

struct CliResult {
    std::string command;
    std::vector<std::pair<std::string, std::string>> info;
    AxiomReport report;
    std::string payload;
    bool has_payload = false;
};

void render(std::ostream& out, const CliResult& r, const Globals& g, const std::string& out_path) {
    bool structured = g.format == "structured";
    if (structured) {
        out << "command: " << r.command << "\n";
        for (const auto& [k, v] : r.info) out << k << ": " << v << "\n";
        for (const auto& v : r.report.verdicts()) {
            out << "axiom." << v.axiom << ": " << (v.pass ? "pass" : "FAIL") << "\n";
            if (!v.pass) {
                out << "axiom." << v.axiom << ".violations: " << v.violations << "\n";
                out << "axiom." << v.axiom << ".witness: " << v.witness << "\n";
            }
        }
        out << "status: " << (r.report.all_pass() ? "pass" : "fail") << "\n";
        if (r.has_payload) {
            if (!out_path.empty())
                out << "payload-file: " << out_path << "\n";
            else
                out << "payload:\n" << r.payload;
        }
    } else {
        out << r.command << "\n";
        for (const auto& [k, v] : r.info) out << k << ": " << v << "\n";
        for (const auto& v : r.report.verdicts()) {
            out << "  " << v.axiom << ": " << (v.pass ? "pass" : "FAIL");
            if (!v.pass) out << "  [" << v.violations << " violation(s); first: " << v.witness << "]";
            out << "\n";
        }
        out << "status: " << (r.report.all_pass() ? "pass" : "fail") << "\n";
        if (r.has_payload) {
            if (!out_path.empty())
                out << "payload written to " << out_path << "\n";
            else
                out << r.payload;
        }
    }
    if (r.has_payload && !out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error("FileError", "cannot write '" + out_path + "'");
        f << r.payload;
    }
}

bool looks_like_path(const std::string& s) {
    return s.find('/') != std::string::npos || s.find('.') != std::string::npos;
}

FiniteGroup load_group(const std::string& spec) {
    if (looks_like_path(spec)) {
        std::istringstream in(read_file(spec));
        return read_group(in);
    }
    return make_named_group(spec);
}

// The group underlying a quandle spec, when there is one (for conj-by auts).
std::optional<FiniteGroup> quandle_base_group(const std::string& spec) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string kind = spec.substr(0, colon);
    if (kind != "conj" && kind != "core" && kind != "alex") return std::nullopt;
    std::string rest = spec.substr(colon + 1);
    size_t next = rest.find(':');
    return make_named_group(rest.substr(0, next));
}

QuandleTable load_quandle(const std::string& spec) {
    if (looks_like_path(spec)) {
        std::istringstream in(read_file(spec));
        Table t = read_magma(in);
        return as_quandle(t);
    }
    return make_named_quandle(spec);
}

// raw table for operations that run their own axiom checks
Table load_table(const std::string& spec) {
    if (looks_like_path(spec)) {
        std::istringstream in(read_file(spec));
        return read_magma(in);
    }
    return make_named_quandle(spec).table;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

Perm parse_aut_generator(const std::string& spec, const std::optional<FiniteGroup>& g,
                         int carrier) {
    if (spec == "id") return identity_perm(carrier);
    if (spec == "neg") {
        Perm p(carrier);
        for (int i = 0; i < carrier; ++i) p[i] = (carrier - i) % carrier;
        return p;
    }
    if (spec.rfind("conj-by:", 0) == 0) {
        if (!g) throw Error("UnknownName", "conj-by needs a named group context");
        int el = g->element_by_label(spec.substr(8));
        if (el < 0) throw Error("UnknownName", "no element '" + spec.substr(8) + "'");
        return conjugation_action(*g, el);
    }
    if (spec.rfind("perm:", 0) == 0) {
        Perm p;
        for (const auto& part : split(spec.substr(5), ','))
            p.push_back(std::stoi(part));
        if (static_cast<int>(p.size()) != carrier || !is_permutation(p))
            throw Error("NotAPermutation", "bad permutation spec '" + spec + "'");
        return p;
    }
    throw Error("UnknownName", "no automorphism spec '" + spec + "'");
}

// Semicolon-separated generator list, e.g. "conj-by:s1;conj-by:s2".
PermGroup parse_aut_group(const std::string& spec, const std::optional<FiniteGroup>& g,
                          int carrier) {
    std::vector<Perm> gens;
    for (const auto& part : split(spec, ';'))
        gens.push_back(parse_aut_generator(part, g, carrier));
    return subgroup_generated(carrier, gens);
}

std::vector<int> parse_elements(const std::string& spec, const FiniteGroup& g) {
    std::vector<int> out;
    for (const auto& part : split(spec, ',')) {
        int el = g.element_by_label(part);
        if (el < 0) throw Error("UnknownName", "no element '" + part + "'");
        out.push_back(el);
    }
    return out;
}

std::string labels_line(const std::vector<std::string>& labels) {
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
    return out;
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    for (int i = 0; i < p.count(); ++i) {
        if (i) os << " ";
        os << "{";
        for (size_t j = 0; j < p.parts[i].size(); ++j) os << (j ? "," : "") << p.parts[i][j];
        os << "}";
    }
    return os.str();
}

std::pair<long long, long long> parse_range(const std::string& s) {
    size_t dots = s.find("..");
    if (dots == std::string::npos) throw Error("UnknownName", "range must look like -3..3");
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

// ---- check ----------------------------------------------------------------

CliResult do_check(const std::string& kind, const std::string& file, int unit,
                   const std::string& inv_spec, const Globals& g) {
    CliResult r;
    r.command = "check " + kind;
    r.info.emplace_back("input", file);
    std::istringstream in(read_file(file));

    if (kind == "rack" || kind == "quandle") {
        Table t = read_magma(in);
        r.report = kind == "rack" ? rack_check(t) : quandle_check(t);
    } else if (kind == "nvgroup") {
        ParsedNValued nv = read_nvalued(in);
        std::vector<int> inv;
        if (inv_spec == "id") {
            for (int i = 0; i < nv.product.size; ++i) inv.push_back(i);
        } else {
            for (const auto& part : split(inv_spec, ',')) inv.push_back(std::stoi(part));
        }
        r.report = nv_group_check(nv.product, unit, inv);
    } else if (kind == "nvrack" || kind == "nvquandle") {
        ParsedNValued nv = read_nvalued(in);
        if (!nv.bar) throw Error("KindMismatch", "file has no bar block");
        r.report = nv_rack_check(nv.product, *nv.bar, kind == "nvquandle", g.inclusion);
    } else if (kind == "multigroup") {
        MultiOpFamily fam = read_multi(in);
        if (fam.flavor != MultiOpFamily::Flavor::group)
            throw Error("KindMismatch", "file flavor is not group");
        r.report = multi_group_check(fam);
    } else if (kind == "multirack") {
        MultiOpFamily fam = read_multi(in);
        if (fam.flavor == MultiOpFamily::Flavor::group)
            throw Error("KindMismatch", "file flavor is group");
        r.report = multi_rack_check(fam);
    } else if (kind == "braid") {
        BraidMap b = read_braid(in);
        r.report = braid_check(b);
    } else {
        throw Error("KindMismatch", "unknown check kind '" + kind + "'");
    }
    return r;
}

// ---- build ----------------------------------------------------------------

CliResult do_build(const std::string& what, const std::string& group_spec,
                   const std::string& quandle_spec, const std::string& aut_spec,
                   const std::string& subgroup_spec, const std::string& exponents_spec,
                   int n_flag, const std::string& nv_file, const std::string& multi_file,
                   const Globals& g) {
    (void)g;
    CliResult r;
    r.command = "build " + what;
    std::ostringstream payload;

    if (what == "coset-group") {
        FiniteGroup grp = load_group(group_spec);
        PermGroup a = parse_aut_group(aut_spec, grp, grp.size);
        NValuedGroup nv = coset_nv_group(grp, a);
        r.info.emplace_back("classes", std::to_string(nv.product.size));
        r.info.emplace_back("n", std::to_string(nv.product.n));
        r.info.emplace_back("unit", std::to_string(nv.unit));
        std::string invs;
        for (size_t i = 0; i < nv.inv.size(); ++i) invs += (i ? "," : "") + std::to_string(nv.inv[i]);
        r.info.emplace_back("inv", invs);
        if (!grp.labels.empty()) r.info.emplace_back("labels", labels_line(grp.labels));
        r.report = nv.report;
        write_nvalued(payload, nv.product);
    } else if (what == "coset-quandle") {
        QuandleTable q = load_quandle(quandle_spec);
        std::optional<FiniteGroup> base = quandle_base_group(quandle_spec);
        PermGroup a = parse_aut_group(aut_spec, base, q.size);
        NValuedRack nv = coset_nv_quandle(q, a);
        r.info.emplace_back("classes", std::to_string(nv.product.size));
        r.info.emplace_back("n", std::to_string(nv.product.n));
        r.report = nv.report;
        write_nvalued(payload, nv.product, &nv.bar);
    } else if (what == "double-coset") {
        FiniteGroup grp = load_group(group_spec);
        std::vector<int> h = parse_elements(subgroup_spec, grp);
        NValuedGroup nv = double_coset_group(grp, h);
        Partition cls = double_cosets(grp, h);
        r.info.emplace_back("classes", std::to_string(nv.product.size));
        r.info.emplace_back("partition", partition_str(cls));
        r.info.emplace_back("unit", std::to_string(nv.unit));
        r.report = nv.report;
        write_nvalued(payload, nv.product);
    } else if (what == "conj-family") {
        FiniteGroup grp = load_group(group_spec);
        std::vector<int> exps;
        for (const auto& part : split(exponents_spec, ',')) exps.push_back(std::stoi(part));
        NValuedRack nv = conj_family(grp, exps);
        r.info.emplace_back("n", std::to_string(nv.product.n));
        r.report = nv.report;
        write_nvalued(payload, nv.product, &nv.bar);
    } else if (what == "powers") {
        QuandleTable q = load_quandle(quandle_spec);
        NValuedRack nv = power_nvalued(q, n_flag);
        r.info.emplace_back("n", std::to_string(nv.product.n));
        r.report = nv.report;
        write_nvalued(payload, nv.product, &nv.bar);
    } else if (what == "multi-to-nv") {
        std::istringstream in(read_file(multi_file));
        MultiOpFamily fam = read_multi(in);
        MultiToNv nv = multi_to_nvalued(fam);
        r.info.emplace_back("n", std::to_string(nv.product.n));
        r.report = nv.report;
        write_nvalued(payload, nv.product, nv.bar ? &*nv.bar : nullptr);
    } else if (what == "rack-bialgebra") {
        SpaceWithReport s = rack_bialgebra(load_table(quandle_spec));
        r.info.emplace_back("dim", std::to_string(s.space.dim));
        r.report = s.report;
        write_space(payload, s.space);
    } else if (what == "functions-space") {
        std::istringstream in(read_file(nv_file));
        ParsedNValued nv = read_nvalued(in);
        SpaceWithReport s = functions_space(nv.product);
        r.info.emplace_back("dim", std::to_string(s.space.dim));
        r.report = s.report;
        write_space(payload, s.space);
    } else {
        throw Error("KindMismatch", "unknown build target '" + what + "'");
    }
    r.payload = payload.str();
    r.has_payload = true;
    return r;
}

// ---- search ---------------------------------------------------------------

bool braid_quick_pass(const LinearForm& f1, const LinearForm& f2, long long w) {
    long long safe = 4 * w;
    for (long long x = -w; x <= w; ++x)
        for (long long y = -w; y <= w; ++y)
            for (long long z = -w; z <= w; ++z) {
                bool ok = true;
                auto apply = [&](long long& a, long long& b) {
                    long long na = f1.eval(a, b), nb = f2.eval(a, b);
                    if (std::llabs(na) > safe || std::llabs(nb) > safe) ok = false;
                    a = na;
                    b = nb;
                };
                long long l0 = x, l1 = y, l2 = z;
                apply(l0, l1);
                apply(l1, l2);
                apply(l0, l1);
                long long r0 = x, r1 = y, r2 = z;
                apply(r1, r2);
                apply(r0, r1);
                apply(r1, r2);
                if (!ok) continue;
                if (l0 != r0 || l1 != r1 || l2 != r2) return false;
            }
    return true;
}

std::string form_str(const LinearForm& f) {
    std::ostringstream os;
    bool any = false;
    auto term = [&](long long c, const char* v) {
        if (c == 0) return;
        if (any && c > 0) os << "+";
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << c;
        os << v;
        any = true;
    };
    term(f.cx, "x");
    term(f.cy, "y");
    if (f.c != 0 || !any) {
        if (any && f.c >= 0) os << "+";
        os << f.c;
    }
    return os.str();
}

CliResult do_search(const std::string& what, int order, bool up_to_iso, int ops,
                    const std::string& a_range, const std::string& b_range, const Globals& g,
                    std::ostream& /*err*/) {
    CliResult r;
    r.command = "search " + what;
    std::ostringstream payload;

    if (what == "enumerate-quandles") {
        if (order < 1 || order > 5) throw Error("SizeLimitExceeded", "order must be 1..5");
        std::vector<QuandleTable> qs = enumerate_quandles(order, up_to_iso);
        r.info.emplace_back("order", std::to_string(order));
        r.info.emplace_back("up-to-iso", up_to_iso ? "true" : "false");
        r.info.emplace_back("count", std::to_string(qs.size()));
        for (const auto& q : qs) {
            write_magma(payload, q.table);
            payload << "\n";
        }
        r.report.add("all-pass-quandle-check");  // enumerate only emits checked tables
    } else if (what == "enumerate-multiracks") {
        if (ops != 2) throw Error("SizeLimitExceeded", "only --ops 2 is supported");
        if (order < 1 || order > 4) throw Error("SizeLimitExceeded", "order must be 1..4");
        std::vector<QuandleTable> racks = enumerate_racks(order);
        long long pairs = 0;
        for (size_t i = 0; i < racks.size(); ++i)
            for (size_t j = i; j < racks.size(); ++j) {
                MultiOpFamily fam{order, {racks[i].table, racks[j].table},
                                  MultiOpFamily::Flavor::rack};
                if (multi_rack_check(fam).all_pass()) ++pairs;
            }
        r.info.emplace_back("order", std::to_string(order));
        r.info.emplace_back("rack-tables", std::to_string(racks.size()));
        r.info.emplace_back("multirack-pairs", std::to_string(pairs));
        r.report.add("pairwise-distributivity-filter");
    } else if (what == "braid-multirack") {
        auto [alo, ahi] = parse_range(a_range);
        auto [blo, bhi] = parse_range(b_range);
        if (ahi - alo > 20 || bhi - blo > 20)
            throw Error("SizeLimitExceeded", "parameter ranges guarded at 21 values");
        long long w = g.window;
        std::vector<LinearForm> forms;
        for (long long cx = alo; cx <= ahi; ++cx)
            for (long long cy = alo; cy <= ahi; ++cy)
                for (long long c = blo; c <= bhi; ++c) forms.push_back(LinearForm{cx, cy, c});

        int survivors = 0;
        for (const auto& f1 : forms)
            for (const auto& f2 : forms) {
                // where both components are rack-shaped ops eps*x + a*y + b,
                // apply the 2-multi-rack filter first
                bool shaped = (f1.cx == 1 || f1.cx == -1) && (f2.cx == 1 || f2.cx == -1);
                std::string family;
                if (shaped) {
                    WindowedZOp op1{static_cast<int>(f1.cx), f1.cy, f1.c};
                    WindowedZOp op2{static_cast<int>(f2.cx), f2.cy, f2.c};
                    LinearRackReport r1 = linear_rack_check(op1, 4);
                    LinearRackReport r2 = linear_rack_check(op2, 4);
                    if (r1.classification == LinearClass::not_rack ||
                        r2.classification == LinearClass::not_rack)
                        continue;
                    LinearMultirackReport mr = linear_multirack_check(op1, op2, 6);
                    if (!mr.axioms.all_pass()) continue;
                    family = mr.family.value_or("-");
                }
                if (!braid_quick_pass(f1, f2, 3)) continue;
                BraidMap bm = braid_from_forms(f1, f2, w);
                if (!braid_check(bm).all_pass()) continue;
                ++survivors;
                payload << "R(x,y) = (" << form_str(f1) << ", " << form_str(f2) << ")";
                if (shaped) payload << "  [2-multi-rack, family " << family << "]";
                payload << "\n";
            }
        r.info.emplace_back("window", std::to_string(w));
        r.info.emplace_back("survivors", std::to_string(survivors));
        r.report.add("braid-equation-sweep");
    } else {
        throw Error("KindMismatch", "unknown search target '" + what + "'");
    }
    r.payload = payload.str();
    r.has_payload = !r.payload.empty();
    return r;
}

// ---- bialgebra ------------------------------------------------------------

CliResult do_bialgebra(const std::string& what, const std::string& nv_file, int n,
                       const std::string& group_spec, const std::string& subgroup_spec,
                       const Globals& g) {
    CliResult r;
    r.command = "bialgebra " + what;

    if (what == "frobenius") {
        std::istringstream in(read_file(nv_file));
        ParsedNValued nv = read_nvalued(in);
        SpaceWithReport cx = functions_space(nv.product);
        r.report = frobenius_check(delta_as_map(cx.space), n, 0, g.seed);
        r.info.emplace_back("dim", std::to_string(cx.space.dim));
        r.info.emplace_back("n", std::to_string(n));
    } else if (what == "corack") {
        std::istringstream in(read_file(nv_file));
        ParsedNValued nv = read_nvalued(in);
        SpaceWithReport cx = functions_space(nv.product);
        r.report = corack_check(cx.space, n, g.seed);
        r.info.emplace_back("dim", std::to_string(cx.space.dim));
        r.info.emplace_back("n", std::to_string(n));
    } else if (what == "pairing") {
        std::istringstream in(read_file(nv_file));
        ParsedNValued nv = read_nvalued(in);
        SpaceWithReport ka = group_algebra(nv.product);
        SpaceWithReport cx = functions_space(nv.product);
        r.report = pairing_check(ka.space, cx.space);
        r.info.emplace_back("checks", std::to_string(static_cast<long long>(nv.product.size) *
                                                     nv.product.size * nv.product.size));
    } else if (what == "invariant-coproduct") {
        FiniteGroup grp = load_group(group_spec);
        std::vector<int> b = parse_elements(subgroup_spec, grp);
        std::vector<RatVec> basis = invariant_functions(grp, b);
        r.info.emplace_back("dim-invariants", std::to_string(basis.size()));
        if (!grp.labels.empty()) r.info.emplace_back("labels", labels_line(grp.labels));
        for (size_t i = 0; i < basis.size(); ++i) {
            InvariantCoproduct cp = invariant_coproduct(grp, b, basis[i]);
            for (const auto& v : cp.report.verdicts()) {
                auto& copy = r.report.add("indicator" + std::to_string(i) + "." + v.axiom);
                copy.pass = v.pass;
                copy.violations = v.violations;
                copy.witness = v.witness;
            }
        }
    } else {
        throw Error("KindMismatch", "unknown bialgebra target '" + what + "'");
    }
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"n-valued group/rack/quandle and corack bialgebra workbench"};
    app.name("nvq");

    Globals g;
    std::string inclusion = "multiplicity";
    app.add_option("--format", g.format)->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--window", g.window);
    app.add_option("--seed", g.seed);
    app.add_option("--inclusion", inclusion)->check(CLI::IsMember({"multiplicity", "support"}));

    // check
    auto* check = app.add_subcommand("check", "run an axiom suite on a file");
    check->fallthrough();
    std::string check_kind, check_file, inv_spec = "id";
    int unit_flag = 0;
    check->add_option("kind", check_kind)
        ->required()
        ->check(CLI::IsMember({"rack", "quandle", "nvgroup", "nvrack", "nvquandle", "multigroup",
                               "multirack", "braid"}));
    check->add_option("file", check_file)->required();
    check->add_option("--unit", unit_flag);
    check->add_option("--inv", inv_spec);

    // build
    auto* build = app.add_subcommand("build", "run a construction and emit its table");
    build->fallthrough();
    std::string build_what, group_spec, quandle_spec, aut_spec, subgroup_spec, exponents_spec;
    std::string nv_file, multi_file, out_path;
    int n_flag = 1;
    build->add_option("what", build_what)
        ->required()
        ->check(CLI::IsMember({"coset-group", "coset-quandle", "double-coset", "conj-family",
                               "powers", "multi-to-nv", "rack-bialgebra", "functions-space"}));
    build->add_option("--group", group_spec);
    build->add_option("--quandle", quandle_spec);
    build->add_option("--aut", aut_spec);
    build->add_option("--subgroup", subgroup_spec);
    build->add_option("--exponents", exponents_spec);
    build->add_option("--n", n_flag);
    build->add_option("--nv", nv_file);
    build->add_option("--multi", multi_file);
    build->add_option("--out", out_path);

    // search
    auto* search = app.add_subcommand("search", "deterministic sweeps and enumerations");
    search->fallthrough();
    std::string search_what, a_range = "-2..2", b_range = "-2..2";
    int order = 3, ops = 2;
    bool up_to_iso = false;
    search->add_option("what", search_what)
        ->required()
        ->check(CLI::IsMember({"braid-multirack", "enumerate-quandles", "enumerate-multiracks"}));
    search->add_option("--order", order);
    search->add_flag("--up-to-iso", up_to_iso);
    search->add_option("--ops", ops);
    search->add_option("--a-range", a_range);
    search->add_option("--b-range", b_range);

    // bialgebra
    auto* bial = app.add_subcommand("bialgebra", "tensor-identity verifications");
    bial->fallthrough();
    std::string bial_what;
    int bial_n = 1;
    bial->add_option("what", bial_what)
        ->required()
        ->check(CLI::IsMember({"frobenius", "corack", "pairing", "invariant-coproduct"}));
    bial->add_option("--nv", nv_file);
    bial->add_option("--n", bial_n);
    bial->add_option("--group", group_spec);
    bial->add_option("--subgroup", subgroup_spec);

    app.require_subcommand(1);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    g.inclusion = inclusion == "support" ? Inclusion::support_only : Inclusion::multiplicity_aware;

    try {
        CliResult r;
        if (check->parsed()) {
            r = do_check(check_kind, check_file, unit_flag, inv_spec, g);
            render(out, r, g, "");
        } else if (build->parsed()) {
            r = do_build(build_what, group_spec, quandle_spec, aut_spec, subgroup_spec,
                         exponents_spec, n_flag, nv_file, multi_file, g);
            render(out, r, g, out_path);
        } else if (search->parsed()) {
            r = do_search(search_what, order, up_to_iso, ops, a_range, b_range, g, err);
            render(out, r, g, "");
        } else {
            r = do_bialgebra(bial_what, nv_file, bial_n, group_spec, subgroup_spec, g);
            render(out, r, g, "");
        }
        return r.report.all_pass() ? 0 : 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace nvq
