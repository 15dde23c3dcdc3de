#include "nvq/bialgebra.hpp"
#include "nvq/braid.hpp"
#include "nvq/cli.hpp"
#include "nvq/io.hpp"
#include "nvq/linear.hpp"
#include "nvq/nvalued.hpp"
#include "nvq/pencil.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace nvq;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.num(), r.den());
}

Rational from_fraction(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
    return Rational(h.attr("numerator").cast<long long>(),
                    h.attr("denominator").cast<long long>());
}

RatVec vec_from_py(const py::sequence& seq) {
    RatVec v;
    for (const auto& item : seq) v.push_back(from_fraction(item));
    return v;
}

py::list vec_to_py(const RatVec& v) {
    py::list out;
    for (const auto& x : v) out.append(to_fraction(x));
    return out;
}

std::vector<std::vector<std::vector<int>>> cells_to_lists(const NValuedTable& t) {
    std::vector<std::vector<std::vector<int>>> out(t.size);
    for (int i = 0; i < t.size; ++i)
        for (int j = 0; j < t.size; ++j) out[i].push_back(t.at(i, j).expanded());
    return out;
}

NValuedTable table_from_lists(const std::vector<std::vector<std::vector<int>>>& cells, int n) {
    NValuedTable t;
    t.size = static_cast<int>(cells.size());
    t.n = n;
    for (const auto& row : cells) {
        std::vector<Multiset> r;
        for (const auto& cell : row) r.push_back(Multiset::from_list(cell));
        t.cells.push_back(std::move(r));
    }
    t.validate();
    return t;
}

MultiOpFamily family_from(int size, const std::vector<Table>& ops, const std::string& flavor) {
    MultiOpFamily fam;
    fam.size = size;
    fam.ops = ops;
    fam.flavor = flavor == "group"  ? MultiOpFamily::Flavor::group
                 : flavor == "rack" ? MultiOpFamily::Flavor::rack
                                    : MultiOpFamily::Flavor::quandle;
    return fam;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "n-valued groups, racks, quandles and corack bialgebras over exact rationals";

    py::register_exception<Error>(m, "NvqError");

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("axiom", &Verdict::axiom)
        .def_readonly("passed", &Verdict::pass)
        .def_readonly("informational", &Verdict::informational)
        .def_readonly("violations", &Verdict::violations)
        .def_readonly("witness", &Verdict::witness)
        .def("__repr__", [](const Verdict& v) {
            return "<Verdict " + v.axiom + ": " + (v.pass ? "pass" : "FAIL") + ">";
        });

    py::class_<AxiomReport>(m, "AxiomReport")
        .def_property_readonly("all_pass", &AxiomReport::all_pass)
        .def_property_readonly("verdicts",
                               [](const AxiomReport& r) {
                                   return std::vector<Verdict>(r.verdicts().begin(),
                                                               r.verdicts().end());
                               })
        .def("find",
             [](const AxiomReport& r, const std::string& axiom) -> py::object {
                 const Verdict* v = r.find(axiom);
                 return v ? py::cast(*v) : py::none();
             })
        .def("__repr__", [](const AxiomReport& r) {
            return std::string("<AxiomReport ") + (r.all_pass() ? "pass" : "fail") + ">";
        });

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_readonly("size", &FiniteGroup::size)
        .def_readonly("table", &FiniteGroup::table)
        .def_readonly("unit", &FiniteGroup::unit)
        .def_readonly("inverse", &FiniteGroup::inverse)
        .def_readonly("labels", &FiniteGroup::labels)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("power", &FiniteGroup::power)
        .def("order_of", &FiniteGroup::order_of)
        .def("element_by_label", &FiniteGroup::element_by_label);

    py::class_<PermGroup>(m, "PermGroup")
        .def_readonly("degree", &PermGroup::degree)
        .def_readonly("elements", &PermGroup::elements)
        .def_property_readonly("order", &PermGroup::order);

    py::class_<Partition>(m, "Partition")
        .def_readonly("parts", &Partition::parts)
        .def_readonly("proj", &Partition::proj)
        .def_property_readonly("count", &Partition::count);

    py::class_<QuandleTable>(m, "QuandleTable")
        .def_readonly("size", &QuandleTable::size)
        .def_readonly("table", &QuandleTable::table)
        .def("translation", &QuandleTable::translation);

    py::class_<NValuedTable>(m, "NValuedTable")
        .def_readonly("size", &NValuedTable::size)
        .def_readonly("n", &NValuedTable::n)
        .def_property_readonly("cells", &cells_to_lists)
        .def("cell",
             [](const NValuedTable& t, int i, int j) { return t.at(i, j).expanded(); });

    py::class_<NValuedGroup>(m, "NValuedGroup")
        .def_readonly("product", &NValuedGroup::product)
        .def_readonly("unit", &NValuedGroup::unit)
        .def_readonly("inv", &NValuedGroup::inv)
        .def_readonly("report", &NValuedGroup::report);

    py::class_<NValuedRack>(m, "NValuedRack")
        .def_readonly("product", &NValuedRack::product)
        .def_readonly("bar", &NValuedRack::bar)
        .def_readonly("report", &NValuedRack::report);

    py::class_<StructureConstantSpace>(m, "StructureConstantSpace")
        .def_readonly("dim", &StructureConstantSpace::dim)
        .def("mult", [](const StructureConstantSpace& s, int i, int j,
                        int k) { return to_fraction(s.mult.at3(i, j, k)); })
        .def("comult",
             [](const StructureConstantSpace& s, int k, int i, int j) -> py::object {
                 if (!s.comult) return py::none();
                 return to_fraction(s.comult->at3(k, i, j));
             })
        .def_property_readonly("unit_vector",
                               [](const StructureConstantSpace& s) { return vec_to_py(s.unit_vec); })
        .def_property_readonly("has_comult",
                               [](const StructureConstantSpace& s) { return s.comult.has_value(); });

    // groups
    m.def("make_named_group", &make_named_group);
    m.def("group_from_table", &group_from_table, py::arg("table"),
          py::arg("labels") = std::vector<std::string>{});
    m.def("group_isomorphic", &group_isomorphic);
    m.def("conjugation_action", &conjugation_action);
    m.def("subgroup_generated", &subgroup_generated);
    m.def("orbits", &orbits);
    m.def("double_cosets", &double_cosets);

    // quandles
    m.def("rack_check", &rack_check);
    m.def("quandle_check", &quandle_check);
    m.def("conj_quandle", &conj_quandle);
    m.def("core_quandle", &core_quandle);
    m.def("alexander_quandle", &alexander_quandle);
    m.def("trivial_quandle", &trivial_quandle);
    m.def("dihedral_quandle", &dihedral_quandle);
    m.def("make_named_quandle", &make_named_quandle);
    m.def("inner_group", &inner_group);
    m.def("quandle_product", [](const QuandleTable& a, const QuandleTable& b) {
        ProductReport pr = quandle_product(a, b);
        return py::make_tuple(pr.table, pr.distributive, pr.check);
    });
    m.def("is_n_quandle", &is_n_quandle);
    m.def("enumerate_quandles", &enumerate_quandles, py::arg("order"),
          py::arg("up_to_iso") = true);

    // n-valued structures
    m.def("nv_from_table", &nv_from_table);
    m.def("nv_table", &table_from_lists, py::arg("cells"), py::arg("n"));
    m.def("nv_assoc_check", &nv_assoc_check);
    m.def("nv_group_check", &nv_group_check);
    m.def(
        "nv_rack_check",
        [](const NValuedTable& product, const NValuedTable& bar, bool want_quandle,
           bool multiplicity_aware) {
            return nv_rack_check(product, bar, want_quandle,
                                 multiplicity_aware ? Inclusion::multiplicity_aware
                                                    : Inclusion::support_only);
        },
        py::arg("product"), py::arg("bar"), py::arg("want_quandle"),
        py::arg("multiplicity_aware") = true);
    m.def("coset_nv_group", &coset_nv_group);
    m.def("coset_nv_quandle", &coset_nv_quandle);
    m.def("double_coset_group", &double_coset_group);
    m.def("multi_group_check", [](int size, const std::vector<Table>& ops) {
        return multi_group_check(family_from(size, ops, "group"));
    });
    m.def("multi_rack_check", [](int size, const std::vector<Table>& ops,
                                 const std::string& flavor) {
        return multi_rack_check(family_from(size, ops, flavor));
    });
    m.def("multi_to_nvalued",
          [](int size, const std::vector<Table>& ops, const std::string& flavor) {
              MultiToNv r = multi_to_nvalued(family_from(size, ops, flavor));
              return py::make_tuple(r.product, r.bar, r.report);
          });
    m.def("conj_family", &conj_family);
    m.def("power_nvalued", &power_nvalued);

    // linear operations on Z
    m.def("linear_rack_check", [](int epsilon, long long a, long long b, long long window) {
        LinearRackReport r = linear_rack_check({epsilon, a, b}, window);
        return py::make_tuple(linear_class_name(r.classification), r.axioms);
    });
    m.def("linear_multirack_check",
          [](std::tuple<int, long long, long long> op1, std::tuple<int, long long, long long> op2,
             long long window) {
              auto [e1, a1, b1] = op1;
              auto [e2, a2, b2] = op2;
              LinearMultirackReport r = linear_multirack_check({e1, a1, b1}, {e2, a2, b2}, window);
              return py::make_tuple(r.family ? py::cast(*r.family) : py::none(), r.axioms);
          });
    m.def("zplus_group_product", &zplus_group_product);
    m.def("core_z_coset_product", &core_z_coset_product);
    m.def("core_z_closed_form", &core_z_closed_form);

    // braid maps
    m.def("braid_check_table", [](int size, const std::vector<std::pair<int, int>>& table) {
        return braid_check(braid_from_table(size, table));
    });
    m.def("braid_check_forms",
          [](std::tuple<long long, long long, long long> f1,
             std::tuple<long long, long long, long long> f2, long long half_width) {
              auto [a1, b1, c1] = f1;
              auto [a2, b2, c2] = f2;
              return braid_check(braid_from_forms({a1, b1, c1}, {a2, b2, c2}, half_width));
          });
    m.def("braid_check_mod", [](std::tuple<long long, long long, long long> f1,
                                std::tuple<long long, long long, long long> f2, int mod) {
        auto [a1, b1, c1] = f1;
        auto [a2, b2, c2] = f2;
        return braid_check(braid_mod({a1, b1, c1}, {a2, b2, c2}, mod));
    });
    m.def("rack_to_braid", [](const QuandleTable& q) {
        BraidMap r = rack_to_braid(q);
        return py::make_tuple(r.table, braid_check(r));
    });
    m.def("degenerate_monoid_solution", [](const Table& monoid) {
        DegenerateSolution d = degenerate_monoid_solution(monoid);
        return py::make_tuple(d.braid, d.two_valued, d.assoc, d.witness);
    });

    // bialgebras
    m.def("group_algebra", [](const NValuedTable& t) {
        SpaceWithReport s = group_algebra(t);
        return py::make_tuple(s.space, s.report);
    });
    m.def("functions_space", [](const NValuedTable& t) {
        SpaceWithReport s = functions_space(t);
        return py::make_tuple(s.space, s.report);
    });
    m.def("pairing_check", &pairing_check);
    m.def("frobenius_functions", [](const NValuedTable& t, int n, unsigned seed) {
        return frobenius_check(delta_as_map(functions_space(t).space), n, 0, seed);
    }, py::arg("table"), py::arg("n"), py::arg("seed") = 0u);
    m.def("derk_oracle", [](const NValuedTable& t, const std::vector<py::sequence>& fs, int x,
                            int y) {
        std::vector<RatVec> vecs;
        for (const auto& f : fs) vecs.push_back(vec_from_py(f));
        return to_fraction(derk_oracle(t, vecs, x, y));
    });
    m.def("rack_bialgebra", [](const Table& t) {
        SpaceWithReport s = rack_bialgebra(t);
        return py::make_tuple(s.space, s.report);
    });
    m.def("corack_check_functions", [](const NValuedTable& t, int n, unsigned seed) {
        return corack_check(functions_space(t).space, n, seed);
    }, py::arg("table"), py::arg("n"), py::arg("seed") = 0u);
    m.def("invariant_functions", [](const FiniteGroup& g, const std::vector<int>& b) {
        py::list out;
        for (const auto& f : invariant_functions(g, b)) out.append(vec_to_py(f));
        return out;
    });
    m.def("invariant_coproduct",
          [](const FiniteGroup& g, const std::vector<int>& b, const py::sequence& f) {
              InvariantCoproduct cp = invariant_coproduct(g, b, vec_from_py(f));
              py::list values;
              for (const auto& row : cp.values) values.append(vec_to_py(row));
              py::list coeffs;
              for (const auto& row : cp.orbit_coeffs) coeffs.append(vec_to_py(row));
              return py::make_tuple(values, coeffs, cp.report);
          });

    // pencil products on seeded rational samples
    m.def("pencil_check_diag", [](const std::vector<std::pair<long long, long long>>& diag,
                                  std::pair<long long, long long> t1,
                                  std::pair<long long, long long> t2, int count, unsigned seed) {
        std::vector<Rational> d;
        for (auto [num, den] : diag) d.emplace_back(num, den);
        RatMatrix m_mat = RatMatrix::diag(d);
        auto samples = seeded_matrix_triples(count, static_cast<int>(d.size()), seed);
        return pencil_nv_assoc_check(m_mat, Rational(t1.first, t1.second),
                                     Rational(t2.first, t2.second), samples);
    });

    // io + cli
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
    m.def("parse_nvalued", [](const std::string& text) {
        std::istringstream in(text);
        ParsedNValued nv = read_nvalued(in);
        return py::make_tuple(nv.product, nv.bar);
    });
    m.def("format_nvalued", [](const NValuedTable& product, const NValuedTable* bar) {
        std::ostringstream os;
        write_nvalued(os, product, bar);
        return os.str();
    }, py::arg("product"), py::arg("bar") = nullptr);
}
