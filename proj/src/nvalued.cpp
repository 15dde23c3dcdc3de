#include "nvq/nvalued.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace nvq {

namespace {

std::string pair_str(int a, int b) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

std::string triple_str(int a, int b, int c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

}  // namespace

void NValuedTable::validate() const {
    if (size <= 0 || n <= 0) throw Error("EmptyTable", "size and n must be positive");
    if (static_cast<int>(cells.size()) != size) throw Error("NotSquare", "row count mismatch");
    for (const auto& row : cells) {
        if (static_cast<int>(row.size()) != size) throw Error("NotSquare", "column count mismatch");
        for (const auto& cell : row) {
            if (cell.total() != n)
                throw Error("CellCardinality", "cell total " + std::to_string(cell.total()) +
                                                   " != n = " + std::to_string(n));
            for (const auto& [x, c] : cell.counts()) {
                (void)c;
                if (x >= size) throw Error("IndexOutOfRange", "cell entry " + std::to_string(x));
            }
        }
    }
}

NValuedTable nv_from_table(const Table& t) {
    NValuedTable out;
    out.size = static_cast<int>(t.size());
    out.n = 1;
    out.cells.resize(out.size);
    for (int i = 0; i < out.size; ++i)
        for (int j = 0; j < out.size; ++j) out.cells[i].push_back(Multiset::from_list({t[i][j]}));
    out.validate();
    return out;
}

NValuedTable nv_from_group(const FiniteGroup& g) { return nv_from_table(g.table); }

Multiset expand_left(const NValuedTable& op, const Multiset& cell, int z) {
    MultisetBuilder b;
    for (const auto& [u, c] : cell.counts()) b.add_all(op.at(u, z), c);
    return std::move(b).build();
}

Multiset expand_right(const NValuedTable& op, int x, const Multiset& cell) {
    MultisetBuilder b;
    for (const auto& [u, c] : cell.counts()) b.add_all(op.at(x, u), c);
    return std::move(b).build();
}

Multiset expand_pairs(const NValuedTable& op, const Multiset& a, const Multiset& b) {
    MultisetBuilder out;
    for (const auto& [u, cu] : a.counts())
        for (const auto& [v, cv] : b.counts()) out.add_all(op.at(u, v), cu * cv);
    return std::move(out).build();
}

AxiomReport nv_assoc_check(const NValuedTable& t) {
    t.validate();
    AxiomReport rep;
    auto& assoc = rep.add("associativity");
    for (int x = 0; x < t.size; ++x)
        for (int y = 0; y < t.size; ++y)
            for (int z = 0; z < t.size; ++z) {
                Multiset lhs = expand_right(t, x, t.at(y, z));
                Multiset rhs = expand_left(t, t.at(x, y), z);
                if (lhs != rhs)
                    assoc.fail("witness " + triple_str(x, y, z) + ": x*(y*z) = " + lhs.str() +
                               ", (x*y)*z = " + rhs.str());
            }
    return rep;
}

AxiomReport nv_group_check(const NValuedTable& t, int unit, const std::vector<int>& inv) {
    t.validate();
    if (unit < 0 || unit >= t.size) throw Error("IndexOutOfRange", "unit");
    if (static_cast<int>(inv.size()) != t.size) throw Error("IndexOutOfRange", "inv size");
    for (int v : inv)
        if (v < 0 || v >= t.size) throw Error("IndexOutOfRange", "inv entry " + std::to_string(v));

    AxiomReport rep = nv_assoc_check(t);

    auto& u = rep.add("unit");
    for (int x = 0; x < t.size; ++x) {
        Multiset want = Multiset::from_list(std::vector<int>(t.n, x));
        if (t.at(unit, x) != want) u.fail("e*x at x = " + std::to_string(x));
        if (t.at(x, unit) != want) u.fail("x*e at x = " + std::to_string(x));
    }

    auto& i = rep.add("inverse");
    for (int x = 0; x < t.size; ++x) {
        if (!t.at(inv[x], x).contains(unit)) i.fail("e not in inv(x)*x at x = " + std::to_string(x));
        if (!t.at(x, inv[x]).contains(unit)) i.fail("e not in x*inv(x) at x = " + std::to_string(x));
    }
    return rep;
}

AxiomReport nv_rack_check(const NValuedTable& product, const NValuedTable& bar, bool want_quandle,
                          Inclusion mode) {
    product.validate();
    bar.validate();
    if (product.size != bar.size || product.n != bar.n)
        throw Error("CarrierMismatch", "product and bar tables disagree in size or n");

    AxiomReport rep;
    auto& m1 = rep.add("M1");
    for (int x = 0; x < product.size; ++x)
        for (int y = 0; y < product.size; ++y) {
            if (!expand_left(bar, product.at(x, y), y).contains(x))
                m1.fail("x not in (x*y) bar y at " + pair_str(x, y));
            if (!expand_left(product, bar.at(x, y), y).contains(x))
                m1.fail("x not in (x bar y) * y at " + pair_str(x, y));
        }

    auto& m2 = rep.add(mode == Inclusion::multiplicity_aware ? "M2(multiplicity)" : "M2(support)");
    for (int x = 0; x < product.size; ++x)
        for (int y = 0; y < product.size; ++y)
            for (int z = 0; z < product.size; ++z) {
                Multiset lhs = expand_left(product, product.at(x, y), z);
                Multiset rhs = expand_pairs(product, product.at(x, z), product.at(y, z));
                if (!lhs.included_in(rhs, mode))
                    m2.fail("witness " + triple_str(x, y, z) + ": " + lhs.str() +
                            " not included in " + rhs.str());
            }

    if (want_quandle) {
        auto& m3 = rep.add("M3");
        for (int x = 0; x < product.size; ++x)
            if (!product.at(x, x).contains(x)) m3.fail("x = " + std::to_string(x));
    }

    // The definition does not ask the bar operation to be self-distributive;
    // reported informationally only.
    auto& barm2 = rep.add("M2-bar(informational)", /*informational=*/true);
    for (int x = 0; x < product.size; ++x)
        for (int y = 0; y < product.size; ++y)
            for (int z = 0; z < product.size; ++z) {
                Multiset lhs = expand_left(bar, bar.at(x, y), z);
                Multiset rhs = expand_pairs(bar, bar.at(x, z), bar.at(y, z));
                if (!lhs.included_in(rhs, mode)) barm2.fail("witness " + triple_str(x, y, z));
            }

    return rep;
}

namespace {

// Shared skeleton of the two coset constructions: project a single-valued
// operation to the orbit space of A, then audit representative independence.
NValuedTable coset_project(const Table& op, const PermGroup& a, const Partition& orb) {
    int classes = orb.count();
    NValuedTable out;
    out.size = classes;
    out.n = a.order();
    out.cells.assign(classes, std::vector<Multiset>(classes));

    for (int x = 0; x < classes; ++x)
        for (int y = 0; y < classes; ++y) {
            int rx = orb.parts[x].front();
            int ry = orb.parts[y].front();
            MultisetBuilder b;
            for (const auto& alpha : a.elements) b.add(orb.proj[op[rx][alpha[ry]]]);
            out.cells[x][y] = std::move(b).build();
        }
    out.validate();

    for (int x = 0; x < classes; ++x)
        for (int y = 0; y < classes; ++y)
            for (int q : orb.parts[x])
                for (int h : orb.parts[y]) {
                    MultisetBuilder b;
                    for (const auto& alpha : a.elements) b.add(orb.proj[op[q][alpha[h]]]);
                    if (std::move(b).build() != out.cells[x][y])
                        throw Error("RepresentativeDependence",
                                    "cell " + pair_str(x, y) + " differs for representatives " +
                                        pair_str(q, h));
                }
    return out;
}

}  // namespace

NValuedGroup coset_nv_group(const FiniteGroup& g, const PermGroup& a) {
    if (a.degree != g.size) throw Error("CarrierMismatch", "automorphism degree != group size");
    for (const auto& p : a.elements)
        if (!is_group_automorphism(g, p))
            throw Error("NotAutomorphism", "an element of A is not a group automorphism");

    Partition orb = orbits(a);
    NValuedGroup out;
    out.product = coset_project(g.table, a, orb);
    out.unit = orb.proj[g.unit];
    out.inv.resize(orb.count());
    for (int x = 0; x < orb.count(); ++x) out.inv[x] = orb.proj[g.inv(orb.parts[x].front())];
    out.report = nv_group_check(out.product, out.unit, out.inv);
    return out;
}

NValuedRack coset_nv_quandle(const QuandleTable& q, const PermGroup& a) {
    if (a.degree != q.size) throw Error("CarrierMismatch", "automorphism degree != carrier size");
    for (const auto& p : a.elements) {
        for (int x = 0; x < q.size; ++x)
            for (int y = 0; y < q.size; ++y)
                if (p[q.at(x, y)] != q.at(p[x], p[y]))
                    throw Error("NotAutomorphism", "an element of A is not a quandle automorphism");
    }

    // bar on Q solves Q2: z bar y = the unique w with w*y = z
    Table bar_table(q.size, std::vector<int>(q.size));
    for (int y = 0; y < q.size; ++y) {
        Perm s = inverse_perm(q.translation(y));
        for (int z = 0; z < q.size; ++z) bar_table[z][y] = s[z];
    }

    Partition orb = orbits(a);
    NValuedRack out;
    out.product = coset_project(q.table, a, orb);
    out.bar = coset_project(bar_table, a, orb);
    out.report = nv_rack_check(out.product, out.bar, /*want_quandle=*/true);
    return out;
}

NValuedGroup double_coset_group(const FiniteGroup& g, const std::vector<int>& h) {
    Partition cls = double_cosets(g, h);  // validates the subgroup
    int classes = cls.count();

    NValuedGroup out;
    out.product.size = classes;
    out.product.n = static_cast<int>(h.size());
    out.product.cells.assign(classes, std::vector<Multiset>(classes));
    std::vector<int> hs(h);
    std::sort(hs.begin(), hs.end());

    for (int x = 0; x < classes; ++x)
        for (int y = 0; y < classes; ++y) {
            int g1 = cls.parts[x].front();
            int g2 = cls.parts[y].front();
            MultisetBuilder b;
            for (int hh : hs) b.add(cls.proj[g.mul(g.mul(g1, hh), g2)]);
            out.product.cells[x][y] = std::move(b).build();
        }
    out.product.validate();

    out.unit = cls.proj[g.unit];
    out.inv.resize(classes);
    for (int x = 0; x < classes; ++x) out.inv[x] = cls.proj[g.inv(cls.parts[x].front())];
    out.report = nv_group_check(out.product, out.unit, out.inv);
    return out;
}

namespace {

void validate_family(const MultiOpFamily& fam) {
    if (fam.ops.empty()) throw Error("EmptyTable", "family has no operations");
    for (const auto& op : fam.ops) {
        if (static_cast<int>(op.size()) != fam.size)
            throw Error("CarrierMismatch", "operation size differs from family carrier");
        AxiomReport rep;
        switch (fam.flavor) {
            case MultiOpFamily::Flavor::group:
                (void)group_from_table(op);  // throws on failure
                break;
            case MultiOpFamily::Flavor::rack:
                rep = rack_check(op);
                if (!rep.all_pass()) throw Error("PreconditionFailed", "operation is not a rack");
                break;
            case MultiOpFamily::Flavor::quandle:
                rep = quandle_check(op);
                if (!rep.all_pass())
                    throw Error("PreconditionFailed", "operation is not a quandle");
                break;
        }
    }
}

}  // namespace

AxiomReport multi_group_check(const MultiOpFamily& fam) {
    validate_family(fam);
    AxiomReport rep;
    auto& mixed = rep.add("mixed-associativity");
    for (int i = 0; i < fam.n(); ++i)
        for (int j = 0; j < fam.n(); ++j) {
            const Table& oi = fam.ops[i];
            const Table& oj = fam.ops[j];
            for (int a = 0; a < fam.size; ++a)
                for (int b = 0; b < fam.size; ++b)
                    for (int c = 0; c < fam.size; ++c)
                        if (oj[oi[a][b]][c] != oi[a][oj[b][c]])
                            mixed.fail("(i,j) = " + pair_str(i, j) + " witness " +
                                       triple_str(a, b, c));
        }
    return rep;
}

AxiomReport multi_rack_check(const MultiOpFamily& fam) {
    if (fam.flavor == MultiOpFamily::Flavor::group)
        throw Error("KindMismatch", "multi_rack_check needs a rack or quandle family");
    validate_family(fam);
    AxiomReport rep;
    auto& dist = rep.add("mutual-distributivity");
    for (int i = 0; i < fam.n(); ++i)
        for (int j = 0; j < fam.n(); ++j) {
            const Table& oi = fam.ops[i];
            const Table& oj = fam.ops[j];
            for (int x = 0; x < fam.size; ++x)
                for (int y = 0; y < fam.size; ++y)
                    for (int z = 0; z < fam.size; ++z)
                        if (oj[oi[x][y]][z] != oi[oj[x][z]][oj[y][z]])
                            dist.fail("(i,j) = " + pair_str(i, j) + " witness " +
                                      triple_str(x, y, z));
        }
    return rep;
}

MultiToNv multi_to_nvalued(const MultiOpFamily& fam) {
    AxiomReport pre = fam.flavor == MultiOpFamily::Flavor::group ? multi_group_check(fam)
                                                                 : multi_rack_check(fam);
    if (!pre.all_pass())
        throw Error("PreconditionFailed", "family fails its mixed axiom: " +
                                              pre.verdicts().front().witness);

    MultiToNv out;
    out.product.size = fam.size;
    out.product.n = fam.n();
    out.product.cells.assign(fam.size, std::vector<Multiset>(fam.size));
    for (int x = 0; x < fam.size; ++x)
        for (int y = 0; y < fam.size; ++y) {
            std::vector<int> vals;
            for (const auto& op : fam.ops) vals.push_back(op[x][y]);
            out.product.cells[x][y] = Multiset::from_list(vals);
        }
    out.product.validate();

    if (fam.flavor != MultiOpFamily::Flavor::group) {
        NValuedTable bar;
        bar.size = fam.size;
        bar.n = fam.n();
        bar.cells.assign(fam.size, std::vector<Multiset>(fam.size));
        // per-op inverse operations, each solving Q2 for its own op
        std::vector<Table> inv_ops;
        for (const auto& op : fam.ops) {
            Table it(fam.size, std::vector<int>(fam.size));
            for (int y = 0; y < fam.size; ++y) {
                Perm col(fam.size);
                for (int z = 0; z < fam.size; ++z) col[z] = op[z][y];
                Perm s = inverse_perm(col);
                for (int z = 0; z < fam.size; ++z) it[z][y] = s[z];
            }
            inv_ops.push_back(std::move(it));
        }
        for (int x = 0; x < fam.size; ++x)
            for (int y = 0; y < fam.size; ++y) {
                std::vector<int> vals;
                for (const auto& op : inv_ops) vals.push_back(op[x][y]);
                bar.cells[x][y] = Multiset::from_list(vals);
            }
        bar.validate();
        out.report = nv_rack_check(out.product, bar,
                                   fam.flavor == MultiOpFamily::Flavor::quandle);
        out.bar = std::move(bar);
    } else {
        out.report = nv_assoc_check(out.product);
    }
    return out;
}

NValuedRack conj_family(const FiniteGroup& g, const std::vector<int>& exponents) {
    if (exponents.empty()) throw Error("EmptyTable", "exponent list is empty");
    NValuedRack out;
    int n = static_cast<int>(exponents.size());
    out.product.size = out.bar.size = g.size;
    out.product.n = out.bar.n = n;
    out.product.cells.assign(g.size, std::vector<Multiset>(g.size));
    out.bar.cells.assign(g.size, std::vector<Multiset>(g.size));

    for (int x = 0; x < g.size; ++x)
        for (int y = 0; y < g.size; ++y) {
            std::vector<int> prod, bar;
            for (int e : exponents) {
                int ye = g.power(y, e);
                int yi = g.power(y, -static_cast<long long>(e));
                prod.push_back(g.mul(g.mul(yi, x), ye));
                bar.push_back(g.mul(g.mul(ye, x), yi));
            }
            out.product.cells[x][y] = Multiset::from_list(prod);
            out.bar.cells[x][y] = Multiset::from_list(bar);
        }
    out.product.validate();
    out.bar.validate();
    out.report = nv_rack_check(out.product, out.bar, /*want_quandle=*/true);
    return out;
}

NValuedRack power_nvalued(const QuandleTable& q, int n) {
    if (n < 1) throw Error("IndexOutOfRange", "n must be positive");
    if (!is_n_quandle(q, n))
        throw Error("NotAnNQuandle", "S_y^n != id for some y");

    NValuedRack out;
    out.product.size = out.bar.size = q.size;
    out.product.n = out.bar.n = n;
    out.product.cells.assign(q.size, std::vector<Multiset>(q.size));
    out.bar.cells.assign(q.size, std::vector<Multiset>(q.size));

    for (int y = 0; y < q.size; ++y) {
        Perm s = q.translation(y);
        Perm si = inverse_perm(s);
        for (int x = 0; x < q.size; ++x) {
            std::vector<int> prod, bar;
            int u = x, v = x;
            for (int k = 0; k < n; ++k) {
                u = s[u];
                v = si[v];
                prod.push_back(u);
                bar.push_back(v);
            }
            out.product.cells[x][y] = Multiset::from_list(prod);
            out.bar.cells[x][y] = Multiset::from_list(bar);
        }
    }
    out.product.validate();
    out.bar.validate();
    out.report = nv_rack_check(out.product, out.bar, /*want_quandle=*/true);
    return out;
}

std::vector<long long> zplus_group_product(long long x, long long y) {
    return {x + y, std::llabs(x - y)};
}

std::vector<long long> core_z_coset_product(long long a, long long b) {
    // Core(Z): m(p, q) = 2q - p; A = {id, negation}; pi(v) = |v|;
    // representatives of the orbits {v, -v} are the non-negative integers.
    auto pi = [](long long v) { return std::llabs(v); };
    std::vector<long long> out;
    for (int sign : {+1, -1}) out.push_back(pi(2 * (sign * b) - a));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> core_z_closed_form(long long a, long long b) {
    std::vector<long long> out = {2 * b + a, std::llabs(2 * b - a)};
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string multiset_str(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

}  // namespace

AxiomReport windowed_nv_check(const ZNvProduct& f, int n, long long unit,
                              const std::function<long long(long long)>& inv, long long window) {
    AxiomReport rep;

    auto& u = rep.add("unit");
    for (long long x = 0; x <= window; ++x) {
        std::vector<long long> want(n, x);
        std::vector<long long> ex = f(unit, x), xe = f(x, unit);
        std::sort(ex.begin(), ex.end());
        std::sort(xe.begin(), xe.end());
        if (ex != want) u.fail("e*x at x = " + std::to_string(x));
        if (xe != want) u.fail("x*e at x = " + std::to_string(x));
    }

    auto& i = rep.add("inverse");
    for (long long x = 0; x <= window; ++x) {
        auto contains_unit = [&](const std::vector<long long>& v) {
            return std::find(v.begin(), v.end(), unit) != v.end();
        };
        if (!contains_unit(f(inv(x), x))) i.fail("e not in inv(x)*x at x = " + std::to_string(x));
        if (!contains_unit(f(x, inv(x)))) i.fail("e not in x*inv(x) at x = " + std::to_string(x));
    }

    auto& assoc = rep.add("associativity");
    long long safe = 3 * window;
    for (long long x = 0; x <= window; ++x)
        for (long long y = 0; y <= window; ++y)
            for (long long z = 0; z <= window; ++z) {
                bool in_range = true;
                std::vector<long long> lhs, rhs;
                for (long long w : f(y, z)) {
                    if (std::llabs(w) > safe) in_range = false;
                    for (long long v : f(x, w)) lhs.push_back(v);
                }
                for (long long w : f(x, y)) {
                    if (std::llabs(w) > safe) in_range = false;
                    for (long long v : f(w, z)) rhs.push_back(v);
                }
                if (!in_range) continue;
                std::sort(lhs.begin(), lhs.end());
                std::sort(rhs.begin(), rhs.end());
                if (lhs != rhs)
                    assoc.fail("witness (" + std::to_string(x) + "," + std::to_string(y) + "," +
                               std::to_string(z) + "): " + multiset_str(lhs) + " vs " +
                               multiset_str(rhs));
            }
    return rep;
}

}  // namespace nvq
