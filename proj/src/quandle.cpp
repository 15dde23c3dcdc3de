#include "nvq/quandle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nvq {

namespace {

void check_square(const Table& t) {
    int n = static_cast<int>(t.size());
    if (n == 0) throw Error("EmptyTable", "carrier must be non-empty");
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n)
            throw Error("NotSquare", "table has a row of wrong length");
        for (int v : row)
            if (v < 0 || v >= n) throw Error("IndexOutOfRange", "entry " + std::to_string(v));
    }
}

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

void check_q2(const Table& t, Verdict& v) {
    int n = static_cast<int>(t.size());
    for (int y = 0; y < n; ++y) {
        std::vector<bool> hit(n, false);
        for (int z = 0; z < n; ++z) {
            if (hit[t[z][y]]) v.fail("column " + std::to_string(y) + " repeats value " +
                                     std::to_string(t[z][y]));
            hit[t[z][y]] = true;
        }
    }
}

void check_q3(const Table& t, Verdict& v) {
    int n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) v.fail("witness " + triple_str(x, y, z));
}

}  // namespace

Perm QuandleTable::translation(int x) const {
    Perm p(size);
    for (int y = 0; y < size; ++y) p[y] = table[y][x];
    return p;
}

AxiomReport rack_check(const Table& t) {
    check_square(t);
    AxiomReport rep;
    check_q2(t, rep.add("Q2"));
    check_q3(t, rep.add("Q3"));
    return rep;
}

AxiomReport quandle_check(const Table& t) {
    check_square(t);
    AxiomReport rep;
    auto& q1 = rep.add("Q1");
    for (int x = 0; x < static_cast<int>(t.size()); ++x)
        if (t[x][x] != x) q1.fail("x = " + std::to_string(x));
    check_q2(t, rep.add("Q2"));
    check_q3(t, rep.add("Q3"));
    return rep;
}

QuandleTable as_rack(const Table& t) {
    AxiomReport rep = rack_check(t);
    if (!rep.all_pass()) throw Error("PreconditionFailed", "table is not a rack");
    return QuandleTable{static_cast<int>(t.size()), t, QuandleTable::Kind::rack};
}

QuandleTable as_quandle(const Table& t) {
    AxiomReport rep = quandle_check(t);
    if (!rep.all_pass()) throw Error("PreconditionFailed", "table is not a quandle");
    return QuandleTable{static_cast<int>(t.size()), t, QuandleTable::Kind::quandle};
}

QuandleTable conj_quandle(const FiniteGroup& g, int m) {
    Table t(g.size, std::vector<int>(g.size));
    for (int a = 0; a < g.size; ++a)
        for (int b = 0; b < g.size; ++b) {
            int bm = g.power(b, m);
            t[a][b] = g.mul(g.mul(g.inv(bm), a), bm);
        }
    return as_quandle(t);
}

QuandleTable core_quandle(const FiniteGroup& g) {
    Table t(g.size, std::vector<int>(g.size));
    for (int a = 0; a < g.size; ++a)
        for (int b = 0; b < g.size; ++b) t[a][b] = g.mul(g.mul(b, g.inv(a)), b);
    return as_quandle(t);
}

QuandleTable alexander_quandle(const FiniteGroup& g, const Perm& phi) {
    if (!is_group_automorphism(g, phi))
        throw Error("NotAnAutomorphism", "phi is not an automorphism of the group");
    Table t(g.size, std::vector<int>(g.size));
    for (int a = 0; a < g.size; ++a)
        for (int b = 0; b < g.size; ++b) t[a][b] = g.mul(phi[g.mul(a, g.inv(b))], b);
    return as_quandle(t);
}

QuandleTable trivial_quandle(int k) {
    Table t(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a][b] = a;
    return as_quandle(t);
}

QuandleTable dihedral_quandle(int k) {
    Table t(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a][b] = ((2 * b - a) % k + k) % k;
    return as_quandle(t);
}

QuandleTable make_named_quandle(const std::string& spec) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t next = spec.find(':', pos);
        parts.push_back(spec.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    const std::string& kind = parts[0];
    if (kind == "trivial" && parts.size() == 2) return trivial_quandle(std::stoi(parts[1]));
    if (kind == "dihedral" && parts.size() == 2) return dihedral_quandle(std::stoi(parts[1]));
    if (kind == "conj" && parts.size() == 3)
        return conj_quandle(make_named_group(parts[1]), std::stoi(parts[2]));
    if (kind == "core" && parts.size() == 2) return core_quandle(make_named_group(parts[1]));
    if (kind == "alex" && parts.size() == 4 && parts[2] == "conj-by") {
        FiniteGroup g = make_named_group(parts[1]);
        int el = g.element_by_label(parts[3]);
        if (el < 0) throw Error("UnknownName", "no element '" + parts[3] + "'");
        return alexander_quandle(g, conjugation_action(g, el));
    }
    throw Error("UnknownName", "no named quandle '" + spec + "'");
}

PermGroup inner_group(const QuandleTable& q) {
    std::vector<Perm> gens;
    for (int x = 0; x < q.size; ++x) {
        Perm s = q.translation(x);
        for (int y = 0; y < q.size; ++y)
            for (int z = 0; z < q.size; ++z)
                if (s[q.at(y, z)] != q.at(s[y], s[z]))
                    throw Error("NotAnAutomorphism",
                                "translation " + std::to_string(x) + " at " + pair_str(y, z));
        gens.push_back(std::move(s));
    }
    return subgroup_generated(q.size, gens);
}

ProductReport quandle_product(const QuandleTable& q1, const QuandleTable& q2) {
    if (q1.size != q2.size) throw Error("CarrierMismatch", "carriers differ in size");
    int n = q1.size;

    bool distributive = true;
    for (int x = 0; x < n && distributive; ++x)
        for (int y = 0; y < n && distributive; ++y)
            for (int z = 0; z < n; ++z)
                if (q2.at(q1.at(x, y), z) != q1.at(q2.at(x, z), q2.at(y, z))) {
                    distributive = false;
                    break;
                }

    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = q2.at(q1.at(x, y), y);

    AxiomReport check = quandle_check(t);
    return ProductReport{std::move(t), distributive, std::move(check)};
}

bool is_n_quandle(const QuandleTable& q, int n) {
    for (int y = 0; y < q.size; ++y) {
        Perm s = q.translation(y);
        Perm acc = identity_perm(q.size);
        for (int i = 0; i < n; ++i) acc = compose(acc, s);
        if (acc != identity_perm(q.size)) return false;
    }
    return true;
}

Table relabel_table(const Table& t, const Perm& p) {
    int n = static_cast<int>(t.size());
    Table out(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[p[i]][p[j]] = p[t[i][j]];
    return out;
}

Table canonical_form(const Table& t) {
    int n = static_cast<int>(t.size());
    Perm p = identity_perm(n);
    Table best = t;
    while (std::next_permutation(p.begin(), p.end())) {
        Table cand = relabel_table(t, p);
        if (cand < best) best = cand;
    }
    return best;
}

namespace {

// Candidate right translations per column. For quandles S_y must fix y.
std::vector<Perm> column_candidates(int order, int y, bool quandle) {
    std::vector<Perm> out;
    Perm p = identity_perm(order);
    do {
        if (!quandle || p[y] == y) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void enumerate_tables(int order, bool quandle, std::vector<Table>& out) {
    std::vector<std::vector<Perm>> cands(order);
    for (int y = 0; y < order; ++y) cands[y] = column_candidates(order, y, quandle);

    Table t(order, std::vector<int>(order));
    std::vector<size_t> pick(order, 0);
    // odometer over column choices, then a full Q3 filter
    while (true) {
        for (int y = 0; y < order; ++y)
            for (int z = 0; z < order; ++z) t[z][y] = cands[y][pick[y]][z];
        bool ok = true;
        for (int x = 0; x < order && ok; ++x)
            for (int y = 0; y < order && ok; ++y)
                for (int z = 0; z < order; ++z)
                    if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) {
                        ok = false;
                        break;
                    }
        if (ok) out.push_back(t);

        int col = order - 1;
        while (col >= 0 && ++pick[col] == cands[col].size()) pick[col--] = 0;
        if (col < 0) break;
    }
}

}  // namespace

std::vector<QuandleTable> enumerate_quandles(int order, bool up_to_iso) {
    if (order < 1 || order > 5)
        throw Error("SizeLimitExceeded", "quandle enumeration guarded at order 5");
    std::vector<Table> raw;
    enumerate_tables(order, /*quandle=*/true, raw);

    std::vector<QuandleTable> out;
    if (up_to_iso) {
        std::set<Table> classes;
        for (const auto& t : raw) classes.insert(canonical_form(t));
        for (const auto& t : classes) out.push_back(as_quandle(t));
    } else {
        for (const auto& t : raw) out.push_back(as_quandle(t));
    }
    return out;
}

std::vector<QuandleTable> enumerate_racks(int order) {
    if (order < 1 || order > 4)
        throw Error("SizeLimitExceeded", "rack enumeration guarded at order 4");
    std::vector<Table> raw;
    enumerate_tables(order, /*quandle=*/false, raw);
    std::vector<QuandleTable> out;
    for (const auto& t : raw) out.push_back(as_rack(t));
    return out;
}

}  // namespace nvq
