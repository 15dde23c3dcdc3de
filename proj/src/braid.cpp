#include "nvq/braid.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

namespace nvq {

namespace {

std::string triple_str(long long a, long long b, long long c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

}  // namespace

BraidMap braid_from_table(int size, std::vector<std::pair<int, int>> table) {
    if (size <= 0 || static_cast<int>(table.size()) != size * size)
        throw Error("NotSquare", "braid table must have size^2 rows");
    for (auto [a, b] : table)
        if (a < 0 || a >= size || b < 0 || b >= size)
            throw Error("IndexOutOfRange", "braid table entry");
    BraidMap r;
    r.carrier = BraidMap::Carrier::finite;
    r.size = size;
    r.table = std::move(table);
    return r;
}

BraidMap braid_from_forms(const LinearForm& f1, const LinearForm& f2, long long half_width) {
    BraidMap r;
    r.carrier = BraidMap::Carrier::window;
    r.f1 = f1;
    r.f2 = f2;
    r.half_width = half_width;
    return r;
}

BraidMap braid_mod(const LinearForm& f1, const LinearForm& f2, int m) {
    auto red = [m](long long v) { return static_cast<int>(((v % m) + m) % m); };
    std::vector<std::pair<int, int>> table;
    table.reserve(static_cast<size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) table.emplace_back(red(f1.eval(x, y)), red(f2.eval(x, y)));
    return braid_from_table(m, std::move(table));
}

namespace {

// One application chain on a triple. R acts on positions (0,1) or (1,2).
template <typename Apply>
std::array<long long, 3> chain(const Apply& r, std::array<long long, 3> v, bool left_first) {
    auto left = [&r](std::array<long long, 3>& w) {
        auto [a, b] = r(w[0], w[1]);
        w[0] = a;
        w[1] = b;
    };
    auto right = [&r](std::array<long long, 3>& w) {
        auto [a, b] = r(w[1], w[2]);
        w[1] = a;
        w[2] = b;
    };
    if (left_first) {
        left(v);
        right(v);
        left(v);
    } else {
        right(v);
        left(v);
        right(v);
    }
    return v;
}

}  // namespace

AxiomReport braid_check(const BraidMap& r) {
    AxiomReport rep;
    auto& braid = rep.add("braid-equation");

    if (r.carrier == BraidMap::Carrier::finite) {
        auto apply = [&r](long long x, long long y) {
            auto [a, b] = r.apply(static_cast<int>(x), static_cast<int>(y));
            return std::pair<long long, long long>(a, b);
        };
        for (int x = 0; x < r.size; ++x)
            for (int y = 0; y < r.size; ++y)
                for (int z = 0; z < r.size; ++z) {
                    auto lhs = chain(apply, {x, y, z}, true);
                    auto rhs = chain(apply, {x, y, z}, false);
                    if (lhs != rhs) braid.fail("witness " + triple_str(x, y, z));
                }
        return rep;
    }

    long long w = r.half_width;
    long long safe = 4 * w;
    bool in_range = true;
    auto apply = [&](long long x, long long y) {
        long long a = r.f1.eval(x, y);
        long long b = r.f2.eval(x, y);
        if (std::llabs(a) > safe || std::llabs(b) > safe) in_range = false;
        return std::pair<long long, long long>(a, b);
    };
    for (long long x = -w; x <= w; ++x)
        for (long long y = -w; y <= w; ++y)
            for (long long z = -w; z <= w; ++z) {
                in_range = true;
                auto lhs = chain(apply, {x, y, z}, true);
                auto rhs = chain(apply, {x, y, z}, false);
                if (!in_range) continue;  // intermediates escaped the widened window
                if (lhs != rhs) braid.fail("witness " + triple_str(x, y, z));
            }
    return rep;
}

BraidMap rack_to_braid(const QuandleTable& q) {
    AxiomReport rep = rack_check(q.table);
    if (!rep.all_pass()) throw Error("PreconditionFailed", "table is not a rack");
    // R(x,y) = (y, x*y): the component order that the right self-distributivity
    // axiom (Q3) turns into the braid equation on every rack
    std::vector<std::pair<int, int>> table;
    table.reserve(static_cast<size_t>(q.size) * q.size);
    for (int x = 0; x < q.size; ++x)
        for (int y = 0; y < q.size; ++y) table.emplace_back(y, q.at(x, y));
    return braid_from_table(q.size, std::move(table));
}

BraidMap multirack_to_map(const WindowedZOp& op1, const WindowedZOp& op2, long long half_width) {
    LinearForm f1{op1.epsilon, op1.a, op1.b};
    LinearForm f2{op2.epsilon, op2.a, op2.b};
    return braid_from_forms(f1, f2, half_width);
}

DegenerateSolution degenerate_monoid_solution(const Table& monoid) {
    int n = static_cast<int>(monoid.size());
    if (n == 0) throw Error("EmptyTable", "carrier must be non-empty");
    for (const auto& row : monoid)
        if (static_cast<int>(row.size()) != n) throw Error("NotSquare", "table row length");

    int unit = -1;
    for (int e = 0; e < n && unit < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = monoid[e][x] == x && monoid[x][e] == x;
        if (ok) unit = e;
    }
    if (unit < 0) throw Error("NoUnit", "no two-sided unit");

    DegenerateSolution out;
    std::vector<std::pair<int, int>> table;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table.emplace_back(unit, monoid[a][b]);
    out.map = braid_from_table(n, std::move(table));
    out.braid = braid_check(out.map);

    out.two_valued.size = n;
    out.two_valued.n = 2;
    out.two_valued.cells.assign(n, std::vector<Multiset>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.two_valued.cells[a][b] = Multiset::from_list({unit, monoid[a][b]});
    out.assoc = nv_assoc_check(out.two_valued);

    // witness shape: (a o b) c != a o (b c) for any c != unit
    for (int c = 0; c < n && !out.witness; ++c) {
        if (c == unit) continue;
        for (int a = 0; a < n && !out.witness; ++a)
            for (int b = 0; b < n && !out.witness; ++b) {
                Multiset lhs = expand_right(out.two_valued, a, out.two_valued.at(b, c));
                Multiset rhs = expand_left(out.two_valued, out.two_valued.at(a, b), c);
                if (lhs != rhs) out.witness = std::array<int, 3>{a, b, c};
            }
    }
    return out;
}

}  // namespace nvq
