#include "nvq/group.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace nvq {

namespace {

std::string triple_str(int a, int b, int c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

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

}  // namespace

Perm identity_perm(int degree) {
    Perm p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

int FiniteGroup::power(int a, long long k) const {
    long long ord = order_of(a);
    long long e = ((k % ord) + ord) % ord;
    int acc = unit;
    for (long long i = 0; i < e; ++i) acc = mul(acc, a);
    return acc;
}

int FiniteGroup::order_of(int a) const {
    int acc = a, ord = 1;
    while (acc != unit) {
        acc = mul(acc, a);
        ++ord;
    }
    return ord;
}

int FiniteGroup::element_by_label(const std::string& s) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return static_cast<int>(i);
    // fall back to a numeric index
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
        int v = std::stoi(s);
        if (v >= 0 && v < size) return v;
    }
    return -1;
}

FiniteGroup group_from_table(const Table& table, std::vector<std::string> labels) {
    check_square(table);
    int n = static_cast<int>(table.size());

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error("NotAssociative", "witness " + triple_str(a, b, c));

    int unit = -1;
    for (int e = 0; e < n && unit < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) unit = e;
    }
    if (unit < 0) throw Error("NoUnit", "no two-sided unit");

    std::vector<int> inverse(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (table[x][y] == unit && table[y][x] == unit) {
                inverse[x] = y;
                break;
            }
        if (inverse[x] < 0) throw Error("NoInverse", "element " + std::to_string(x));
    }

    FiniteGroup g;
    g.size = n;
    g.table = table;
    g.unit = unit;
    g.inverse = std::move(inverse);
    g.labels = std::move(labels);
    return g;
}

namespace {

FiniteGroup group_from_perms(const std::vector<Perm>& elems, std::vector<std::string> labels) {
    int n = static_cast<int>(elems.size());
    Table t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Perm prod = compose(elems[i], elems[j]);
            int idx = -1;
            for (int k = 0; k < n; ++k)
                if (elems[k] == prod) {
                    idx = k;
                    break;
                }
            if (idx < 0) throw Error("NotClosed", "element list not closed under composition");
            t[i][j] = idx;
        }
    return group_from_table(t, std::move(labels));
}

FiniteGroup make_s3() {
    // words in the generators; the product applies the left factor first
    std::vector<Perm> elems = {
        {0, 1, 2},  // e
        {1, 0, 2},  // s1
        {0, 2, 1},  // s2
        {2, 0, 1},  // s1s2
        {1, 2, 0},  // s2s1
        {2, 1, 0},  // s1s2s1
    };
    return group_from_perms(elems, {"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"});
}

FiniteGroup make_sl2f2() {
    using M = std::array<int, 4>;  // row-major 2x2 over F2
    std::vector<M> elems = {
        {1, 0, 0, 1},  // E
        {0, 1, 1, 0},  // A1
        {1, 1, 0, 1},  // A2
        {1, 0, 1, 1},  // A3
        {1, 1, 1, 0},  // C1
        {0, 1, 1, 1},  // C2
    };
    auto mmul = [](const M& a, const M& b) {
        M c;
        c[0] = (a[0] * b[0] + a[1] * b[2]) % 2;
        c[1] = (a[0] * b[1] + a[1] * b[3]) % 2;
        c[2] = (a[2] * b[0] + a[3] * b[2]) % 2;
        c[3] = (a[2] * b[1] + a[3] * b[3]) % 2;
        return c;
    };
    int n = static_cast<int>(elems.size());
    Table t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            M prod = mmul(elems[i], elems[j]);
            for (int k = 0; k < n; ++k)
                if (elems[k] == prod) t[i][j] = k;
        }
    return group_from_table(t, {"E", "A1", "A2", "A3", "C1", "C2"});
}

FiniteGroup make_cyclic(int k) {
    Table t(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
        labels[i] = std::to_string(i);
        for (int j = 0; j < k; ++j) t[i][j] = (i + j) % k;
    }
    return group_from_table(t, std::move(labels));
}

FiniteGroup make_klein4() {
    Table t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return group_from_table(t, {"e", "a", "b", "c"});
}

}  // namespace

FiniteGroup make_named_group(const std::string& name) {
    if (name == "S3") return make_s3();
    if (name == "SL2F2") return make_sl2f2();
    if (name == "Klein4") return make_klein4();
    if (name.size() > 1 && name[0] == 'Z' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
        int k = std::stoi(name.substr(1));
        if (k < 1) throw Error("UnknownName", "Z requires k >= 1");
        return make_cyclic(k);
    }
    throw Error("UnknownName", "no named group '" + name + "'");
}

namespace {

bool iso_consistent(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<int>& phi,
                    int assigned_up_to) {
    for (int i = 0; i <= assigned_up_to; ++i)
        for (int j = 0; j <= assigned_up_to; ++j) {
            int p = g1.mul(i, j);
            if (p <= assigned_up_to && phi[p] != g2.mul(phi[i], phi[j])) return false;
        }
    return true;
}

bool iso_search(const FiniteGroup& g1, const FiniteGroup& g2, std::vector<int>& phi,
                std::vector<bool>& used, int next) {
    if (next == g1.size) return true;
    for (int cand = 0; cand < g2.size; ++cand) {
        if (used[cand]) continue;
        if (g1.order_of(next) != g2.order_of(cand)) continue;
        phi[next] = cand;
        used[cand] = true;
        if (iso_consistent(g1, g2, phi, next) && iso_search(g1, g2, phi, used, next + 1))
            return true;
        used[cand] = false;
        phi[next] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> group_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
    if (g1.size > 12 || g2.size > 12)
        throw Error("SizeLimitExceeded", "isomorphism search guarded at order 12");
    if (g1.size != g2.size) return std::nullopt;

    std::vector<int> phi(g1.size, -1);
    std::vector<bool> used(g2.size, false);
    if (iso_search(g1, g2, phi, used, 0)) return phi;
    return std::nullopt;
}

Perm conjugation_action(const FiniteGroup& g, int by) {
    Perm p(g.size);
    for (int x = 0; x < g.size; ++x) p[x] = g.mul(g.mul(g.inv(by), x), by);
    return p;
}

bool is_group_automorphism(const FiniteGroup& g, const Perm& p) {
    if (static_cast<int>(p.size()) != g.size || !is_permutation(p)) return false;
    for (int x = 0; x < g.size; ++x)
        for (int y = 0; y < g.size; ++y)
            if (p[g.mul(x, y)] != g.mul(p[x], p[y])) return false;
    return true;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup subgroup_generated(int degree, const std::vector<Perm>& generators) {
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree)
            throw Error("DegreeMismatch", "generator degree differs");
        if (!is_permutation(p)) throw Error("NotAPermutation", "generator is not a bijection");
    }
    std::set<Perm> closure;
    std::vector<Perm> frontier;
    closure.insert(identity_perm(degree));
    frontier.push_back(identity_perm(degree));
    while (!frontier.empty()) {
        Perm cur = frontier.back();
        frontier.pop_back();
        for (const auto& gen : generators) {
            Perm nxt = compose(cur, gen);
            if (closure.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    PermGroup out;
    out.degree = degree;
    out.elements.assign(closure.begin(), closure.end());
    return out;
}

PermGroup trivial_perm_group(int degree) { return subgroup_generated(degree, {}); }

Partition orbits(const PermGroup& a) {
    Partition out;
    out.proj.assign(a.degree, -1);
    for (int start = 0; start < a.degree; ++start) {
        if (out.proj[start] >= 0) continue;
        int id = out.count();
        std::set<int> orbit;
        std::vector<int> frontier = {start};
        orbit.insert(start);
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (const auto& p : a.elements)
                if (orbit.insert(p[x]).second) frontier.push_back(p[x]);
        }
        std::vector<int> part(orbit.begin(), orbit.end());
        for (int x : part) out.proj[x] = id;
        out.parts.push_back(std::move(part));
    }
    return out;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& subset) {
    if (subset.empty()) return false;
    std::set<int> h(subset.begin(), subset.end());
    for (int x : h)
        if (x < 0 || x >= g.size) return false;
    if (!h.count(g.unit)) return false;
    for (int x : h) {
        if (!h.count(g.inv(x))) return false;
        for (int y : h)
            if (!h.count(g.mul(x, y))) return false;
    }
    return true;
}

Partition double_cosets(const FiniteGroup& g, const std::vector<int>& h) {
    if (!is_subgroup(g, h))
        throw Error("NotASubgroup", "given subset is not a subgroup");
    std::set<int> hs(h.begin(), h.end());

    Partition out;
    out.proj.assign(g.size, -1);
    for (int x = 0; x < g.size; ++x) {
        if (out.proj[x] >= 0) continue;
        int id = out.count();
        std::set<int> cls;
        for (int h1 : hs)
            for (int h2 : hs) cls.insert(g.mul(g.mul(h1, x), h2));
        std::vector<int> part(cls.begin(), cls.end());
        for (int y : part) out.proj[y] = id;
        out.parts.push_back(std::move(part));
    }
    return out;
}

}  // namespace nvq
