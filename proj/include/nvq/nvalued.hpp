#pragma once

#include "nvq/group.hpp"
#include "nvq/multiset.hpp"
#include "nvq/quandle.hpp"
#include "nvq/report.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace nvq {

/// n-valued multiplication table: cell (i,j) is the n-multiset i*j.
struct NValuedTable {
    int size = 0;
    int n = 0;
    std::vector<std::vector<Multiset>> cells;

    const Multiset& at(int i, int j) const { return cells[i][j]; }
    void validate() const;  // cell totals equal n, entries in range
};

struct NValuedGroup {
    NValuedTable product;
    int unit = 0;
    std::vector<int> inv;
    AxiomReport report;
};

struct NValuedRack {
    NValuedTable product;
    NValuedTable bar;
    AxiomReport report;
};

struct MultiOpFamily {
    enum class Flavor { group, rack, quandle };

    int size = 0;
    std::vector<Table> ops;
    Flavor flavor = Flavor::group;

    int n() const { return static_cast<int>(ops.size()); }
};

/// View a single-valued Cayley table as a 1-valued table.
NValuedTable nv_from_table(const Table& t);
NValuedTable nv_from_group(const FiniteGroup& g);

/// The n^2-multiset [ (x*y)_k op z ]: outer expansion of `cell` through `op`.
Multiset expand_left(const NValuedTable& op, const Multiset& cell, int z);
/// The n^2-multiset [ x op (y*z)_k ].
Multiset expand_right(const NValuedTable& op, int x, const Multiset& cell);
/// The n^3-multiset [ u op v : u in a, v in b ] with multiplicities.
Multiset expand_pairs(const NValuedTable& op, const Multiset& a, const Multiset& b);

/// Multiset associativity: the expansions of x*(y*z) and (x*y)*z coincide.
AxiomReport nv_assoc_check(const NValuedTable& t);

/// Associativity + Unit (e*x = x*e = [x,...,x]) + Inverse (e in inv(x)*x and x*inv(x)).
AxiomReport nv_group_check(const NValuedTable& t, int unit, const std::vector<int>& inv);

/// M1, M2 (in the configured inclusion mode) and, when want_quandle, M3.
/// Also reports informationally whether the bar table satisfies M2.
AxiomReport nv_rack_check(const NValuedTable& product, const NValuedTable& bar, bool want_quandle,
                          Inclusion mode = Inclusion::multiplicity_aware);

/// Coset n-valued group of (G, A): carrier = orbits of A, cell (x,y) =
/// [pi(rep(x) * alpha(rep(y)))]. Validates A <= Aut(G) and audits that every
/// representative choice reproduces every cell. Throws NotAutomorphism /
/// RepresentativeDependence; axiom failures land in the report.
NValuedGroup coset_nv_group(const FiniteGroup& g, const PermGroup& a);

/// Coset n-valued quandle of (Q, A); the bar operation is derived from the
/// unique Q2 solution on Q and projected the same way.
NValuedRack coset_nv_quandle(const QuandleTable& q, const PermGroup& a);

/// Double coset group of (G, H): carrier H\G/H, cell = [pi(g1 h g2) : h in H].
NValuedGroup double_coset_group(const FiniteGroup& g, const std::vector<int>& h);

/// Mixed associativity (a *i b) *j c = a *i (b *j c) over all op pairs.
AxiomReport multi_group_check(const MultiOpFamily& fam);

/// Mutual distributivity (x *i y) *j z = (x *j z) *i (y *j z) over all op pairs.
AxiomReport multi_rack_check(const MultiOpFamily& fam);

struct MultiToNv {
    NValuedTable product;
    std::optional<NValuedTable> bar;  // present for rack/quandle flavors
    AxiomReport report;               // n-valued axiom suite of the result
};

/// Assemble the n-valued structure [x *1 y, ..., x *n y].
/// Throws PreconditionFailed when the family check fails.
MultiToNv multi_to_nvalued(const MultiOpFamily& fam);

/// Conj_I family: product [h^-i g h^i : i in exponents], bar with i negated.
NValuedRack conj_family(const FiniteGroup& g, const std::vector<int>& exponents);

/// n-quandle powers: cell (x,y) = [S_y(x), ..., S_y^n(x)]. Throws NotAnNQuandle.
NValuedRack power_nvalued(const QuandleTable& q, int n);

/// --- windowed structures on the non-negative integers ---

using ZNvProduct = std::function<std::vector<long long>(long long, long long)>;

/// x*y = [x+y, |x-y|], the coset 2-valued group of (Z, {id,-id}) on Z+.
std::vector<long long> zplus_group_product(long long x, long long y);

/// Coset 2-valued quandle of Core(Z) under negation, computed from the
/// orbit construction (representatives are the non-negative integers).
std::vector<long long> core_z_coset_product(long long a, long long b);

/// Closed form [2b+a, |2b-a|] of the same product.
std::vector<long long> core_z_closed_form(long long a, long long b);

/// Unit/Inverse/Associativity on the carrier [0..window]; associativity
/// triples are restricted so intermediates stay within 3*window.
AxiomReport windowed_nv_check(const ZNvProduct& f, int n, long long unit,
                              const std::function<long long(long long)>& inv, long long window);

}  // namespace nvq
