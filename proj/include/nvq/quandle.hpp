#pragma once

#include "nvq/group.hpp"
#include "nvq/report.hpp"

#include <string>
#include <vector>

namespace nvq {

/// Single-valued rack/quandle Cayley table; entry (i,j) holds i*j
/// (rows are indexed by the left argument).
struct QuandleTable {
    enum class Kind { rack, quandle };

    int size = 0;
    Table table;
    Kind kind = Kind::rack;

    int at(int i, int j) const { return table[i][j]; }
    /// Right translation S_x: y -> y*x, i.e. column x.
    Perm translation(int x) const;
};

/// Q2 (columns are bijections) and Q3 (right self-distributivity).
AxiomReport rack_check(const Table& t);
/// Q1 (idempotency) in addition to Q2 and Q3.
AxiomReport quandle_check(const Table& t);

/// Promotions, throwing PreconditionFailed when the axioms do not hold.
QuandleTable as_rack(const Table& t);
QuandleTable as_quandle(const Table& t);

QuandleTable conj_quandle(const FiniteGroup& g, int m);  // a*b = b^-m a b^m
QuandleTable core_quandle(const FiniteGroup& g);         // a*b = b a^-1 b
/// a*b = phi(a b^-1) b. Throws NotAnAutomorphism.
QuandleTable alexander_quandle(const FiniteGroup& g, const Perm& phi);
QuandleTable trivial_quandle(int k);
QuandleTable dihedral_quandle(int k);  // x*y = 2y - x mod k

/// Colon-syntax dispatcher used by the CLI:
///   conj:<group>:<m> | core:<group> | alex:<group>:conj-by:<el>
///   trivial:<k> | dihedral:<k>
QuandleTable make_named_quandle(const std::string& spec);

/// Group generated by the right translations. Each generator is verified to
/// be an automorphism of the table.
PermGroup inner_group(const QuandleTable& q);

struct ProductReport {
    Table table;             // x -> (x *1 y) *2 y
    bool distributive;       // (x *1 y) *2 z = (x *2 z) *1 (y *2 z)
    AxiomReport check;       // quandle axioms of the product table
};

/// Quandle product on a shared carrier. Throws CarrierMismatch.
ProductReport quandle_product(const QuandleTable& q1, const QuandleTable& q2);

/// True iff every right translation satisfies S_y^n = id.
bool is_n_quandle(const QuandleTable& q, int n);

Table relabel_table(const Table& t, const Perm& p);
/// Lexicographically minimal relabeling over all carrier permutations.
Table canonical_form(const Table& t);

/// All quandle tables of the given order (guarded at 5); with up_to_iso one
/// representative per isomorphism class, in canonical form.
std::vector<QuandleTable> enumerate_quandles(int order, bool up_to_iso);

/// All rack tables of the given order (guarded at 4).
std::vector<QuandleTable> enumerate_racks(int order);

}  // namespace nvq
