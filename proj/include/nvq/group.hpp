#pragma once

#include "nvq/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nvq {

using Perm = std::vector<int>;
using Table = std::vector<std::vector<int>>;

Perm identity_perm(int degree);
/// compose(p, q) applies p first, then q.
Perm compose(const Perm& p, const Perm& q);
Perm inverse_perm(const Perm& p);
bool is_permutation(const Perm& p);

/// Finite group as a validated Cayley table over 0-based indices.
/// table[i][j] holds i*j. Labels are optional (set for named groups).
struct FiniteGroup {
    int size = 0;
    Table table;
    int unit = 0;
    std::vector<int> inverse;
    std::vector<std::string> labels;

    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }
    int power(int a, long long k) const;
    int order_of(int a) const;
    /// Index of a label, or -1. Numeric strings resolve as indices.
    int element_by_label(const std::string& s) const;
};

/// Validates associativity, unit and inverses.
/// Throws Error codes NotAssociative / NoUnit / NoInverse with the first witness.
FiniteGroup group_from_table(const Table& table, std::vector<std::string> labels = {});

/// Named groups with frozen element orderings:
///   S3      e,s1,s2,s1s2,s2s1,s1s2s1
///   SL2F2   E,A1,A2,A3,C1,C2
///   Klein4  e,a,b,c
///   Z<k>    0..k-1 under addition mod k
FiniteGroup make_named_group(const std::string& name);

/// Brute-force isomorphism search (guarded at order 12). Returns the
/// lexicographically first bijection phi with phi(x*y) = phi(x)*phi(y),
/// mapping g1 indices to g2 indices.
std::optional<std::vector<int>> group_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2);

/// x -> by^-1 * x * by
Perm conjugation_action(const FiniteGroup& g, int by);

bool is_group_automorphism(const FiniteGroup& g, const Perm& p);

/// Permutation group as an explicit sorted element list (closed, with identity).
struct PermGroup {
    int degree = 0;
    std::vector<Perm> elements;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(const Perm& p) const;
};

PermGroup subgroup_generated(int degree, const std::vector<Perm>& generators);
PermGroup trivial_perm_group(int degree);

struct Partition {
    std::vector<std::vector<int>> parts;  // each ascending, ordered by minimum element
    std::vector<int> proj;                // element index -> part id

    int count() const { return static_cast<int>(parts.size()); }
};

Partition orbits(const PermGroup& a);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& subset);

/// Partition of G into double cosets HgH. Throws NotASubgroup.
Partition double_cosets(const FiniteGroup& g, const std::vector<int>& h);

}  // namespace nvq
