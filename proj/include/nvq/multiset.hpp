#pragma once

#include <map>
#include <string>
#include <vector>

namespace nvq {

enum class Inclusion { multiplicity_aware, support_only };

/// Finite multiset over 0-based element indices. Values are immutable once
/// built; equality is order-independent by construction.
class Multiset {
public:
    Multiset() = default;

    static Multiset from_list(const std::vector<int>& elements);

    long long total() const { return total_; }
    bool empty() const { return total_ == 0; }

    int multiplicity(int x) const;
    bool contains(int x) const { return multiplicity(x) >= 1; }

    /// multiplicity_aware: every multiplicity in *this is <= the one in b.
    /// support_only: every element present here is present in b.
    bool included_in(const Multiset& b, Inclusion mode) const;

    const std::map<int, int>& counts() const { return counts_; }

    /// Ascending element list with repetition, e.g. {1:2, 2:1} -> [1,1,2].
    std::vector<int> expanded() const;

    /// Bracketed ascending list with repetition: "[1,1,2]".
    std::string str() const;

    bool operator==(const Multiset& o) const { return counts_ == o.counts_; }
    bool operator!=(const Multiset& o) const { return !(*this == o); }
    bool operator<(const Multiset& o) const { return counts_ < o.counts_; }

    friend class MultisetBuilder;

private:
    std::map<int, int> counts_;
    long long total_ = 0;
};

/// Accumulator for the expansion loops of the n-valued axiom checkers.
class MultisetBuilder {
public:
    void add(int x, int times = 1);
    void add_all(const Multiset& m, int times = 1);
    Multiset build() &&;

private:
    Multiset m_;
};

}  // namespace nvq
