#include "nvq/multiset.hpp"

#include "nvq/report.hpp"

#include <sstream>

namespace nvq {

Multiset Multiset::from_list(const std::vector<int>& elements) {
    Multiset m;
    for (int x : elements) {
        if (x < 0) throw Error("NegativeIndex", "multiset element " + std::to_string(x));
        ++m.counts_[x];
        ++m.total_;
    }
    return m;
}

int Multiset::multiplicity(int x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
}

bool Multiset::included_in(const Multiset& b, Inclusion mode) const {
    for (const auto& [x, c] : counts_) {
        int cb = b.multiplicity(x);
        if (mode == Inclusion::multiplicity_aware ? c > cb : cb == 0) return false;
    }
    return true;
}

std::vector<int> Multiset::expanded() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(total_));
    for (const auto& [x, c] : counts_)
        for (int i = 0; i < c; ++i) out.push_back(x);
    return out;
}

std::string Multiset::str() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (int x : expanded()) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ']';
    return os.str();
}

void MultisetBuilder::add(int x, int times) {
    if (x < 0) throw Error("NegativeIndex", "multiset element " + std::to_string(x));
    m_.counts_[x] += times;
    m_.total_ += times;
}

void MultisetBuilder::add_all(const Multiset& m, int times) {
    for (const auto& [x, c] : m.counts()) add(x, c * times);
}

Multiset MultisetBuilder::build() && { return std::move(m_); }

}  // namespace nvq
