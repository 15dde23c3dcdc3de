#pragma once

#include "nvq/report.hpp"

#include <optional>
#include <string>

namespace nvq {

/// Linear operation x*y = epsilon*x + a*y + b on the integers.
struct WindowedZOp {
    int epsilon = 1;  // +1 or -1
    long long a = 0;
    long long b = 0;

    long long eval(long long x, long long y) const { return epsilon * x + a * y + b; }

    bool is_trivial() const { return epsilon == 1 && a == 0 && b == 0; }
    bool is_core() const { return epsilon == -1 && a == 2 && b == 0; }
};

enum class LinearClass { trivial_quandle, core_quandle, rack_not_quandle, not_rack };

std::string linear_class_name(LinearClass c);

struct LinearRackReport {
    AxiomReport axioms;        // Q1/Q2/Q3 verified on the window
    LinearClass classification;  // closed-form classification
};

/// Q2 holds structurally (epsilon != 0); Q1 and Q3 are checked for all
/// x, y, z in [-window, window]. The closed-form classification is computed
/// independently and cross-checked against the windowed verdicts.
LinearRackReport linear_rack_check(const WindowedZOp& op, long long window);

struct LinearMultirackReport {
    AxiomReport axioms;                  // both mixed distributivity identities
    std::optional<std::string> family;   // "1", "2", "3.1", ..., when recognized
};

/// Mixed distributivity of the ordered pair on the window, plus recognition
/// of the listed two-operation families (order-insensitively for the
/// core/trivial pair).
LinearMultirackReport linear_multirack_check(const WindowedZOp& op1, const WindowedZOp& op2,
                                             long long window);

}  // namespace nvq
