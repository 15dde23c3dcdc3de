#include "nvq/linear.hpp"

#include <sstream>

namespace nvq {

std::string linear_class_name(LinearClass c) {
    switch (c) {
        case LinearClass::trivial_quandle: return "trivial-quandle";
        case LinearClass::core_quandle: return "core-quandle";
        case LinearClass::rack_not_quandle: return "rack-not-quandle";
        case LinearClass::not_rack: return "not-rack";
    }
    return "?";
}

namespace {

std::string ztriple(long long x, long long y, long long z) {
    std::ostringstream os;
    os << "(" << x << "," << y << "," << z << ")";
    return os.str();
}

// Coefficient comparison of (x*y)*z with (x*z)*(y*z) gives: a = 0 or
// (a = 1 - epsilon and b = 0). Quandles additionally need Q1.
LinearClass classify(const WindowedZOp& op) {
    bool rack = (op.a == 0) || (op.a == 1 - op.epsilon && op.b == 0);
    if (!rack) return LinearClass::not_rack;
    if (op.is_trivial()) return LinearClass::trivial_quandle;
    if (op.is_core()) return LinearClass::core_quandle;
    return LinearClass::rack_not_quandle;
}

}  // namespace

LinearRackReport linear_rack_check(const WindowedZOp& op, long long window) {
    if (op.epsilon != 1 && op.epsilon != -1)
        throw Error("IndexOutOfRange", "epsilon must be +1 or -1");

    LinearRackReport out;
    out.classification = classify(op);

    // Q2 is structural: z -> epsilon*z + a*y + b is injective since epsilon != 0
    out.axioms.add("Q2");

    auto& q3 = out.axioms.add("Q3");
    for (long long x = -window; x <= window; ++x)
        for (long long y = -window; y <= window; ++y)
            for (long long z = -window; z <= window; ++z)
                if (op.eval(op.eval(x, y), z) != op.eval(op.eval(x, z), op.eval(y, z)))
                    q3.fail("witness " + ztriple(x, y, z));

    auto& q1 = out.axioms.add("Q1");
    for (long long x = -window; x <= window; ++x)
        if (op.eval(x, x) != x) q1.fail("x = " + std::to_string(x));

    bool windowed_quandle = out.axioms.all_pass();
    bool windowed_rack = q3.pass;
    bool closed_rack = out.classification != LinearClass::not_rack;
    bool closed_quandle = out.classification == LinearClass::trivial_quandle ||
                          out.classification == LinearClass::core_quandle;
    if (window >= 2 && (windowed_rack != closed_rack || windowed_quandle != closed_quandle))
        throw Error("ClassificationMismatch",
                    "windowed verdicts disagree with the closed-form classification");
    return out;
}

LinearMultirackReport linear_multirack_check(const WindowedZOp& op1, const WindowedZOp& op2,
                                             long long window) {
    for (const auto* op : {&op1, &op2}) {
        LinearRackReport r = linear_rack_check(*op, window);
        if (!r.axioms.find("Q3")->pass)
            throw Error("PreconditionFailed", "operation is not a rack on the window");
    }

    LinearMultirackReport out;
    auto& d12 = out.axioms.add("mixdis(1,2)");
    auto& d21 = out.axioms.add("mixdis(2,1)");
    for (long long x = -window; x <= window; ++x)
        for (long long y = -window; y <= window; ++y)
            for (long long z = -window; z <= window; ++z) {
                if (op2.eval(op1.eval(x, y), z) != op1.eval(op2.eval(x, z), op2.eval(y, z)))
                    d12.fail("witness " + ztriple(x, y, z));
                if (op1.eval(op2.eval(x, y), z) != op2.eval(op1.eval(x, z), op1.eval(y, z)))
                    d21.fail("witness " + ztriple(x, y, z));
            }

    if (out.axioms.all_pass()) {
        if (op1.is_trivial() && op2.is_trivial())
            out.family = "1";
        else if ((op1.is_core() && op2.is_trivial()) || (op1.is_trivial() && op2.is_core()))
            out.family = "2";
        else if (op1.epsilon == 1 && op1.a == 0 && op2.epsilon == 1 && op2.a == 0)
            out.family = "3.1";
        else if (op1.is_trivial() && op2.epsilon == -1 && op2.a == 0)
            out.family = "3.2";
        else if (op1.epsilon == -1 && op1.a == 0 && op2.is_trivial())
            out.family = "3.3";
        else if (op1.epsilon == -1 && op1.a == 0 && op2.epsilon == -1 && op2.a == 0 &&
                 op1.b == op2.b)
            out.family = "3.4";
    }
    return out;
}

}  // namespace nvq
