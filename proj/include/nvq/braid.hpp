#pragma once

#include "nvq/linear.hpp"
#include "nvq/nvalued.hpp"
#include "nvq/quandle.hpp"
#include "nvq/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nvq {

/// Affine form c_x*x + c_y*y + c in two integer arguments.
struct LinearForm {
    long long cx = 0;
    long long cy = 0;
    long long c = 0;

    long long eval(long long x, long long y) const { return cx * x + cy * y + c; }
};

/// Map R: X x X -> X x X, either as an explicit table on a finite carrier or
/// as a pair of affine forms on an integer window. R need not be invertible.
struct BraidMap {
    enum class Carrier { finite, window };

    Carrier carrier = Carrier::finite;
    int size = 0;                                   // finite
    std::vector<std::pair<int, int>> table;         // finite, row-major in (x,y)
    LinearForm f1, f2;                              // window
    long long half_width = 20;                      // window

    std::pair<int, int> apply(int x, int y) const { return table[x * size + y]; }
};

BraidMap braid_from_table(int size, std::vector<std::pair<int, int>> table);
BraidMap braid_from_forms(const LinearForm& f1, const LinearForm& f2, long long half_width);
/// The affine map reduced mod m on the finite carrier {0..m-1}.
BraidMap braid_mod(const LinearForm& f1, const LinearForm& f2, int m);

/// (R x id)(id x R)(R x id) = (id x R)(R x id)(id x R) on all triples
/// (finite) or all window triples whose intermediates stay within 4x the
/// half-width (window).
AxiomReport braid_check(const BraidMap& r);

/// The rack-induced solution R(x,y) = (y, x*y); right self-distributivity
/// makes this satisfy the braid equation on every rack. Throws
/// PreconditionFailed unless the table is a rack.
BraidMap rack_to_braid(const QuandleTable& q);

/// R(x,y) = (x *1 y, x *2 y) from two linear operations on Z.
BraidMap multirack_to_map(const WindowedZOp& op1, const WindowedZOp& op2,
                          long long half_width = 20);

struct DegenerateSolution {
    BraidMap map;                               // R(a,b) = (unit, a*b)
    AxiomReport braid;                          // braid verdict for the map
    NValuedTable two_valued;                    // a*b = [unit, ab]
    AxiomReport assoc;                          // nv_assoc_check of the 2-valued table
    std::optional<std::array<int, 3>> witness;  // non-associativity witness with c != unit
};

/// The degenerate solution R(a,b) = (unit, ab) of a monoid with two-sided
/// unit, plus the non-associative 2-valued companion [a o b, ab], a o b = unit.
/// Throws NoUnit.
DegenerateSolution degenerate_monoid_solution(const Table& monoid);

}  // namespace nvq
