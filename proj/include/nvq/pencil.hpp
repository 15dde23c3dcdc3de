#pragma once

#include "nvq/rational.hpp"
#include "nvq/report.hpp"

#include <array>
#include <vector>

namespace nvq {

/// Dense rational matrix (desk scale; used by the pencil-of-products checks).
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    static RatMatrix zero(int r, int c);
    static RatMatrix identity(int n);
    static RatMatrix diag(const std::vector<Rational>& d);

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const RatMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator<(const RatMatrix& o) const { return a < o.a; }

    std::string str() const;
};

RatMatrix mat_mul(const RatMatrix& x, const RatMatrix& y);
RatMatrix mat_add(const RatMatrix& x, const RatMatrix& y);
RatMatrix mat_scale(const Rational& t, const RatMatrix& x);
Rational mat_det(const RatMatrix& x);
/// Gauss-Jordan inverse; throws SingularM.
RatMatrix mat_inverse(const RatMatrix& x);

/// m_t(A, B) = AB + t*AMB. Throws ShapeMismatch.
RatMatrix pencil_product(const RatMatrix& a, const RatMatrix& b, const RatMatrix& m,
                         const Rational& t);

/// Deterministic invertible sample triples (A, B, C) with small entries.
std::vector<std::array<RatMatrix, 3>> seeded_matrix_triples(int count, int dim, unsigned seed);

/// For each sample triple: the 4-element multisets {m_ti(m_tj(A,B),C)} and
/// {m_ti(A, m_tj(B,C))} must agree (2-valued associativity); plain mixed
/// associativity for i != j is reported informationally. Also verifies the
/// unit E of the t=0 part, the unit M^-1 of nu(A,B) = AMB, and the nu-inverse
/// M^-1 A^-1 M^-1 on invertible samples.
AxiomReport pencil_nv_assoc_check(const RatMatrix& m, const Rational& t1, const Rational& t2,
                                  const std::vector<std::array<RatMatrix, 3>>& samples);

}  // namespace nvq
