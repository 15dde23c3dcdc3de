#include "nvq/pencil.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nvq {

RatMatrix RatMatrix::zero(int r, int c) {
    return RatMatrix{r, c, std::vector<Rational>(static_cast<size_t>(r) * c)};
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::diag(const std::vector<Rational>& d) {
    RatMatrix m = zero(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols; ++j) {
            if (j) os << ' ';
            os << at(i, j).short_str();
        }
    }
    os << ']';
    return os.str();
}

RatMatrix mat_mul(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols != y.rows) throw Error("ShapeMismatch", "matrix product shapes");
    RatMatrix out = RatMatrix::zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

RatMatrix mat_add(const RatMatrix& x, const RatMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("ShapeMismatch", "matrix sum shapes");
    RatMatrix out = x;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
    return out;
}

RatMatrix mat_scale(const Rational& t, const RatMatrix& x) {
    RatMatrix out = x;
    for (auto& v : out.a) v *= t;
    return out;
}

Rational mat_det(const RatMatrix& x) {
    if (x.rows != x.cols) throw Error("ShapeMismatch", "determinant of non-square matrix");
    RatMatrix m = x;
    int n = m.rows;
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv_p = Rational(1) / m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            Rational f = m.at(r, col) * inv_p;
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return det;
}

RatMatrix mat_inverse(const RatMatrix& x) {
    if (x.rows != x.cols) throw Error("ShapeMismatch", "inverse of non-square matrix");
    int n = x.rows;
    RatMatrix m = x;
    RatMatrix inv = RatMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("SingularM", "matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational inv_p = Rational(1) / m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) *= inv_p;
            inv.at(col, j) *= inv_p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatMatrix pencil_product(const RatMatrix& a, const RatMatrix& b, const RatMatrix& m,
                         const Rational& t) {
    if (a.rows != a.cols || a.rows != b.rows || b.rows != b.cols || m.rows != a.rows ||
        m.rows != m.cols)
        throw Error("ShapeMismatch", "pencil product needs square matrices of one dimension");
    RatMatrix ab = mat_mul(a, b);
    if (t.is_zero()) return ab;
    return mat_add(ab, mat_scale(t, mat_mul(mat_mul(a, m), b)));
}

std::vector<std::array<RatMatrix, 3>> seeded_matrix_triples(int count, int dim, unsigned seed) {
    std::mt19937 rng(seed);
    auto entry = [&rng]() {
        long long num = static_cast<long long>(rng() % 7) - 3;  // -3..3
        long long den = static_cast<long long>(rng() % 3) + 1;  // 1..3
        return Rational(num, den);
    };
    auto invertible = [&](RatMatrix& m) {
        do {
            for (auto& v : m.a) v = entry();
        } while (mat_det(m).is_zero());
    };
    std::vector<std::array<RatMatrix, 3>> out;
    for (int i = 0; i < count; ++i) {
        std::array<RatMatrix, 3> t = {RatMatrix::zero(dim, dim), RatMatrix::zero(dim, dim),
                                      RatMatrix::zero(dim, dim)};
        for (auto& m : t) invertible(m);
        out.push_back(std::move(t));
    }
    return out;
}

AxiomReport pencil_nv_assoc_check(const RatMatrix& m, const Rational& t1, const Rational& t2,
                                  const std::vector<std::array<RatMatrix, 3>>& samples) {
    RatMatrix m_inv = mat_inverse(m);  // throws SingularM

    AxiomReport rep;
    auto& assoc = rep.add("multiset-associativity");
    auto& mixed = rep.add("mixed-associativity(informational)", /*informational=*/true);
    auto& unit0 = rep.add("unit-E-of-t0-part");
    auto& unit_nu = rep.add("unit-Minv-of-nu");
    auto& inv_nu = rep.add("nu-inverse");

    const std::array<Rational, 2> ts = {t1, t2};
    int sample_no = 0;
    for (const auto& [a, b, c] : samples) {
        std::vector<RatMatrix> lhs, rhs;
        for (const auto& ti : ts)
            for (const auto& tj : ts) {
                lhs.push_back(pencil_product(pencil_product(a, b, m, tj), c, m, ti));
                rhs.push_back(pencil_product(a, pencil_product(b, c, m, tj), m, ti));
                if (ti != tj && lhs.back() != rhs.back())
                    mixed.fail("sample " + std::to_string(sample_no) + " (t_i,t_j) = (" +
                               ti.short_str() + "," + tj.short_str() + ")");
            }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs) assoc.fail("sample " + std::to_string(sample_no));

        if (mat_mul(a, RatMatrix::identity(a.rows)) != a)
            unit0.fail("sample " + std::to_string(sample_no));

        auto nu = [&](const RatMatrix& x, const RatMatrix& y) { return mat_mul(mat_mul(x, m), y); };
        if (nu(a, m_inv) != a || nu(m_inv, a) != a)
            unit_nu.fail("sample " + std::to_string(sample_no));

        RatMatrix a_inv = mat_inverse(a);
        RatMatrix cand = mat_mul(mat_mul(m_inv, a_inv), m_inv);
        if (nu(a, cand) != m_inv || nu(cand, a) != m_inv)
            inv_nu.fail("sample " + std::to_string(sample_no));

        ++sample_no;
    }
    return rep;
}

}  // namespace nvq
