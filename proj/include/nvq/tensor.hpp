#pragma once

#include "nvq/rational.hpp"
#include "nvq/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nvq {

/// Dense tensor of exact rationals.
struct RationalTensor {
    std::vector<int> shape;
    std::vector<Rational> data;

    static RationalTensor zeros(std::vector<int> shape);

    Rational& at3(int i, int j, int k) { return data[idx3(i, j, k)]; }
    const Rational& at3(int i, int j, int k) const { return data[idx3(i, j, k)]; }

    size_t idx3(int i, int j, int k) const {
        return (static_cast<size_t>(i) * shape[1] + j) * shape[2] + k;
    }
};

using RatVec = std::vector<Rational>;

bool is_zero_vec(const RatVec& v);
RatVec scale_vec(const Rational& t, const RatVec& v);
RatVec add_vec(const RatVec& a, const RatVec& b);
RatVec sub_vec(const RatVec& a, const RatVec& b);

/// Finite-dimensional algebra (and optionally coalgebra) over exact
/// rationals, given by structure constants:
///   mult.at3(i,j,k)   = coefficient of e_k in e_i * e_j
///   comult.at3(k,i,j) = coefficient of e_i (x) e_j in Delta(e_k)
struct StructureConstantSpace {
    int dim = 0;
    RationalTensor mult;
    RatVec unit_vec;
    std::optional<RationalTensor> comult;
    std::vector<std::string> labels;

    RatVec basis(int i) const;
    RatVec product(const RatVec& u, const RatVec& v) const;

    bool mult_associative() const;
    bool mult_commutative() const;
    bool comult_coassociative() const;  // false when no comult
};

/// A (x) A with the componentwise product; pair (i,j) gets index i*dim + j.
StructureConstantSpace tensor_square(const StructureConstantSpace& a);

/// Linear map between structure-constant spaces; matrix is codomain x domain.
/// The spaces are held by value so maps stay self-contained.
struct LinearMap {
    StructureConstantSpace domain;
    StructureConstantSpace codomain;
    std::vector<RatVec> matrix;

    RatVec apply(const RatVec& v) const;
};

/// Delta as a linear map A -> A (x) A. Requires comult.
LinearMap delta_as_map(const StructureConstantSpace& a);

}  // namespace nvq
