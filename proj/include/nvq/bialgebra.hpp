#pragma once

#include "nvq/group.hpp"
#include "nvq/nvalued.hpp"
#include "nvq/quandle.hpp"
#include "nvq/report.hpp"
#include "nvq/tensor.hpp"

namespace nvq {

struct SpaceWithReport {
    StructureConstantSpace space;
    AxiomReport report;
};

/// Group algebra k[X]: c_{xy}^z = multiplicity of z in x*y. The associativity
/// tensor verdict is informational (racks legitimately fail it) and is
/// cross-asserted against nv_assoc_check.
SpaceWithReport group_algebra(const NValuedTable& t);

/// Function algebra C(X): pointwise product on the delta basis, all-ones
/// unit, comultiplication Delta(f)(x,y) = sum of f over the cell x*y.
SpaceWithReport functions_space(const NValuedTable& t);

/// Duality of k[X] and C(X): <x*y, f> = Delta f (x,y) on all basis triples.
AxiomReport pairing_check(const StructureConstantSpace& ka, const StructureConstantSpace& cx);

/// Derived polylinear map Phi_k(f) of a trace map, evaluated by the
/// recurrence Phi_{k+1}(f)(a_1,...) = f(a_1) Phi_k(f)(a_2,...) -
/// sum_i Phi_k(f)(a_2,...,a_1 a_i,...). Throws NonCommutativeCodomain.
RatVec derived_map(const LinearMap& f, const std::vector<RatVec>& args);

/// Frobenius n-homomorphism conditions: f(1) = n and Phi_degree(f) = 0 on
/// all basis tuples (degree defaults to n+1), plus a seeded random
/// non-basis spot-check.
AxiomReport frobenius_check(const LinearMap& f, int n, int exhaustive_degree = 0,
                            unsigned seed = 0);

/// Prime-field replica of the basis sweep for speed experiments: all scalars
/// are reduced mod p (denominators via modular inverse). A zero verdict mod p
/// is necessary, not sufficient; acceptance runs use the rational check.
/// Throws BadPrime when p < 2 or a denominator vanishes mod p.
AxiomReport frobenius_check_mod(const LinearMap& f, int n, long long p,
                                int exhaustive_degree = 0);

/// Independent oracle for the derived comultiplications: expand x*y to
/// [z_1..z_n], set lambda^i_j = f_i(z_j) and sum the products over injective
/// index tuples. Throws KTooLarge for k > n+1.
Rational derk_oracle(const NValuedTable& t, const std::vector<RatVec>& fs, int x, int y);

/// Rack bialgebra k[Q]: table multiplication, diagonal comultiplication.
/// The report carries the three conditions: coassociativity, multiplication
/// as a coalgebra homomorphism, and the self-distributivity tensor identity
/// (self-dist1), which holds exactly when the table satisfies Q3. Accepts any
/// Q2-passing table so that Q3-violating controls exercise the last flag;
/// throws PreconditionFailed when Q2 fails.
SpaceWithReport rack_bialgebra(const Table& t);

/// Corack verdicts on a space with comultiplication:
///   (comp)       Delta is an algebra homomorphism,
///   (self-dist)  (Delta x id)Delta = (id x id x m)(id x sigma x id)(Delta x Delta)Delta,
///   n-hom        frobenius_check(Delta, n),
/// each independent, plus informational coassociativity. For n = 1 the
/// (comp) and Phi_2 verdicts are cross-asserted to coincide.
AxiomReport corack_check(const StructureConstantSpace& a, int n, unsigned seed = 0);

/// Indicator functions of the conjugation orbits of B on G: a basis of C(G)^B.
std::vector<RatVec> invariant_functions(const FiniteGroup& g, const std::vector<int>& b);

struct InvariantCoproduct {
    std::vector<RatVec> values;        // |G| x |G| table of Delta f
    std::vector<RatVec> orbit_coeffs;  // coefficients in the C(G)^B tensor-square basis
    AxiomReport report;                // invariance in each argument; tensor-square membership
};

/// Delta f(x,y) = sum_{b in B} f(b^-1 x b * y). Throws NotInvariant when f
/// is not B-invariant.
InvariantCoproduct invariant_coproduct(const FiniteGroup& g, const std::vector<int>& b,
                                       const RatVec& f);

}  // namespace nvq
