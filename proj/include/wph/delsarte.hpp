#pragma once

// Square exponent matrices of equations with as many monomials as variables:
// weight/degree derivation, the determinant rationality test, loop families,
// quasismoothness of loops by characteristic, and diagonal automorphism
// groups of arbitrary monomial sets.

#include "wph/exact.hpp"
#include "wph/weights.hpp"

#include <optional>
#include <vector>

namespace wph {

/// Square non-negative exponent matrix; row i encodes the monomial
/// prod_j x_j^{b_ij}. Optional nonzero coefficients, one per row.
struct DelsarteMatrix {
    IntMatrix exponents;
    std::optional<std::vector<Rat>> coefficients;

    explicit DelsarteMatrix(IntMatrix b, std::optional<std::vector<Rat>> k = std::nullopt);

    std::size_t size() const { return exponents.rows(); }
    ExponentVector row(std::size_t i) const;
};

/// Derived homogeneity data: q_j are the row sums of the inverse exponent
/// matrix, d is their least common denominator, and a_j = d * q_j.
/// Always gcd(a_0, ..., a_{n+1}) = 1 and d divides det(B).
struct DelsarteDerivation {
    std::vector<Rat> q;
    Int degree;
    std::vector<Int> weights;

    WeightSystem weight_system() const { return WeightSystem(weights, degree); }
};

/// Throws std::domain_error when the matrix is singular or some derived
/// weight fails to be positive ("degenerate weight system").
DelsarteDerivation derive_weights(const DelsarteMatrix& b);

/// True exactly when the derived degree equals |det(B)|.
bool delsarte_rational(const DelsarteMatrix& b);

/// group_order: order of the quotient lattice B^{-1}Z^N / Z^N, i.e. |det(B)|.
/// vector_order: order of the class of (a_0/d, ..., a_{n+1}/d) in it,
/// computed through the Smith normal form; always equals d.
struct LatticeOrder {
    Int group_order;
    Int vector_order;
};
LatticeOrder lattice_order_check(const DelsarteMatrix& b);

/// Exponents [b_0, ..., b_{n+1}] of x_0^{b_0}x_1 + ... + x_{n+1}^{b_{n+1}}x_0.
struct LoopType {
    std::vector<Int> exponents;

    explicit LoopType(std::vector<Int> bs);
    std::size_t size() const { return exponents.size(); }
};

/// b_i on the diagonal, 1 in position (i, i+1 mod N).
DelsarteMatrix loop_matrix(const LoopType& t);

/// Derivation of the loop type [2 repeated n+1 times, 3].
DelsarteDerivation main_family(std::size_t n);

/// prod(b_i) + (-1)^{N+1}, which equals det of the loop matrix. The loop
/// hypersurface is quasismooth over a field unless the characteristic
/// divides this value; over the rationals it is quasismooth whenever all
/// exponents are at least 2.
Int loop_quasismooth_obstruction(const LoopType& t);

/// One generator of a finite diagonal symmetry group: the exponents of the
/// root-of-unity action on each variable (values in [0,1)), the common
/// scaling factor applied to every monomial, and the generator's order.
struct DiagonalAutGenerator {
    std::vector<Rat> action;
    Rat scalar;
    Int order;
};

/// Diagonal scalings multiplying every given monomial by one common factor,
/// modulo the one-parameter weighted scaling subgroup.
struct DiagonalAutGroup {
    std::vector<Int> invariant_factors; // ascending divisibility chain, 1s dropped
    std::vector<DiagonalAutGenerator> generators;

    bool trivial() const { return invariant_factors.empty(); }
    Int order() const;
};

/// Computes the group for an arbitrary monomial set (not necessarily a
/// complete basis or a square system). Throws std::domain_error when the
/// group fails to be finite.
DiagonalAutGroup diagonal_aut(const std::vector<ExponentVector>& monomials, const WeightSystem& w);

} // namespace wph
