#pragma once

// Weight systems for families of weighted projective hypersurfaces, monomial
// enumeration at a fixed weighted degree, and the cheap numeric criteria
// (well-formedness, Fano, the classical degree bound, automorphism dimension,
// moduli bound).

#include "wph/exact.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wph {

/// Exponent tuple of a monomial, one entry per variable.
using ExponentVector = std::vector<std::int64_t>;

Int weighted_degree(std::span<const Int> weights, const ExponentVector& e);

/// Weights (a_0, ..., a_{n+1}) together with the family degree d.
/// At least 3 weights, all positive, degree positive.
class WeightSystem {
public:
    WeightSystem(std::vector<Int> weights, Int degree);

    const std::vector<Int>& weights() const { return weights_; }
    const Int& degree() const { return degree_; }
    std::size_t variable_count() const { return weights_.size(); }
    std::size_t dimension() const { return weights_.size() - 2; }
    Int max_weight() const;
    Int weight_sum() const;

    bool operator==(const WeightSystem& other) const = default;

private:
    std::vector<Int> weights_;
    Int degree_;
};

/// Removing any single element leaves a gcd-1 set.
bool is_well_formed_set(std::span<const Int> values);
/// Ambient-space well-formedness of the weights.
bool is_well_formed(const WeightSystem& w);

/// Complete, deduplicated, lexicographically sorted list of the exponent
/// vectors of weighted degree equal to the family degree.
struct MonomialBasis {
    WeightSystem family;
    std::vector<ExponentVector> monomials;
};

/// All exponent vectors e with sum(weights[i] * e[i]) == degree, sorted
/// lexicographically. degree must be non-negative and small enough for the
/// reachability tables (throws std::domain_error beyond the guard).
std::vector<ExponentVector> enumerate_monomials(std::span<const Int> weights, const Int& degree);
MonomialBasis enumerate_monomials(const WeightSystem& w);

/// Number of monomials of the given weighted degree (dynamic programming;
/// agrees with enumerate_monomials by construction).
Int count_monomials(std::span<const Int> weights, const Int& degree);

/// d < 2*max(weights), or d == 2*max with at least two maximal weights.
bool degree_criterion(const WeightSystem& w);

/// sum of weights > degree.
bool is_fano(const WeightSystem& w);

/// Dimension of the automorphism group of the ambient space:
/// sum_i count_monomials(weights, a_i) - 1.
Int dim_aut(const WeightSystem& w);

/// (count_monomials(weights, d) - 1) - dim_aut(w). Heuristic lower bound for
/// the moduli count of the family; may be negative and is reported as-is.
Int moduli_lower_bound(const WeightSystem& w);

} // namespace wph
