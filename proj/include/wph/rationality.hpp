#pragma once

// Family-level rationality certificates: linear cones and the low-degree
// bound, the determinant test for square monomial systems, quadric-bundle
// variable splits, and the two-weight form. Every certificate is checked
// against the complete monomial basis of the family degree, so it applies to
// all members whose equation uses only those monomials.

#include "wph/delsarte.hpp"
#include "wph/exact.hpp"
#include "wph/singularities.hpp"
#include "wph/weights.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace wph {

/// Some defining equation contains a lone variable to the first power.
struct LinearConeCert {
    std::size_t variable;
};

/// Case 1: d < 2 * max weight. Case 2: d == 2 * max with at least two
/// maximal weights (rational point supplied by the closed-field assumption).
struct LowDegreeCert {
    int case_number;
    Int max_weight;
    std::vector<std::size_t> attaining;
};

/// The family degree d equals |det| of the square exponent matrix.
struct DelsarteDetCert {
    Int degree;
    Int det_abs;
};

/// Variable subset S with gcd 1, well-formed complement, every monomial of
/// S-degree 1 or 2, and some monomial of S-degree 1.
struct QuadricBundleCert {
    std::vector<std::size_t> subset;
};

/// Weights are c repeated k times and a repeated l times, gcd(a,c) = 1,
/// d = a*c, and the basis touches both weight blocks.
struct TwoWeightCert {
    Int a, c;
    std::size_t k, l;
};

using CertificateKind =
    std::variant<LinearConeCert, LowDegreeCert, DelsarteDetCert, QuadricBundleCert, TwoWeightCert>;

/// Hypotheses the certificates rely on but the tool does not verify.
struct AssumptionFlags {
    bool algebraically_closed = true;
    Int characteristic = 0;
    bool irreducible_assumed = true;
};

enum class QuasismoothStatus { Assumed, Certified };

struct RationalityCertificate {
    CertificateKind kind;
    AssumptionFlags assumptions;
    /// Whether the conclusion covers the very general member (true except
    /// for a determinant certificate on a proper subset of the basis).
    bool family_level = true;
};

const char* certificate_name(const CertificateKind& kind);

/// Prop-style low degree detection. Returns nothing when the ambient space
/// is not well-formed (hypothesis of the statement).
std::optional<RationalityCertificate> low_degree(const WeightSystem& w, const MonomialBasis& basis,
                                                 const AssumptionFlags& assumptions = {});

/// First qualifying subset in (size, lexicographic) order, or nothing.
std::optional<std::vector<std::size_t>> quadric_bundle_split(const WeightSystem& w,
                                                             const MonomialBasis& basis);

std::optional<RationalityCertificate> two_weight_detect(const WeightSystem& w,
                                                        const MonomialBasis& basis,
                                                        const AssumptionFlags& assumptions = {});

/// All certificates the detectors produce, without touching singularities.
std::vector<RationalityCertificate> rationality_certificates(
    const WeightSystem& w, const MonomialBasis& basis,
    const std::optional<DelsarteMatrix>& matrix = std::nullopt,
    const AssumptionFlags& assumptions = {});

struct CertifyOptions {
    AssumptionFlags assumptions;
    QuasismoothStatus quasismooth = QuasismoothStatus::Assumed;
    ClassifyOptions classify;
    /// Reuse a verdict computed elsewhere instead of re-running the
    /// stratum analysis.
    std::optional<SingularityVerdict> precomputed_verdict;
};

/// Everything the tool can say about one family.
struct FamilyReport {
    WeightSystem family;
    bool ambient_well_formed = false;
    bool fano = false;
    bool degree_criterion = false;
    Int monomial_count;
    Int dim_aut;
    Int moduli_lower_bound; // heuristic, may be negative
    SingularityVerdict singularities;
    std::vector<RationalityCertificate> certificates;
    QuasismoothStatus quasismooth = QuasismoothStatus::Assumed;
    AssumptionFlags assumptions;
    bool rational_certified = false; // some family-level certificate applies
    /// Rational, terminal, Fano, quasismooth, and outside the classical
    /// low-degree bound.
    bool rational_beyond_degree_bound = false;
};

/// Runs every detector plus the singularity classification. When a square
/// exponent matrix is supplied it must derive exactly this family; when none
/// is supplied but the basis itself is square and invertible, the
/// determinant test runs on the basis.
FamilyReport certify(const WeightSystem& w, const MonomialBasis& basis,
                     const std::optional<DelsarteMatrix>& matrix = std::nullopt,
                     const CertifyOptions& options = {});

} // namespace wph
