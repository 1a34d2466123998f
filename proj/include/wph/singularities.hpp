#pragma once

// Cyclic quotient singularity classification: the fractional-part criterion
// deciding canonical/terminal, the exponent-only sufficient test for loop
// hypersurfaces with its exact piecewise-linear minimization, and the
// stratum-by-stratum analysis of a quasismooth family.

#include "wph/delsarte.hpp"
#include "wph/exact.hpp"
#include "wph/weights.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wph {

/// Quotient germ of type (1/r)(c_1, ..., c_s); residues stored in [0, r).
struct CyclicQuotientType {
    Int r;
    std::vector<Int> residues;

    CyclicQuotientType(Int r, std::vector<Int> c);

    /// Same type with residues divisible by r removed (they contribute 0
    /// and mark non-isolated directions).
    CyclicQuotientType without_zero_residues() const;
};

enum class SingularityClass { Canonical, Terminal };

/// True iff sum_j [(i c_j)/r] >= 1 (canonical) resp. > 1 (terminal) for
/// every i = 1, ..., r-1. Smooth points (r = 1) pass.
bool reid_tai(const CyclicQuotientType& t, SingularityClass mode);

/// First i failing the inequality, or nullopt when the test passes.
std::optional<Int> reid_tai_failure(const CyclicQuotientType& t, SingularityClass mode);

/// beta_j = 1 - b_{j-1} + b_{j-1}b_{j-2} - ... for j = 2..n+1, computed on
/// the exponent sequence rotated to start at the given index.
struct LoopBetas {
    std::vector<Int> values;
};
LoopBetas loop_betas(const LoopType& t, std::size_t rotation);

/// Quotient type (1/a_k)(beta_2, ..., beta_{n+1}) at each coordinate point,
/// one per rotation k.
std::vector<CyclicQuotientType> loop_coordinate_types(const LoopType& t,
                                                      const DelsarteDerivation& derivation);

/// f(x) = sum_j [beta_j x] evaluated exactly at a rational point.
Rat frac_sum_at(std::span<const Int> betas, const Rat& x);

/// Exact infimum of f over the open interval (0,1), by breakpoint analysis:
/// f is linear of slope sum(beta_j) between consecutive points k/|beta_j|.
/// `attained` records whether some x in (0,1) achieves the infimum.
struct PiecewiseInfimum {
    Rat infimum;
    bool attained;
};
PiecewiseInfimum eqII_min(std::span<const Int> betas);

/// Breakpoints of f in (0,1), sorted ascending. Used by eqII_min and by the
/// CSV export that re-plots the profile.
std::vector<Rat> frac_sum_breakpoints(std::span<const Int> betas);
Rat frac_sum_left_limit(std::span<const Int> betas, const Rat& x);
Rat frac_sum_right_limit(std::span<const Int> betas, const Rat& x);

/// Pointwise threshold semantics of the loop criterion: canonical requires
/// f >= 1 on all of (0,1), terminal requires f > 1 at every actual point.
bool eqII_meets(const PiecewiseInfimum& result, SingularityClass mode);

/// Sufficient test: every cyclic rotation's beta list (optionally truncated
/// to `prefix` terms, which is conservative) meets the threshold on (0,1).
/// A false answer decides nothing.
bool eqII_sufficient(const LoopType& t, SingularityClass mode,
                     std::optional<std::size_t> prefix = std::nullopt);

/// Singular stratum of the ambient space met by the family: the variable
/// subset S with r = gcd(weights in S) > 1, whether the family contains the
/// stratum, the transverse quotient type (complement weights mod r), and the
/// eliminated linear direction when one was used.
struct StratumReport {
    std::vector<std::size_t> stratum;
    Int r;
    bool contained_in_x;
    CyclicQuotientType transverse;
    std::optional<std::size_t> eliminated;
};

/// Raised when no monomial certifies quasismoothness along a stratum.
struct NotQuasismoothError : std::runtime_error {
    std::vector<std::size_t> stratum;
    explicit NotQuasismoothError(std::vector<std::size_t> s);
};

/// One report per subset with gcd > 1; assumes the family is quasismooth
/// (caller-asserted) and throws NotQuasismoothError when that is impossible.
std::vector<StratumReport> strata_singularities(const WeightSystem& w, const MonomialBasis& basis);

enum class Answer { No, Yes, Undecided };

struct SingularityWitness {
    SingularityClass level;
    std::vector<std::size_t> stratum;
    CyclicQuotientType type;
    Int failing_index;
};

/// Aggregated classification. klt holds unconditionally for quotient
/// singularities in characteristic 0; Undecided appears only when a stratum
/// order exceeds the configured cap.
struct SingularityVerdict {
    bool klt = true;
    Answer canonical = Answer::Yes;
    Answer terminal = Answer::Yes;
    std::vector<SingularityWitness> witnesses;
    std::vector<StratumReport> strata;
};

struct ClassifyOptions {
    Int reid_tai_cap = 1000000;
};

SingularityVerdict classify_hypersurface(const WeightSystem& w, const MonomialBasis& basis,
                                         const ClassifyOptions& options = {});

} // namespace wph
