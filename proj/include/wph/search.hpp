#pragma once

// Parallel enumeration of candidate families (loop types and two-weight
// patterns) filtered by well-formedness, Fano, the degree bound, singularity
// class, and rationality certificates. Results come back in canonical
// candidate order no matter how many workers ran.

#include "wph/delsarte.hpp"
#include "wph/rationality.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace wph {

enum class FamilyKind { Loop, TwoWeight };

enum class SearchFilter {
    WellFormed,
    Fano,
    FailsDegreeCriterion,
    Klt,
    Canonical,
    Terminal,
    Rational,
};

struct SearchSpec {
    FamilyKind kind = FamilyKind::Loop;
    std::size_t min_dimension = 3;
    std::size_t max_dimension = 3;
    /// Loop searches: exponents range over [2, max_exponent].
    Int max_exponent = 3;
    /// Two-weight searches: both weights range over [1, max_weight] and the
    /// multiplicities over [1, max_multiplicity].
    Int max_weight = 6;
    std::size_t max_multiplicity = 8;
    std::set<SearchFilter> require;
    unsigned workers = 1; // 0 = hardware concurrency
    std::optional<std::size_t> limit;
    ClassifyOptions classify;
};

struct TwoWeightParams {
    Int a, c;
    std::size_t k, l;
};

struct SearchHit {
    std::uint64_t candidate_index;
    std::variant<LoopType, TwoWeightParams> candidate;
    FamilyReport report;
};

struct SearchResult {
    std::vector<SearchHit> hits;
    std::uint64_t candidates_total = 0;
    std::uint64_t candidates_processed = 0;
    std::uint64_t undecided = 0; // candidates the classifier could not settle
    bool truncated = false;      // stopped early at the result limit
};

/// Throws std::invalid_argument on malformed specs; empty ranges simply
/// produce an empty result.
SearchResult run_search(const SearchSpec& spec);

} // namespace wph
