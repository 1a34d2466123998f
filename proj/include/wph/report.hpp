#pragma once

// JSON views of the analysis results. Integer values that may exceed 64 bits
// are rendered as decimal strings; structural indices stay plain numbers.

#include "wph/delsarte.hpp"
#include "wph/rationality.hpp"
#include "wph/search.hpp"
#include "wph/singularities.hpp"

#include <json.hpp>

namespace wph {

nlohmann::json to_json(const Int& value);
nlohmann::json to_json(const Rat& value);
nlohmann::json to_json(const WeightSystem& w);
nlohmann::json to_json(const CyclicQuotientType& t);
nlohmann::json to_json(const StratumReport& report);
nlohmann::json to_json(const SingularityVerdict& verdict);
nlohmann::json to_json(const RationalityCertificate& cert);
nlohmann::json to_json(const DelsarteDerivation& derivation);
nlohmann::json to_json(const DiagonalAutGroup& group);
nlohmann::json to_json(const FamilyReport& report);
nlohmann::json to_json(const SearchHit& hit);
nlohmann::json to_json(const SearchResult& result);

/// Wraps a payload with tool name/version and the echoed invocation input.
nlohmann::json report_document(nlohmann::json input, nlohmann::json payload);

extern const char* const kToolName;
extern const char* const kToolVersion;

} // namespace wph
