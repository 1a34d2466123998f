#include "wph/report.hpp"

#include <algorithm>

namespace wph {

const char* const kToolName = "wph";
const char* const kToolVersion = "0.1.0";

using nlohmann::json;

json to_json(const Int& value) {
    return value.get_str();
}

json to_json(const Rat& value) {
    return value.get_str();
}

namespace {

json int_list(const std::vector<Int>& values) {
    json out = json::array();
    for (const Int& v : values)
        out.push_back(to_json(v));
    return out;
}

json rat_list(const std::vector<Rat>& values) {
    json out = json::array();
    for (const Rat& v : values)
        out.push_back(to_json(v));
    return out;
}

json answer_json(Answer a) {
    switch (a) {
    case Answer::Yes: return true;
    case Answer::No: return false;
    default: return "undecided";
    }
}

} // namespace

json to_json(const WeightSystem& w) {
    std::vector<Int> sorted = w.weights();
    std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
    return json{{"weights", int_list(w.weights())},
                {"sortedWeights", int_list(sorted)},
                {"degree", to_json(w.degree())},
                {"dimension", w.dimension()}};
}

json to_json(const CyclicQuotientType& t) {
    return json{{"r", to_json(t.r)}, {"residues", int_list(t.residues)}};
}

json to_json(const StratumReport& report) {
    json out{{"stratum", report.stratum},
             {"r", to_json(report.r)},
             {"containedInFamily", report.contained_in_x},
             {"type", to_json(report.transverse)}};
    if (report.eliminated)
        out["eliminated"] = *report.eliminated;
    return out;
}

json to_json(const SingularityVerdict& verdict) {
    json witnesses = json::array();
    for (const SingularityWitness& w : verdict.witnesses)
        witnesses.push_back(json{
            {"level", w.level == SingularityClass::Terminal ? "terminal" : "canonical"},
            {"stratum", w.stratum},
            {"type", to_json(w.type)},
            {"failingIndex", to_json(w.failing_index)}});
    json strata = json::array();
    for (const StratumReport& s : verdict.strata)
        strata.push_back(to_json(s));
    return json{{"klt", verdict.klt},
                {"canonical", answer_json(verdict.canonical)},
                {"terminal", answer_json(verdict.terminal)},
                {"witnesses", std::move(witnesses)},
                {"strata", std::move(strata)}};
}

json to_json(const RationalityCertificate& cert) {
    json out{{"kind", certificate_name(cert.kind)}, {"familyLevel", cert.family_level}};
    struct Visitor {
        json& out;
        void operator()(const LinearConeCert& c) const { out["variable"] = c.variable; }
        void operator()(const LowDegreeCert& c) const {
            out["case"] = c.case_number;
            out["maxWeight"] = to_json(c.max_weight);
            out["attaining"] = c.attaining;
        }
        void operator()(const DelsarteDetCert& c) const {
            out["degree"] = to_json(c.degree);
            out["absDeterminant"] = to_json(c.det_abs);
        }
        void operator()(const QuadricBundleCert& c) const { out["subset"] = c.subset; }
        void operator()(const TwoWeightCert& c) const {
            out["a"] = to_json(c.a);
            out["c"] = to_json(c.c);
            out["k"] = c.k;
            out["l"] = c.l;
        }
    };
    std::visit(Visitor{out}, cert.kind);
    out["assumptions"] = json{{"algebraicallyClosed", cert.assumptions.algebraically_closed},
                              {"characteristic", to_json(cert.assumptions.characteristic)},
                              {"irreducibleAssumed", cert.assumptions.irreducible_assumed}};
    return out;
}

json to_json(const DelsarteDerivation& derivation) {
    return json{{"q", rat_list(derivation.q)},
                {"degree", to_json(derivation.degree)},
                {"weights", int_list(derivation.weights)}};
}

json to_json(const DiagonalAutGroup& group) {
    json generators = json::array();
    for (const DiagonalAutGenerator& g : group.generators)
        generators.push_back(json{{"action", rat_list(g.action)},
                                  {"scalar", to_json(g.scalar)},
                                  {"order", to_json(g.order)}});
    return json{{"invariantFactors", int_list(group.invariant_factors)},
                {"order", to_json(group.order())},
                {"trivial", group.trivial()},
                {"generators", std::move(generators)}};
}

json to_json(const FamilyReport& report) {
    json certificates = json::array();
    for (const RationalityCertificate& cert : report.certificates)
        certificates.push_back(to_json(cert));
    return json{
        {"family", to_json(report.family)},
        {"ambientWellFormed", report.ambient_well_formed},
        {"fano", report.fano},
        {"degreeCriterion", report.degree_criterion},
        {"monomialCount", to_json(report.monomial_count)},
        {"dimAut", to_json(report.dim_aut)},
        {"moduliLowerBound", json{{"value", to_json(report.moduli_lower_bound)}, {"heuristic", true}}},
        {"singularities", to_json(report.singularities)},
        {"certificates", std::move(certificates)},
        {"quasismooth", report.quasismooth == QuasismoothStatus::Certified ? "certified" : "assumed"},
        {"assumptions", json{{"algebraicallyClosed", report.assumptions.algebraically_closed},
                             {"characteristic", to_json(report.assumptions.characteristic)},
                             {"irreducibleAssumed", report.assumptions.irreducible_assumed}}},
        {"rational", report.rational_certified},
        {"rationalBeyondDegreeBound", report.rational_beyond_degree_bound}};
}

json to_json(const SearchHit& hit) {
    json out{{"index", hit.candidate_index}};
    if (const LoopType* loop = std::get_if<LoopType>(&hit.candidate)) {
        out["kind"] = "loop";
        out["loopType"] = int_list(loop->exponents);
    } else {
        const TwoWeightParams& p = std::get<TwoWeightParams>(hit.candidate);
        out["kind"] = "twoWeight";
        out["params"] = json{{"a", to_json(p.a)}, {"c", to_json(p.c)}, {"k", p.k}, {"l", p.l}};
    }
    out["report"] = to_json(hit.report);
    return out;
}

json to_json(const SearchResult& result) {
    json hits = json::array();
    for (const SearchHit& hit : result.hits)
        hits.push_back(to_json(hit));
    return json{{"hits", std::move(hits)},
                {"candidatesTotal", result.candidates_total},
                {"candidatesProcessed", result.candidates_processed},
                {"undecided", result.undecided},
                {"truncated", result.truncated}};
}

json report_document(json input, json payload) {
    return json{{"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
                {"input", std::move(input)},
                {"report", std::move(payload)}};
}

} // namespace wph
