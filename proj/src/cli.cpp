#include "wph/cli.hpp"

#include "wph/delsarte.hpp"
#include "wph/equation.hpp"
#include "wph/exact.hpp"
#include "wph/rationality.hpp"
#include "wph/report.hpp"
#include "wph/search.hpp"
#include "wph/singularities.hpp"
#include "wph/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace wph::cli {

namespace {

using nlohmann::json;

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos)
            throw std::invalid_argument("empty entry in list '" + text + "'");
        out.emplace_back(item.substr(begin, end - begin + 1));
    }
    if (out.empty())
        throw std::invalid_argument("empty list");
    return out;
}

struct FieldSpec {
    AssumptionFlags assumptions;
};

FieldSpec parse_field(const std::string& text) {
    FieldSpec spec;
    if (text.empty() || text == "closed")
        return spec;
    if (text.rfind("char=", 0) == 0) {
        spec.assumptions.algebraically_closed = false;
        spec.assumptions.characteristic = Int(text.substr(5));
        if (spec.assumptions.characteristic < 0)
            throw std::invalid_argument("characteristic must be non-negative");
        return spec;
    }
    throw std::invalid_argument("--field expects 'closed' or 'char=P'");
}

SingularityClass parse_mode(const std::string& text) {
    if (text == "canonical")
        return SingularityClass::Canonical;
    if (text == "terminal")
        return SingularityClass::Terminal;
    throw std::invalid_argument("--mode expects 'canonical' or 'terminal'");
}

std::string monomial_string(const ExponentVector& e) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0)
            continue;
        if (!first)
            out << '*';
        out << 'x' << j;
        if (e[j] != 1)
            out << '^' << e[j];
        first = false;
    }
    if (first)
        out << '1';
    return out.str();
}

std::string answer_string(Answer a) {
    switch (a) {
    case Answer::Yes: return "true";
    case Answer::No: return "false";
    default: return "undecided";
    }
}

void print_family_report(std::ostream& out, const FamilyReport& report) {
    const WeightSystem& w = report.family;
    out << "family: P(";
    for (std::size_t i = 0; i < w.weights().size(); ++i)
        out << (i ? "," : "") << w.weights()[i];
    out << ") degree " << w.degree() << "  (dimension " << w.dimension() << ")\n";
    out << "ambient well-formed: " << (report.ambient_well_formed ? "true" : "false") << "\n";
    out << "fano: " << (report.fano ? "true" : "false") << "\n";
    out << "degree criterion: " << (report.degree_criterion ? "true" : "false") << "\n";
    out << "monomials of family degree: " << report.monomial_count << "\n";
    out << "dim Aut(P): " << report.dim_aut << "\n";
    out << "moduli lower bound (heuristic): " << report.moduli_lower_bound << "\n";
    out << "quasismooth: "
        << (report.quasismooth == QuasismoothStatus::Certified ? "certified" : "assumed") << "\n";
    out << "klt: " << (report.singularities.klt ? "true" : "false")
        << "  canonical: " << answer_string(report.singularities.canonical)
        << "  terminal: " << answer_string(report.singularities.terminal) << "\n";
    if (report.certificates.empty()) {
        out << "rationality certificates: none\n";
    } else {
        out << "rationality certificates:\n";
        for (const RationalityCertificate& cert : report.certificates) {
            out << "  - " << certificate_name(cert.kind);
            if (const auto* qb = std::get_if<QuadricBundleCert>(&cert.kind)) {
                out << " subset {";
                for (std::size_t i = 0; i < qb->subset.size(); ++i)
                    out << (i ? "," : "") << qb->subset[i];
                out << "}";
            } else if (const auto* tw = std::get_if<TwoWeightCert>(&cert.kind)) {
                out << " a=" << tw->a << " c=" << tw->c << " k=" << tw->k << " l=" << tw->l;
            } else if (const auto* dd = std::get_if<DelsarteDetCert>(&cert.kind)) {
                out << " d=" << dd->degree << " |det|=" << dd->det_abs;
            } else if (const auto* lc = std::get_if<LinearConeCert>(&cert.kind)) {
                out << " variable x" << lc->variable;
            } else if (const auto* ld = std::get_if<LowDegreeCert>(&cert.kind)) {
                out << " case " << ld->case_number;
            }
            if (!cert.family_level)
                out << " (subfamily only)";
            out << "\n";
        }
    }
    out << "rational (family level): " << (report.rational_certified ? "true" : "false") << "\n";
    out << "rational+terminal+fano beyond degree criterion: "
        << (report.rational_beyond_degree_bound ? "true" : "false") << "\n";
}

json analyze_family(const WeightSystem& w, const std::optional<DelsarteMatrix>& matrix,
                    const CertifyOptions& options, std::ostream& out, bool as_json,
                    json input_echo) {
    const MonomialBasis basis = enumerate_monomials(w);
    try {
        const FamilyReport report = certify(w, basis, matrix, options);
        if (as_json) {
            out << report_document(std::move(input_echo), to_json(report)).dump(2) << "\n";
        } else {
            print_family_report(out, report);
        }
    } catch (const NotQuasismoothError& error) {
        json payload{{"notQuasismooth", true}, {"stratum", error.stratum},
                     {"message", error.what()}};
        if (as_json)
            out << report_document(std::move(input_echo), std::move(payload)).dump(2) << "\n";
        else
            out << error.what() << "\n";
    }
    return json{};
}

json derivation_report(const DelsarteMatrix& matrix) {
    const DelsarteDerivation derivation = derive_weights(matrix);
    const Int determinant = det(matrix.exponents);
    const LatticeOrder order = lattice_order_check(matrix);
    json doc = to_json(derivation);
    doc["determinant"] = to_json(determinant);
    doc["absDeterminant"] = to_json(Int(abs(determinant)));
    doc["delsarteRational"] = derivation.degree == abs(determinant);
    doc["latticeOrder"] = json{{"group", to_json(order.group_order)},
                               {"vector", to_json(order.vector_order)}};
    doc["weightsWellFormed"] = is_well_formed_set(derivation.weights);
    if (matrix.coefficients) {
        json coeffs = json::array();
        for (const Rat& c : *matrix.coefficients)
            coeffs.push_back(to_json(c));
        doc["coefficients"] = std::move(coeffs);
    }
    return doc;
}

void print_derivation(std::ostream& out, const json& doc) {
    out << "weights:";
    for (const auto& a : doc["weights"])
        out << " " << a.get<std::string>();
    out << "\ndegree: " << doc["degree"].get<std::string>() << "\n";
    out << "q:";
    for (const auto& q : doc["q"])
        out << " " << q.get<std::string>();
    out << "\ndeterminant: " << doc["determinant"].get<std::string>() << "\n";
    out << "delsarte rational (d = |det|): "
        << (doc["delsarteRational"].get<bool>() ? "true" : "false") << "\n";
    out << "lattice order: group " << doc["latticeOrder"]["group"].get<std::string>()
        << ", vector " << doc["latticeOrder"]["vector"].get<std::string>() << "\n";
    out << "derived weights well-formed: "
        << (doc["weightsWellFormed"].get<bool>() ? "true" : "false") << "\n";
}

DelsarteMatrix matrix_from_file(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw std::invalid_argument("cannot open matrix file '" + path + "'");
    json doc = json::parse(file);
    json rows = doc.is_object() ? doc.at("matrix") : doc;
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("matrix file must hold a non-empty array of rows");
    const std::size_t n = rows.size();
    IntMatrix b(n, rows.front().size());
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != b.cols())
            throw std::invalid_argument("matrix rows must have equal length");
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const json& cell = row.at(j);
            b.at(i, j) = cell.is_string() ? Int(cell.get<std::string>())
                                          : Int(static_cast<long>(cell.get<long long>()));
        }
    }
    std::optional<std::vector<Rat>> coefficients;
    if (doc.is_object() && doc.contains("coefficients")) {
        coefficients.emplace();
        for (const json& cell : doc.at("coefficients")) {
            Rat value(cell.get<std::string>());
            value.canonicalize();
            coefficients->push_back(value);
        }
    }
    return DelsarteMatrix(std::move(b), std::move(coefficients));
}

LoopType loop_type_from_flag(const std::string& text) {
    return LoopType(parse_int_list(text));
}

QuasismoothStatus loop_quasismooth_status(const LoopType& type, const AssumptionFlags& field) {
    for (const Int& b : type.exponents)
        if (b < 2)
            return QuasismoothStatus::Assumed;
    if (field.characteristic == 0)
        return QuasismoothStatus::Certified;
    const Int obstruction = loop_quasismooth_obstruction(type);
    return obstruction % field.characteristic == 0 ? QuasismoothStatus::Assumed
                                                   : QuasismoothStatus::Certified;
}

int run_loop_report(const LoopType& type, const FieldSpec& field, bool as_json,
                    std::ostream& out, json input_echo) {
    const DelsarteMatrix matrix = loop_matrix(type);
    const DelsarteDerivation derivation = derive_weights(matrix);
    const WeightSystem w = derivation.weight_system();
    const MonomialBasis basis = enumerate_monomials(w);

    CertifyOptions options;
    options.assumptions = field.assumptions;
    options.quasismooth = loop_quasismooth_status(type, field.assumptions);
    const FamilyReport report = certify(w, basis, matrix, options);

    const Int obstruction = loop_quasismooth_obstruction(type);
    const bool eqii_terminal = eqII_sufficient(type, SingularityClass::Terminal);
    const bool eqii_canonical = eqII_sufficient(type, SingularityClass::Canonical);

    if (as_json) {
        json doc = to_json(report);
        doc["loopType"] = [&] {
            json arr = json::array();
            for (const Int& b : type.exponents)
                arr.push_back(to_json(b));
            return arr;
        }();
        doc["derivation"] = derivation_report(matrix);
        doc["quasismoothObstruction"] = to_json(obstruction);
        doc["exponentCriterion"] =
            json{{"terminal", eqii_terminal}, {"canonical", eqii_canonical}};
        out << report_document(std::move(input_echo), std::move(doc)).dump(2) << "\n";
    } else {
        out << "loop type [";
        for (std::size_t i = 0; i < type.size(); ++i)
            out << (i ? "," : "") << type.exponents[i];
        out << "]\n";
        print_family_report(out, report);
        out << "quasismoothness obstruction (bad characteristics divide): " << obstruction << "\n";
        out << "exponent criterion sufficient for terminal: "
            << (eqii_terminal ? "true" : "false") << ", canonical: "
            << (eqii_canonical ? "true" : "false") << "\n";
    }
    return 0;
}

json echo(const std::vector<std::string>& args) {
    json arr = json::array();
    for (const std::string& a : args)
        arr.push_back(a);
    return json{{"argv", std::move(arr)}};
}

std::set<SearchFilter> parse_filters(const std::string& text) {
    std::set<SearchFilter> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::string key;
        for (char c : item)
            if (c != ' ' && c != '_' && c != '-')
                key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (key == "wellformed") out.insert(SearchFilter::WellFormed);
        else if (key == "fano") out.insert(SearchFilter::Fano);
        else if (key == "failsdegreecriterion") out.insert(SearchFilter::FailsDegreeCriterion);
        else if (key == "klt") out.insert(SearchFilter::Klt);
        else if (key == "canonical") out.insert(SearchFilter::Canonical);
        else if (key == "terminal") out.insert(SearchFilter::Terminal);
        else if (key == "rational") out.insert(SearchFilter::Rational);
        else if (!key.empty())
            throw std::invalid_argument("unknown filter '" + item + "'");
    }
    return out;
}

std::string candidate_label(const SearchHit& hit) {
    std::ostringstream out;
    if (const LoopType* loop = std::get_if<LoopType>(&hit.candidate)) {
        out << "loop [";
        for (std::size_t i = 0; i < loop->size(); ++i)
            out << (i ? "," : "") << loop->exponents[i];
        out << "]";
    } else {
        const TwoWeightParams& p = std::get<TwoWeightParams>(hit.candidate);
        out << "two-weight (a=" << p.a << ",c=" << p.c << ",k=" << p.k << ",l=" << p.l << ")";
    }
    return out.str();
}

void print_search_table(std::ostream& out, const SearchResult& result) {
    for (const SearchHit& hit : result.hits) {
        const WeightSystem& w = hit.report.family;
        out << candidate_label(hit) << "  P(";
        for (std::size_t i = 0; i < w.weights().size(); ++i)
            out << (i ? "," : "") << w.weights()[i];
        out << ") d=" << w.degree() << "  n=" << w.dimension()
            << "  terminal=" << answer_string(hit.report.singularities.terminal)
            << " rational=" << (hit.report.rational_certified ? "true" : "false") << "\n";
    }
    out << "hits: " << result.hits.size() << " (processed " << result.candidates_processed
        << " of " << result.candidates_total << " candidates";
    if (result.undecided)
        out << ", " << result.undecided << " undecided";
    if (result.truncated)
        out << ", stopped at limit";
    out << ")\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for families of weighted projective hypersurfaces"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Full report for a weight system and degree");
    std::string an_weights, an_degree, an_field = "closed";
    bool an_json = false;
    analyze->add_option("--weights", an_weights, "Comma-separated weights")->required();
    analyze->add_option("--degree", an_degree, "Family degree")->required();
    analyze->add_option("--field", an_field, "Base field: closed (default) or char=P");
    analyze->add_flag("--json", an_json, "Emit JSON");

    // delsarte
    auto* delsarte = app.add_subcommand("delsarte", "Derive weights/degree from a square monomial system");
    std::string de_equation, de_matrix;
    bool de_json = false;
    delsarte->add_option("--equation", de_equation, "Equation text, e.g. 'x0^2*x1 + x1^2*x2 + x2^3*x0'");
    delsarte->add_option("--matrix", de_matrix, "JSON file with the exponent matrix");
    delsarte->add_flag("--json", de_json, "Emit JSON");

    // loop
    auto* loop = app.add_subcommand("loop", "Analyze the family of a loop equation");
    std::string lo_type, lo_field = "closed";
    bool lo_json = false;
    loop->add_option("--type", lo_type, "Comma-separated loop exponents")->required();
    loop->add_option("--field", lo_field, "Base field: closed (default) or char=P");
    loop->add_flag("--json", lo_json, "Emit JSON");

    // main-family
    auto* mainfam = app.add_subcommand("main-family", "Loop family [2,...,2,3] in a given dimension");
    std::size_t mf_dim = 0;
    std::string mf_field = "closed";
    bool mf_json = false;
    mainfam->add_option("--dim", mf_dim, "Dimension n")->required();
    mainfam->add_option("--field", mf_field, "Base field: closed (default) or char=P");
    mainfam->add_flag("--json", mf_json, "Emit JSON");

    // reid-tai
    auto* reidtai = app.add_subcommand("reid-tai", "Test a cyclic quotient singularity type");
    std::string rt_r, rt_type, rt_mode = "terminal";
    reidtai->add_option("--r", rt_r, "Order of the quotient")->required();
    reidtai->add_option("--type", rt_type, "Comma-separated residues")->required();
    reidtai->add_option("--mode", rt_mode, "canonical or terminal");

    // monomials
    auto* monomials = app.add_subcommand("monomials", "Monomials of a weighted degree");
    std::string mo_weights, mo_degree;
    bool mo_count = false, mo_json = false;
    monomials->add_option("--weights", mo_weights, "Comma-separated weights")->required();
    monomials->add_option("--degree", mo_degree, "Target degree")->required();
    monomials->add_flag("--count-only", mo_count, "Print only the count");
    monomials->add_flag("--json", mo_json, "Emit JSON");

    // eqii
    auto* eqii = app.add_subcommand("eqii", "Exponent-only sufficient singularity test for loops");
    std::string eq_type, eq_mode = "terminal";
    std::size_t eq_prefix = 0;
    bool eq_json = false;
    eqii->add_option("--type", eq_type, "Comma-separated loop exponents")->required();
    eqii->add_option("--prefix", eq_prefix, "Truncate each beta sequence to this many terms");
    eqii->add_option("--mode", eq_mode, "canonical or terminal");
    eqii->add_flag("--json", eq_json, "Emit JSON");

    // figure
    auto* figure = app.add_subcommand("figure", "CSV profile of sum_j [beta_j x] on (0,1)");
    std::string fg_betas, fg_out;
    figure->add_option("--betas", fg_betas, "Comma-separated beta values")->required();
    figure->add_option("--out", fg_out, "Output CSV path (stdout when omitted)");

    // diag-aut
    auto* diagaut = app.add_subcommand("diag-aut", "Diagonal symmetry group of an equation's monomials");
    std::string da_equation, da_weights, da_degree;
    bool da_json = false;
    diagaut->add_option("--equation", da_equation, "Equation text")->required();
    diagaut->add_option("--weights", da_weights, "Weights (derived from the equation when omitted)");
    diagaut->add_option("--degree", da_degree, "Degree (derived from the equation when omitted)");
    diagaut->add_flag("--json", da_json, "Emit JSON");

    // search
    auto* search = app.add_subcommand("search", "Enumerate and filter candidate families");
    std::string se_kind, se_require, se_max_exponent = "3", se_max_weight = "6";
    std::size_t se_min_dim = 3, se_max_dim = 3, se_max_mult = 8, se_limit = 0;
    unsigned se_workers = 0;
    bool se_jsonl = false;
    search->add_option("kind", se_kind, "loops or two-weight")->required();
    search->add_option("--min-dim", se_min_dim, "Minimum dimension");
    search->add_option("--max-dim", se_max_dim, "Maximum dimension");
    search->add_option("--max-exponent", se_max_exponent, "Loop exponent bound (loops)");
    search->add_option("--max-weight", se_max_weight, "Weight bound (two-weight)");
    search->add_option("--max-multiplicity", se_max_mult, "Multiplicity bound (two-weight)");
    search->add_option("--require", se_require,
                       "Comma-separated filters: well-formed, fano, fails-degree-criterion, "
                       "klt, canonical, terminal, rational");
    search->add_option("--workers", se_workers, "Worker threads (0 = hardware)");
    search->add_option("--limit", se_limit, "Stop after this many hits");
    search->add_flag("--jsonl", se_jsonl, "One JSON hit per line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& error) {
        err << "error: " << error.what() << "\n";
        return 2;
    }

    try {
        if (*analyze) {
            const FieldSpec field = parse_field(an_field);
            WeightSystem w(parse_int_list(an_weights), Int(an_degree));
            CertifyOptions options;
            options.assumptions = field.assumptions;
            analyze_family(w, std::nullopt, options, out, an_json, echo(args));
            return 0;
        }
        if (*delsarte) {
            if (de_equation.empty() == de_matrix.empty())
                throw std::invalid_argument("provide exactly one of --equation or --matrix");
            const DelsarteMatrix matrix = de_equation.empty()
                                              ? matrix_from_file(de_matrix)
                                              : to_delsarte_matrix(parse_equation(de_equation));
            json doc = derivation_report(matrix);
            if (de_json)
                out << report_document(echo(args), std::move(doc)).dump(2) << "\n";
            else
                print_derivation(out, doc);
            return 0;
        }
        if (*loop)
            return run_loop_report(loop_type_from_flag(lo_type), parse_field(lo_field), lo_json,
                                   out, echo(args));
        if (*mainfam) {
            if (mf_dim < 1)
                throw std::invalid_argument("--dim must be at least 1");
            std::vector<Int> exponents(mf_dim + 2, Int(2));
            exponents.back() = 3;
            return run_loop_report(LoopType(std::move(exponents)), parse_field(mf_field), mf_json,
                                   out, echo(args));
        }
        if (*reidtai) {
            const CyclicQuotientType type(Int(rt_r), parse_int_list(rt_type));
            const bool result = reid_tai(type, parse_mode(rt_mode));
            out << (result ? "true" : "false") << "\n";
            return result ? 0 : 1;
        }
        if (*monomials) {
            const std::vector<Int> weights = parse_int_list(mo_weights);
            const Int degree(mo_degree);
            if (mo_count) {
                out << count_monomials(weights, degree) << "\n";
                return 0;
            }
            const auto list = enumerate_monomials(weights, degree);
            if (mo_json) {
                json arr = json::array();
                for (const ExponentVector& e : list)
                    arr.push_back(e);
                out << report_document(echo(args),
                                       json{{"count", list.size()}, {"monomials", std::move(arr)}})
                           .dump(2)
                    << "\n";
            } else {
                for (const ExponentVector& e : list)
                    out << monomial_string(e) << "\n";
                out << "count: " << list.size() << "\n";
            }
            return 0;
        }
        if (*eqii) {
            const LoopType type = loop_type_from_flag(eq_type);
            const SingularityClass mode = parse_mode(eq_mode);
            std::optional<std::size_t> prefix;
            if (eq_prefix > 0)
                prefix = eq_prefix;
            json rotations = json::array();
            bool all_pass = true;
            for (std::size_t rot = 0; rot < type.size(); ++rot) {
                std::vector<Int> betas = loop_betas(type, rot).values;
                if (prefix && *prefix < betas.size())
                    betas.resize(*prefix);
                const PiecewiseInfimum inf = eqII_min(betas);
                const bool pass = eqII_meets(inf, mode);
                all_pass = all_pass && pass;
                rotations.push_back(json{{"rotation", rot},
                                         {"betas", [&] {
                                              json arr = json::array();
                                              for (const Int& b : betas)
                                                  arr.push_back(to_json(b));
                                              return arr;
                                          }()},
                                         {"infimum", to_json(inf.infimum)},
                                         {"attained", inf.attained},
                                         {"passes", pass}});
            }
            if (eq_json) {
                out << report_document(echo(args),
                                       json{{"sufficient", all_pass}, {"rotations", std::move(rotations)}})
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& row : rotations)
                    out << "rotation " << row["rotation"] << ": inf "
                        << row["infimum"].get<std::string>()
                        << (row["attained"].get<bool>() ? " (attained)" : " (limit)") << " -> "
                        << (row["passes"].get<bool>() ? "pass" : "fail") << "\n";
                out << "sufficient: " << (all_pass ? "true" : "false") << "\n";
            }
            return all_pass ? 0 : 1;
        }
        if (*figure) {
            const std::vector<Int> betas = parse_int_list(fg_betas);
            const std::vector<Rat> points = frac_sum_breakpoints(betas);
            std::vector<std::pair<Rat, std::string>> rows;
            Rat previous(0);
            for (const Rat& p : points) {
                Rat mid = (previous + p) / 2;
                rows.emplace_back(mid, "midpoint");
                rows.emplace_back(p, "breakpoint");
                previous = p;
            }
            rows.emplace_back((previous + 1) / 2, "midpoint");
            std::ostringstream csv;
            csv << "kind,x,x_approx,f,f_approx\n";
            for (const auto& [x, kind] : rows) {
                const Rat fx = frac_sum_at(betas, x);
                csv << kind << "," << x << "," << x.get_d() << "," << fx << "," << fx.get_d()
                    << "\n";
            }
            if (fg_out.empty()) {
                out << csv.str();
            } else {
                std::ofstream file(fg_out);
                if (!file)
                    throw std::invalid_argument("cannot open output file '" + fg_out + "'");
                file << csv.str();
            }
            return 0;
        }
        if (*diagaut) {
            const Equation equation = parse_equation(da_equation);
            if (da_weights.empty() != da_degree.empty())
                throw std::invalid_argument("provide --weights and --degree together");
            WeightSystem w = [&] {
                if (!da_weights.empty())
                    return WeightSystem(parse_int_list(da_weights), Int(da_degree));
                // derive from the first square block of monomials
                if (equation.terms.size() < equation.variable_count)
                    throw std::invalid_argument(
                        "equation has fewer monomials than variables; pass --weights/--degree");
                IntMatrix b(equation.variable_count, equation.variable_count);
                for (std::size_t i = 0; i < equation.variable_count; ++i)
                    for (std::size_t j = 0; j < equation.variable_count; ++j)
                        b.at(i, j) = static_cast<long>(equation.terms[i].exponents[j]);
                return derive_weights(DelsarteMatrix(std::move(b))).weight_system();
            }();
            // every monomial must be weighted-homogeneous of one degree
            for (const EquationTerm& term : equation.terms)
                if (weighted_degree(w.weights(), term.exponents) != w.degree())
                    throw std::invalid_argument("equation is not weighted-homogeneous of degree " +
                                                w.degree().get_str());
            const DiagonalAutGroup group = diagonal_aut(equation_monomials(equation), w);
            if (da_json) {
                json doc = to_json(group);
                doc["family"] = to_json(w);
                out << report_document(echo(args), std::move(doc)).dump(2) << "\n";
            } else {
                if (group.trivial()) {
                    out << "diagonal symmetry group: trivial\n";
                } else {
                    out << "diagonal symmetry group: ";
                    for (std::size_t i = 0; i < group.invariant_factors.size(); ++i)
                        out << (i ? " x " : "") << "Z/" << group.invariant_factors[i];
                    out << " (order " << group.order() << ")\n";
                    for (const DiagonalAutGenerator& g : group.generators) {
                        out << "generator (order " << g.order << "): (";
                        for (std::size_t j = 0; j < g.action.size(); ++j)
                            out << (j ? "," : "") << g.action[j];
                        out << "), scales equation by " << g.scalar << "\n";
                    }
                }
            }
            return 0;
        }
        if (*search) {
            SearchSpec spec;
            if (se_kind == "loops")
                spec.kind = FamilyKind::Loop;
            else if (se_kind == "two-weight")
                spec.kind = FamilyKind::TwoWeight;
            else
                throw std::invalid_argument("search kind must be 'loops' or 'two-weight'");
            spec.min_dimension = se_min_dim;
            spec.max_dimension = se_max_dim;
            spec.max_exponent = Int(se_max_exponent);
            spec.max_weight = Int(se_max_weight);
            spec.max_multiplicity = se_max_mult;
            spec.require = parse_filters(se_require);
            spec.workers = se_workers;
            if (se_limit > 0)
                spec.limit = se_limit;
            const SearchResult result = run_search(spec);
            if (se_jsonl) {
                for (const SearchHit& hit : result.hits)
                    out << to_json(hit).dump() << "\n";
                err << "hits: " << result.hits.size() << " (processed "
                    << result.candidates_processed << " of " << result.candidates_total
                    << " candidates)\n";
            } else {
                print_search_table(out, result);
            }
            return 0;
        }
    } catch (const EquationParseError& error) {
        err << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& error) {
        err << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::domain_error& error) {
        err << "error: " << error.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace wph::cli
