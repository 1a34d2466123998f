#include "wph/rationality.hpp"

#include <algorithm>

namespace wph {

const char* certificate_name(const CertificateKind& kind) {
    struct Visitor {
        const char* operator()(const LinearConeCert&) const { return "linearCone"; }
        const char* operator()(const LowDegreeCert&) const { return "lowDegree"; }
        const char* operator()(const DelsarteDetCert&) const { return "delsarteDeterminant"; }
        const char* operator()(const QuadricBundleCert&) const { return "quadricBundle"; }
        const char* operator()(const TwoWeightCert&) const { return "twoWeight"; }
    };
    return std::visit(Visitor{}, kind);
}

std::optional<RationalityCertificate> low_degree(const WeightSystem& w, const MonomialBasis& basis,
                                                 const AssumptionFlags& assumptions) {
    if (!is_well_formed(w))
        return std::nullopt;
    for (const ExponentVector& e : basis.monomials) {
        std::size_t nonzero = 0, index = 0;
        bool linear = true;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0)
                continue;
            ++nonzero;
            index = j;
            if (e[j] != 1)
                linear = false;
        }
        if (nonzero == 1 && linear)
            return RationalityCertificate{LinearConeCert{index}, assumptions, true};
    }
    const Int mx = w.max_weight();
    if (w.degree() < 2 * mx)
        return RationalityCertificate{LowDegreeCert{1, mx, {}}, assumptions, true};
    if (w.degree() == 2 * mx && assumptions.algebraically_closed) {
        std::vector<std::size_t> attaining;
        for (std::size_t i = 0; i < w.variable_count(); ++i)
            if (w.weights()[i] == mx)
                attaining.push_back(i);
        if (attaining.size() >= 2)
            return RationalityCertificate{LowDegreeCert{2, mx, std::move(attaining)}, assumptions, true};
    }
    return std::nullopt;
}

namespace {

bool quadric_subset_qualifies(const WeightSystem& w, const MonomialBasis& basis,
                              const std::vector<std::size_t>& subset) {
    std::vector<Int> inside;
    inside.reserve(subset.size());
    for (std::size_t i : subset)
        inside.push_back(w.weights()[i]);
    if (gcd_many(inside) != 1)
        return false;
    std::vector<bool> in_subset(w.variable_count(), false);
    for (std::size_t i : subset)
        in_subset[i] = true;
    std::vector<Int> complement;
    for (std::size_t i = 0; i < w.variable_count(); ++i)
        if (!in_subset[i])
            complement.push_back(w.weights()[i]);
    if (!is_well_formed_set(complement))
        return false;
    bool has_linear = false;
    for (const ExponentVector& e : basis.monomials) {
        std::int64_t deg = 0;
        for (std::size_t i : subset)
            deg += e[i];
        if (deg != 1 && deg != 2)
            return false;
        if (deg == 1)
            has_linear = true;
    }
    return has_linear;
}

} // namespace

std::optional<std::vector<std::size_t>> quadric_bundle_split(const WeightSystem& w,
                                                             const MonomialBasis& basis) {
    const std::size_t nv = w.variable_count();
    const std::size_t n = w.dimension();
    std::vector<std::size_t> subset;
    for (std::size_t size = 2; size <= n; ++size) {
        subset.assign(size, 0);
        // combinations of {0..nv-1} in lexicographic order
        for (std::size_t i = 0; i < size; ++i)
            subset[i] = i;
        for (;;) {
            if (quadric_subset_qualifies(w, basis, subset))
                return subset;
            std::size_t i = size;
            while (i-- > 0) {
                if (subset[i] + (size - i) < nv) {
                    ++subset[i];
                    for (std::size_t j = i + 1; j < size; ++j)
                        subset[j] = subset[j - 1] + 1;
                    break;
                }
                if (i == 0)
                    goto next_size;
            }
        }
    next_size:;
    }
    return std::nullopt;
}

std::optional<RationalityCertificate> two_weight_detect(const WeightSystem& w,
                                                        const MonomialBasis& basis,
                                                        const AssumptionFlags& assumptions) {
    Int small = w.weights()[0], large = w.weights()[0];
    for (const Int& x : w.weights()) {
        if (x < small) small = x;
        if (x > large) large = x;
    }
    if (small == large)
        return std::nullopt;
    std::size_t k = 0, l = 0;
    for (const Int& x : w.weights()) {
        if (x == large)
            ++k;
        else if (x == small)
            ++l;
        else
            return std::nullopt; // more than two distinct weights
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), small.get_mpz_t(), large.get_mpz_t());
    if (g != 1 || w.degree() != small * large)
        return std::nullopt;
    bool touches_large = false, touches_small = false;
    for (const ExponentVector& e : basis.monomials)
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0)
                (w.weights()[j] == large ? touches_large : touches_small) = true;
    if (!touches_large || !touches_small)
        return std::nullopt;
    return RationalityCertificate{TwoWeightCert{small, large, k, l}, assumptions, true};
}

namespace {

std::vector<ExponentVector> sorted_rows(const DelsarteMatrix& m) {
    std::vector<ExponentVector> rows;
    rows.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        rows.push_back(m.row(i));
    std::sort(rows.begin(), rows.end());
    return rows;
}

} // namespace

std::vector<RationalityCertificate> rationality_certificates(const WeightSystem& w,
                                                             const MonomialBasis& basis,
                                                             const std::optional<DelsarteMatrix>& matrix,
                                                             const AssumptionFlags& assumptions) {
    std::vector<RationalityCertificate> certificates;
    if (auto cert = low_degree(w, basis, assumptions))
        certificates.push_back(std::move(*cert));

    std::optional<DelsarteMatrix> square = matrix;
    if (!square && basis.monomials.size() == w.variable_count()) {
        IntMatrix b(basis.monomials.size(), w.variable_count());
        for (std::size_t i = 0; i < basis.monomials.size(); ++i)
            for (std::size_t j = 0; j < w.variable_count(); ++j)
                b.at(i, j) = static_cast<long>(basis.monomials[i][j]);
        if (det(b) != 0)
            square.emplace(std::move(b));
    }
    if (square) {
        const DelsarteDerivation derivation = derive_weights(*square);
        if (derivation.weights != w.weights() || derivation.degree != w.degree())
            throw std::invalid_argument("exponent matrix does not derive this family");
        Int d = det(square->exponents);
        if (derivation.degree == abs(d)) {
            RationalityCertificate cert{DelsarteDetCert{derivation.degree, abs(d)}, assumptions, true};
            cert.family_level = sorted_rows(*square) == basis.monomials;
            certificates.push_back(std::move(cert));
        }
    }
    if (auto subset = quadric_bundle_split(w, basis))
        certificates.push_back(
            RationalityCertificate{QuadricBundleCert{std::move(*subset)}, assumptions, true});
    if (auto cert = two_weight_detect(w, basis, assumptions))
        certificates.push_back(std::move(*cert));
    return certificates;
}

FamilyReport certify(const WeightSystem& w, const MonomialBasis& basis,
                     const std::optional<DelsarteMatrix>& matrix, const CertifyOptions& options) {
    FamilyReport report{.family = w,
                        .monomial_count = Int(static_cast<unsigned long>(basis.monomials.size())),
                        .dim_aut = dim_aut(w),
                        .moduli_lower_bound = 0,
                        .quasismooth = options.quasismooth,
                        .assumptions = options.assumptions};
    report.ambient_well_formed = is_well_formed(w);
    report.fano = is_fano(w);
    report.degree_criterion = wph::degree_criterion(w);
    report.moduli_lower_bound = report.monomial_count - 1 - report.dim_aut;

    report.singularities = options.precomputed_verdict
                               ? *options.precomputed_verdict
                               : classify_hypersurface(w, basis, options.classify);

    report.certificates = rationality_certificates(w, basis, matrix, options.assumptions);
    for (const RationalityCertificate& cert : report.certificates)
        if (cert.family_level)
            report.rational_certified = true;
    report.rational_beyond_degree_bound = report.rational_certified &&
                                          report.singularities.terminal == Answer::Yes &&
                                          report.fano && !report.degree_criterion;
    return report;
}

} // namespace wph
