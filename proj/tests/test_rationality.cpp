#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wph/rationality.hpp"

#include <algorithm>

using namespace wph;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
    std::vector<Int> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

MonomialBasis basis_of(const WeightSystem& w) {
    return enumerate_monomials(w);
}

const WeightSystem kX23{ints({9, 9, 8, 8, 7, 7, 5, 5}), 23};
const WeightSystem kX12{ints({4, 4, 4, 4, 3, 3, 3, 3, 3}), 12};

} // namespace

TEST_CASE("low_degree detection") {
    const WeightSystem hyperplane(ints({1, 1, 1, 1}), 1);
    auto cone = low_degree(hyperplane, basis_of(hyperplane));
    REQUIRE(cone.has_value());
    CHECK(std::holds_alternative<LinearConeCert>(cone->kind));

    const WeightSystem halfmax(ints({3, 3, 1, 1}), 6);
    auto case2 = low_degree(halfmax, basis_of(halfmax));
    REQUIRE(case2.has_value());
    REQUIRE(std::holds_alternative<LowDegreeCert>(case2->kind));
    CHECK(std::get<LowDegreeCert>(case2->kind).case_number == 2);
    CHECK(std::get<LowDegreeCert>(case2->kind).attaining == std::vector<std::size_t>{0, 1});

    const WeightSystem doublecover(ints({5, 1, 1, 1}), 10);
    CHECK_FALSE(low_degree(doublecover, basis_of(doublecover)).has_value());

    // case 2 needs the closed-field assumption
    AssumptionFlags finite;
    finite.algebraically_closed = false;
    finite.characteristic = 5;
    CHECK_FALSE(low_degree(halfmax, basis_of(halfmax), finite).has_value());

    const WeightSystem case1(ints({4, 3, 2, 1}), 7);
    auto strict = low_degree(case1, basis_of(case1));
    REQUIRE(strict.has_value());
    // x3*x2^3 etc. exist but so does x3... a_3=1 < 7: no single-variable monomial;
    // d=7 < 8 = 2*max
    REQUIRE(std::holds_alternative<LowDegreeCert>(strict->kind));
    CHECK(std::get<LowDegreeCert>(strict->kind).case_number == 1);
}

TEST_CASE("linear cone fires whenever a weight equals the degree") {
    const WeightSystem w(ints({6, 3, 2, 1}), 6);
    auto cert = low_degree(w, basis_of(w));
    REQUIRE(cert.has_value());
    REQUIRE(std::holds_alternative<LinearConeCert>(cert->kind));
    CHECK(std::get<LinearConeCert>(cert->kind).variable == 0);
}

TEST_CASE("quadric bundle split") {
    auto split = quadric_bundle_split(kX23, basis_of(kX23));
    REQUIRE(split.has_value());
    CHECK(*split == std::vector<std::size_t>{0, 1, 2, 3});

    const WeightSystem cubic3fold(ints({1, 1, 1, 1, 1}), 3);
    CHECK_FALSE(quadric_bundle_split(cubic3fold, basis_of(cubic3fold)).has_value());

    // every monomial of the full quadric surface family has S-degree 0, 1 or 2
    // for any pair S, including S-degree 0, so no subset qualifies
    const WeightSystem quadric(ints({1, 1, 1, 1}), 2);
    CHECK_FALSE(quadric_bundle_split(quadric, basis_of(quadric)).has_value());
}

TEST_CASE("quadric split does not depend on monomial order") {
    MonomialBasis basis = basis_of(kX23);
    std::reverse(basis.monomials.begin(), basis.monomials.end());
    auto split = quadric_bundle_split(kX23, basis);
    REQUIRE(split.has_value());
    CHECK(*split == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("two weight detection") {
    auto cert = two_weight_detect(kX12, basis_of(kX12));
    REQUIRE(cert.has_value());
    const auto& tw = std::get<TwoWeightCert>(cert->kind);
    CHECK(tw.a == 3);
    CHECK(tw.c == 4);
    CHECK(tw.k == 4);
    CHECK(tw.l == 5);

    const WeightSystem wrong_degree(ints({2, 2, 3, 3}), 7);
    CHECK_FALSE(two_weight_detect(wrong_degree, basis_of(wrong_degree)).has_value());

    const WeightSystem single(ints({1, 1, 1}), 1);
    CHECK_FALSE(two_weight_detect(single, basis_of(single)).has_value());
}

TEST_CASE("certify the main family in dimension 7") {
    const DelsarteDerivation derivation = main_family(7);
    const WeightSystem w = derivation.weight_system();
    CertifyOptions options;
    options.quasismooth = QuasismoothStatus::Certified;
    const FamilyReport report =
        certify(w, basis_of(w), loop_matrix(LoopType(ints({2, 2, 2, 2, 2, 2, 2, 2, 3}))), options);

    CHECK(report.fano);
    CHECK_FALSE(report.degree_criterion);
    CHECK(report.singularities.terminal == Answer::Yes);
    bool has_det_cert = false;
    for (const RationalityCertificate& cert : report.certificates)
        if (std::holds_alternative<DelsarteDetCert>(cert.kind)) {
            has_det_cert = true;
            CHECK(cert.family_level);
            CHECK(std::get<DelsarteDetCert>(cert.kind).degree == 769);
            CHECK(std::get<DelsarteDetCert>(cert.kind).det_abs == 769);
        }
    CHECK(has_det_cert);
    CHECK(report.rational_certified);
    CHECK(report.rational_beyond_degree_bound);
}

TEST_CASE("certify the quadric-bundle example") {
    const FamilyReport report = certify(kX23, basis_of(kX23));
    CHECK(report.ambient_well_formed);
    CHECK(report.fano);
    CHECK_FALSE(report.degree_criterion);
    CHECK(report.monomial_count == 26);
    CHECK(report.dim_aut == 15);
    CHECK(report.moduli_lower_bound == 10);
    CHECK(report.singularities.terminal == Answer::Yes);
    bool has_quadric = false;
    for (const RationalityCertificate& cert : report.certificates)
        if (const auto* qb = std::get_if<QuadricBundleCert>(&cert.kind)) {
            has_quadric = true;
            CHECK(qb->subset == std::vector<std::size_t>{0, 1, 2, 3});
        }
    CHECK(has_quadric);
    CHECK(report.rational_certified);
    CHECK(report.rational_beyond_degree_bound);
}

TEST_CASE("certify the low-dimension main families") {
    for (std::size_t n : {3, 4, 5}) {
        const WeightSystem w = main_family(n).weight_system();
        CertifyOptions options;
        options.quasismooth = QuasismoothStatus::Certified;
        const FamilyReport report = certify(w, basis_of(w), std::nullopt, options);
        CHECK(report.rational_certified);
        CHECK(report.fano);
        CHECK(report.singularities.klt);
        CHECK_FALSE(report.degree_criterion);
        CHECK(report.singularities.terminal == Answer::No);
        CHECK_FALSE(report.rational_beyond_degree_bound);
        bool has_det_cert = false;
        for (const RationalityCertificate& cert : report.certificates)
            has_det_cert = has_det_cert || std::holds_alternative<DelsarteDetCert>(cert.kind);
        CHECK(has_det_cert); // the square basis route
    }
}

TEST_CASE("certificates re-validate against the family") {
    const FamilyReport report = certify(kX12, basis_of(kX12));
    const MonomialBasis basis = basis_of(kX12);
    for (const RationalityCertificate& cert : report.certificates) {
        if (const auto* tw = std::get_if<TwoWeightCert>(&cert.kind)) {
            CHECK(tw->a * tw->c == kX12.degree());
            std::size_t k = 0, l = 0;
            for (const Int& weight : kX12.weights()) {
                if (weight == tw->c) ++k;
                if (weight == tw->a) ++l;
            }
            CHECK(k == tw->k);
            CHECK(l == tw->l);
        }
        if (const auto* qb = std::get_if<QuadricBundleCert>(&cert.kind)) {
            for (const ExponentVector& e : basis.monomials) {
                std::int64_t deg = 0;
                for (std::size_t i : qb->subset)
                    deg += e[i];
                CHECK((deg == 1 || deg == 2));
            }
        }
    }
}

TEST_CASE("degree criterion consistency with low_degree") {
    // when the degree criterion holds with >= 2 maximal weights or strict
    // inequality, a certificate exists
    const WeightSystem strict(ints({7, 5, 4, 3}), 13);
    CHECK(degree_criterion(strict));
    CHECK(low_degree(strict, basis_of(strict)).has_value());

    const WeightSystem twomax(ints({3, 3, 1, 1}), 6);
    CHECK(degree_criterion(twomax));
    CHECK(low_degree(twomax, basis_of(twomax)).has_value());
}

TEST_CASE("a mismatched matrix is rejected") {
    const WeightSystem w = main_family(3).weight_system();
    CHECK_THROWS_AS(certify(w, basis_of(w), loop_matrix(LoopType(ints({2, 2, 3})))),
                    std::invalid_argument);
}
