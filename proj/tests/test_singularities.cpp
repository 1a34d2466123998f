#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wph/singularities.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace wph;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
    std::vector<Int> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

LoopType loop(std::initializer_list<long> values) {
    return LoopType(ints(values));
}

LoopType main_loop(std::size_t n) {
    std::vector<Int> bs(n + 2, Int(2));
    bs.back() = 3;
    return LoopType(std::move(bs));
}

// independent oracle: rational fractional-part sums, no modular shortcut
bool reid_tai_oracle(const CyclicQuotientType& t, SingularityClass mode) {
    if (t.r == 1)
        return true;
    const long r = t.r.get_si();
    for (long i = 1; i < r; ++i) {
        Rat sum = 0;
        for (const Int& c : t.residues)
            sum += frac(make_rat(Int(i) * c, t.r));
        if (mode == SingularityClass::Terminal ? sum <= 1 : sum < 1)
            return false;
    }
    return true;
}

MonomialBasis basis_of(const WeightSystem& w) {
    return enumerate_monomials(w);
}

} // namespace

TEST_CASE("reid_tai examples") {
    CHECK(reid_tai(CyclicQuotientType(2, ints({1, 1})), SingularityClass::Canonical));
    CHECK_FALSE(reid_tai(CyclicQuotientType(2, ints({1, 1})), SingularityClass::Terminal));

    CHECK(reid_tai(CyclicQuotientType(9, ints({8, 8, 7, 7, 5})), SingularityClass::Terminal));
    CHECK(reid_tai(CyclicQuotientType(4, ints({3, 3, 3, 3, 3})), SingularityClass::Terminal));

    CHECK(reid_tai(CyclicQuotientType(1, ints({0})), SingularityClass::Terminal));
}

TEST_CASE("reid_tai failure witnesses") {
    // 1/2(1,1) fails terminal at i=1 where the sum is exactly 1
    auto witness = reid_tai_failure(CyclicQuotientType(2, ints({1, 1})), SingularityClass::Terminal);
    REQUIRE(witness.has_value());
    CHECK(*witness == 1);
    CHECK_FALSE(reid_tai_failure(CyclicQuotientType(9, ints({8, 8, 7, 7, 5})),
                                 SingularityClass::Terminal));
}

TEST_CASE("reid_tai agrees with the rational oracle") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<long> r_dist(1, 200);
    std::uniform_int_distribution<int> len_dist(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
        const long r = r_dist(rng);
        std::uniform_int_distribution<long> c_dist(0, r - 1 > 0 ? r - 1 : 0);
        std::vector<Int> cs;
        const int len = len_dist(rng);
        for (int i = 0; i < len; ++i)
            cs.emplace_back(c_dist(rng));
        const CyclicQuotientType type(Int(r), cs);
        for (SingularityClass mode : {SingularityClass::Canonical, SingularityClass::Terminal})
            CHECK(reid_tai(type, mode) == reid_tai_oracle(type, mode));
    }
}

TEST_CASE("reid_tai is invariant under multiplication by a unit") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<long> r_dist(2, 60);
    for (int trial = 0; trial < 100; ++trial) {
        const long r = r_dist(rng);
        std::uniform_int_distribution<long> c_dist(1, r - 1);
        std::vector<Int> cs;
        for (int i = 0; i < 4; ++i) {
            long c = c_dist(rng);
            while (std::gcd(c, r) != 1)
                c = c_dist(rng);
            cs.emplace_back(c);
        }
        long unit = c_dist(rng);
        while (std::gcd(unit, r) != 1)
            unit = c_dist(rng);
        std::vector<Int> scaled;
        for (const Int& c : cs)
            scaled.push_back(Int(c * unit) % r);
        for (SingularityClass mode : {SingularityClass::Canonical, SingularityClass::Terminal})
            CHECK(reid_tai(CyclicQuotientType(Int(r), cs), mode) ==
                  reid_tai(CyclicQuotientType(Int(r), scaled), mode));
    }
}

TEST_CASE("loop_betas") {
    const LoopBetas all2 = loop_betas(loop({2, 2, 2, 2, 2, 2, 2}), 0);
    CHECK(all2.values == ints({-1, 3, -5, 11, -21}));

    CHECK(loop_betas(loop({2, 2, 3}), 0).values == ints({-1}));
    CHECK(loop_betas(loop({2, 5, 7, 3}), 0).values == ints({-4, 29}));
    // base case: beta_2 = 1 - b_1 of the rotated sequence
    CHECK(loop_betas(loop({2, 5, 7, 3}), 1).values.front() == 1 - 7);
}

TEST_CASE("loop coordinate types match the homogeneity relations") {
    const LoopType t = loop({2, 2, 3});
    const DelsarteDerivation derivation = derive_weights(loop_matrix(t));
    const auto types = loop_coordinate_types(t, derivation);
    REQUIRE(types.size() == 3);
    CHECK(types[0].r == 4);
    CHECK(types[0].residues == ints({3})); // -1 mod 4

    // beta_j * a_{k+1} = a_{k+j} (mod a_k) for every rotation
    for (std::size_t n = 3; n <= 8; ++n) {
        const LoopType big = main_loop(n);
        const DelsarteDerivation der = derive_weights(loop_matrix(big));
        const std::size_t nv = n + 2;
        for (std::size_t k = 0; k < nv; ++k) {
            const LoopBetas betas = loop_betas(big, k);
            for (std::size_t j = 2; j < nv; ++j) {
                const Int lhs = betas.values[j - 2] * der.weights[(k + 1) % nv];
                const Int rhs = der.weights[(k + j) % nv];
                CHECK((lhs - rhs) % der.weights[k] == 0);
            }
        }
    }
}

TEST_CASE("eqII_min") {
    const std::vector<Int> figure = ints({-1, 3, -5, 11, -21});
    const PiecewiseInfimum inf = eqII_min(figure);
    CHECK(inf.infimum == make_rat(22, 21));
    CHECK(inf.attained);
    CHECK(inf.infimum > 1);

    const PiecewiseInfimum single = eqII_min(ints({-1}));
    CHECK(single.infimum == 0);
    CHECK_FALSE(single.attained);

    const PiecewiseInfimum constant = eqII_min(ints({1, -1}));
    CHECK(constant.infimum == 1);
    CHECK(constant.attained);

    CHECK(frac_sum_at(figure, make_rat(1, 2)) == make_rat(5, 2));
    CHECK_THROWS_AS(eqII_min(ints({0, 0})), std::invalid_argument);
}

TEST_CASE("eqII pointwise values reproduce reid-tai sums of coordinate types") {
    const LoopType t = main_loop(5);
    const DelsarteDerivation derivation = derive_weights(loop_matrix(t));
    const auto types = loop_coordinate_types(t, derivation);
    for (std::size_t k = 0; k < t.size(); ++k) {
        const LoopBetas betas = loop_betas(t, k);
        const long r = types[k].r.get_si();
        for (long i = 1; i < std::min(r, 40L); ++i) {
            Rat expected = 0;
            for (const Int& c : types[k].residues)
                expected += frac(make_rat(Int(i) * c, types[k].r));
            CHECK(frac_sum_at(betas.values, make_rat(Int(i), types[k].r)) == expected);
        }
    }
}

TEST_CASE("prefix truncation is conservative") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<long> beta_dist(-12, 12);
    std::uniform_int_distribution<int> len_dist(2, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> betas;
        const int len = len_dist(rng);
        for (int i = 0; i < len; ++i)
            betas.emplace_back(beta_dist(rng));
        if (std::all_of(betas.begin(), betas.end(), [](const Int& b) { return b == 0; }))
            continue;
        std::vector<Int> shorter(betas.begin(), betas.end() - 1);
        if (std::all_of(shorter.begin(), shorter.end(), [](const Int& b) { return b == 0; }))
            continue;
        // adding a term never decreases pointwise values
        std::uniform_int_distribution<long> num(1, 99);
        for (int probe = 0; probe < 20; ++probe) {
            const Rat x = make_rat(num(rng), 100);
            CHECK(frac_sum_at(betas, x) >= frac_sum_at(shorter, x));
        }
    }
}

TEST_CASE("eqII_sufficient on the main sequence") {
    CHECK_FALSE(eqII_sufficient(main_loop(7), SingularityClass::Terminal));
    CHECK(eqII_sufficient(main_loop(8), SingularityClass::Terminal, 8));
    CHECK(eqII_sufficient(main_loop(8), SingularityClass::Terminal));

    // five consecutive 2s: the 5-term prefix already certifies the point
    const PiecewiseInfimum five = eqII_min(ints({-1, 3, -5, 11, -21}));
    CHECK(eqII_meets(five, SingularityClass::Terminal));
}

TEST_CASE("strata_singularities on the quadric-bundle example") {
    const WeightSystem w(ints({9, 9, 8, 8, 7, 7, 5, 5}), 23);
    const auto reports = strata_singularities(w, basis_of(w));
    CHECK(reports.size() == 12);
    bool found = false;
    for (const StratumReport& report : reports) {
        if (report.stratum == std::vector<std::size_t>{0, 1}) {
            found = true;
            CHECK(report.r == 9);
            CHECK(report.contained_in_x);
            CHECK(report.eliminated == 6);
            CHECK(report.transverse.residues == ints({8, 8, 7, 7, 5}));
        }
    }
    CHECK(found);
}

TEST_CASE("strata_singularities on the two-weight example") {
    const WeightSystem w(ints({4, 4, 4, 4, 3, 3, 3, 3, 3}), 12);
    const auto reports = strata_singularities(w, basis_of(w));
    bool found = false;
    for (const StratumReport& report : reports) {
        if (report.stratum == std::vector<std::size_t>{0, 1, 2, 3}) {
            found = true;
            CHECK(report.r == 4);
            CHECK_FALSE(report.contained_in_x); // x0^3 is supported inside
            CHECK(report.transverse.residues == ints({3, 3, 3, 3, 3}));
        }
    }
    CHECK(found);
}

TEST_CASE("smooth ambient space has no strata") {
    const WeightSystem w(ints({1, 1, 1, 1}), 3);
    CHECK(strata_singularities(w, basis_of(w)).empty());
    const SingularityVerdict verdict = classify_hypersurface(w, basis_of(w));
    CHECK(verdict.terminal == Answer::Yes);
    CHECK(verdict.canonical == Answer::Yes);
    CHECK(verdict.klt);
}

TEST_CASE("strata error when quasismoothness is impossible") {
    const WeightSystem w(ints({3, 3, 2}), 7);
    CHECK_THROWS_AS(strata_singularities(w, basis_of(w)), NotQuasismoothError);
    try {
        strata_singularities(w, basis_of(w));
    } catch (const NotQuasismoothError& error) {
        CHECK(error.stratum == std::vector<std::size_t>{0});
    }
}

TEST_CASE("classification of the paper families") {
    const WeightSystem x23(ints({9, 9, 8, 8, 7, 7, 5, 5}), 23);
    const SingularityVerdict v23 = classify_hypersurface(x23, basis_of(x23));
    CHECK(v23.terminal == Answer::Yes);
    CHECK(v23.canonical == Answer::Yes);
    CHECK(v23.witnesses.empty());

    const WeightSystem x12(ints({4, 4, 4, 4, 3, 3, 3, 3, 3}), 12);
    CHECK(classify_hypersurface(x12, basis_of(x12)).terminal == Answer::Yes);

    const WeightSystem m6 = main_family(6).weight_system();
    const SingularityVerdict v6 = classify_hypersurface(m6, basis_of(m6));
    CHECK(v6.terminal == Answer::No);
    CHECK_FALSE(v6.witnesses.empty());
    CHECK(v6.klt);

    const WeightSystem m7 = main_family(7).weight_system();
    const SingularityVerdict v7 = classify_hypersurface(m7, basis_of(m7));
    CHECK(v7.terminal == Answer::Yes);

    for (std::size_t n = 3; n <= 5; ++n) {
        const WeightSystem m = main_family(n).weight_system();
        CHECK(classify_hypersurface(m, basis_of(m)).klt);
    }
}

TEST_CASE("terminal implies canonical in every verdict") {
    for (std::size_t n = 3; n <= 8; ++n) {
        const WeightSystem w = main_family(n).weight_system();
        const SingularityVerdict verdict = classify_hypersurface(w, basis_of(w));
        if (verdict.terminal == Answer::Yes)
            CHECK(verdict.canonical == Answer::Yes);
    }
}

TEST_CASE("the reid-tai cap yields undecided verdicts") {
    const WeightSystem w = main_family(7).weight_system();
    ClassifyOptions options;
    options.reid_tai_cap = 10; // far below the coordinate orders
    const SingularityVerdict verdict = classify_hypersurface(w, basis_of(w), options);
    CHECK(verdict.terminal == Answer::Undecided);
    CHECK(verdict.canonical == Answer::Undecided);
}
