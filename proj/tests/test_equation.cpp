#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wph/equation.hpp"

#include <random>
#include <sstream>

using namespace wph;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
    std::vector<Int> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

bool equal_equations(const Equation& a, const Equation& b) {
    if (a.variable_count != b.variable_count || a.terms.size() != b.terms.size())
        return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].coefficient != b.terms[i].coefficient ||
            a.terms[i].exponents != b.terms[i].exponents)
            return false;
    return true;
}

// random equation over a fixed variable set; exercised by the round-trip suite
std::string random_equation(std::mt19937& rng) {
    std::uniform_int_distribution<int> term_count(1, 6), coeff(-9, 9), den(1, 9),
        factor_count(0, 3), var(0, 5), expo(1, 7), spaces(0, 1);
    std::ostringstream out;
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        int c = coeff(rng);
        if (c == 0)
            c = 7;
        if (t == 0) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const int d = den(rng);
        const bool constant_term = factor_count(rng) == 0;
        out << std::abs(c);
        if (d > 1)
            out << "/" << d;
        if (!constant_term) {
            const int factors = 1 + factor_count(rng);
            out << "*";
            for (int f = 0; f < factors; ++f) {
                if (f)
                    out << "*";
                out << "x" << var(rng);
                if (int e = expo(rng); e > 1)
                    out << "^" << e;
            }
        }
    }
    return out.str();
}

} // namespace

TEST_CASE("parse the small loop") {
    const Equation eq = parse_equation("x0^2*x1 + x1^2*x2 + x2^3*x0");
    CHECK(eq.variable_count == 3);
    REQUIRE(eq.terms.size() == 3);
    CHECK(eq.terms[0].exponents == ExponentVector{2, 1, 0});
    CHECK(eq.terms[1].exponents == ExponentVector{0, 2, 1});
    CHECK(eq.terms[2].exponents == ExponentVector{1, 0, 3});
    for (const EquationTerm& term : eq.terms)
        CHECK(term.coefficient == 1);
}

TEST_CASE("parse the nine-term family and derive its weights") {
    const Equation eq = parse_equation(
        "x0^2*x7 + x7^10*x1 + x1^2*x6 + x6^8*x2 + x2^2*x5 + x5^3*x3 + x3^2*x4 + x4^2*x0 "
        "+ x2*x3*x6*x7^3");
    CHECK(eq.variable_count == 8);
    REQUIRE(eq.terms.size() == 9);

    IntMatrix b(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            b.at(i, j) = static_cast<long>(eq.terms[i].exponents[j]);
    const DelsarteDerivation derivation = derive_weights(DelsarteMatrix(std::move(b)));
    CHECK(derivation.weights == ints({519, 507, 433, 404, 289, 231, 83, 59}));
    CHECK(derivation.degree == 1097);
}

TEST_CASE("zero after merge is an error") {
    CHECK_THROWS_AS(parse_equation("2*x0 - 2*x0"), EquationParseError);
    CHECK_THROWS_AS(parse_equation("0*x0"), EquationParseError);
    CHECK(parse_equation("x0 - x0 + x0").terms.size() == 1); // final sum is nonzero
}

TEST_CASE("merging accumulates coefficients in source order") {
    const Equation eq = parse_equation("x0 + 2*x1 + 3*x0");
    REQUIRE(eq.terms.size() == 2);
    CHECK(eq.terms[0].coefficient == 4);
    CHECK(eq.terms[0].exponents == ExponentVector{1, 0});
    CHECK(eq.terms[1].coefficient == 2);
}

TEST_CASE("coefficients and fractions") {
    const Equation eq = parse_equation("3/4*x0^2 - 2*x1 + 5");
    REQUIRE(eq.terms.size() == 3);
    CHECK(eq.terms[0].coefficient == make_rat(3, 4));
    CHECK(eq.terms[1].coefficient == -2);
    CHECK(eq.terms[2].coefficient == 5);
    CHECK(eq.terms[2].exponents == ExponentVector{0, 0});
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_equation("x0^2*x1 + @");
        FAIL("expected a parse error");
    } catch (const EquationParseError& error) {
        CHECK(error.position == 10);
    }
    CHECK_THROWS_AS(parse_equation(""), EquationParseError);
    CHECK_THROWS_AS(parse_equation("x"), EquationParseError);
    CHECK_THROWS_AS(parse_equation("x0^"), EquationParseError);
    CHECK_THROWS_AS(parse_equation("x0 +"), EquationParseError);
    CHECK_THROWS_AS(parse_equation("x100"), EquationParseError);
    CHECK_THROWS_AS(parse_equation("3/0*x1"), EquationParseError);
    CHECK_THROWS_AS(parse_equation("x0 x1"), EquationParseError);
}

TEST_CASE("pretty printing round-trips") {
    const Equation eq = parse_equation("x0^2*x1 + 3/2*x1^2*x2 - x2^3*x0 + 7");
    const std::string printed = to_string(eq);
    const Equation again = parse_equation(printed);
    CHECK(equal_equations(eq, again));
    CHECK(to_string(again) == printed);
}

TEST_CASE("round-trip on a random corpus") {
    std::mt19937 rng(987654);
    int done = 0;
    while (done < 50) {
        const std::string text = random_equation(rng);
        Equation eq;
        try {
            eq = parse_equation(text);
        } catch (const EquationParseError&) {
            continue; // random generator may cancel a monomial; skip those
        }
        ++done;
        const std::string printed = to_string(eq);
        const Equation again = parse_equation(printed);
        CHECK(equal_equations(eq, again));
        CHECK(to_string(again) == printed);
    }
}

TEST_CASE("delsarte matrix extraction") {
    const Equation eq = parse_equation("2*x0^2*x1 + x1^2*x2 + x2^3*x0");
    const DelsarteMatrix matrix = to_delsarte_matrix(eq);
    CHECK(matrix.size() == 3);
    REQUIRE(matrix.coefficients.has_value());
    CHECK(matrix.coefficients->at(0) == 2);
    CHECK_THROWS_AS(to_delsarte_matrix(parse_equation("x0 + x1 + x2 + x0*x1")),
                    std::invalid_argument);
}
