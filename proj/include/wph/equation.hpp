#pragma once

// Parser and printer for weighted-homogeneous polynomial equations written
// as text, e.g. "x0^2*x1 + x1^2*x2 + x2^3*x0" or "3/2*x0^4 - x1*x2".

#include "wph/delsarte.hpp"
#include "wph/exact.hpp"
#include "wph/weights.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wph {

struct EquationTerm {
    Rat coefficient; // nonzero
    ExponentVector exponents;
};

/// Terms in source order (duplicate monomials merged into the first
/// occurrence). variable_count is one past the highest index mentioned.
struct Equation {
    std::vector<EquationTerm> terms;
    std::size_t variable_count = 0;
};

struct EquationParseError : std::runtime_error {
    std::size_t position;
    EquationParseError(const std::string& message, std::size_t pos);
};

/// Grammar: terms separated by + or -; a term is an optional integer or
/// fraction coefficient (optionally followed by *), then factors xN or xN^E
/// joined by *. Variables are x0 through x99. Merged-away terms and zero
/// coefficients are errors.
Equation parse_equation(std::string_view text);

/// Canonical rendering; parse(to_string(parse(s))) == parse(s).
std::string to_string(const Equation& eq);

std::vector<ExponentVector> equation_monomials(const Equation& eq);

/// Requires as many terms as variables. Coefficients are carried over.
DelsarteMatrix to_delsarte_matrix(const Equation& eq);

} // namespace wph
