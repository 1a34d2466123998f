#include "wph/equation.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace wph {

EquationParseError::EquationParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}

namespace {

constexpr std::size_t kMaxVariableIndex = 99;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Equation run() {
        skip_ws();
        if (eof())
            throw EquationParseError("empty equation", pos_);
        bool negative = consume_sign_opt();
        parse_term(negative);
        skip_ws();
        while (!eof()) {
            const char c = peek();
            if (c != '+' && c != '-')
                throw EquationParseError("expected '+' or '-' between terms", pos_);
            ++pos_;
            skip_ws();
            parse_term(c == '-');
            skip_ws();
        }
        return finish();
    }

private:
    struct Slot {
        std::map<std::size_t, std::int64_t> exponents;
        Rat coefficient;
        std::size_t position; // first occurrence, for error reporting
    };

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t max_index_ = 0;
    bool any_variable_ = false;
    std::vector<Slot> terms_; // source order, duplicates merged
    std::map<std::map<std::size_t, std::int64_t>, std::size_t> slot_of_;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool consume_sign_opt() {
        if (!eof() && (peek() == '+' || peek() == '-')) {
            const bool neg = peek() == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    Int parse_integer() {
        const std::size_t start = pos_;
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(peek());
            ++pos_;
        }
        if (digits.empty())
            throw EquationParseError("expected a number", start);
        return Int(digits);
    }

    void parse_term(bool negative) {
        const std::size_t term_pos = pos_;
        Rat coefficient = 1;
        bool saw_coefficient = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = parse_integer();
            Int den = 1;
            skip_ws();
            if (!eof() && peek() == '/') {
                ++pos_;
                skip_ws();
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw EquationParseError("expected a denominator", pos_);
                den = parse_integer();
                if (den == 0)
                    throw EquationParseError("zero denominator", pos_);
            }
            coefficient = make_rat(num, den);
            saw_coefficient = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        if (negative)
            coefficient = -coefficient;

        std::map<std::size_t, std::int64_t> exponents;
        bool first_factor = true;
        for (;;) {
            skip_ws();
            if (eof() || peek() != 'x') {
                if (first_factor) {
                    if (!saw_coefficient)
                        throw EquationParseError("expected a term", term_pos);
                    break; // bare constant term
                }
                break;
            }
            ++pos_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw EquationParseError("expected a variable index after 'x'", pos_);
            Int index_big = parse_integer();
            if (index_big > static_cast<unsigned long>(kMaxVariableIndex))
                throw EquationParseError("variable index out of range (x0..x99)", pos_);
            const std::size_t index = index_big.get_ui();
            std::int64_t exponent = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                skip_ws();
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw EquationParseError("expected an exponent", pos_);
                Int e = parse_integer();
                if (!e.fits_slong_p())
                    throw EquationParseError("exponent too large", pos_);
                exponent = e.get_si();
            }
            exponents[index] += exponent;
            any_variable_ = true;
            max_index_ = std::max(max_index_, index);
            first_factor = false;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        // drop exponent-zero factors from the key so x0^0 merges with 1
        for (auto it = exponents.begin(); it != exponents.end();)
            it = it->second == 0 ? exponents.erase(it) : std::next(it);

        auto found = slot_of_.find(exponents);
        if (found == slot_of_.end()) {
            slot_of_.emplace(exponents, terms_.size());
            terms_.push_back(Slot{std::move(exponents), coefficient, term_pos});
        } else {
            terms_[found->second].coefficient += coefficient;
        }
    }

    Equation finish() {
        Equation eq;
        eq.variable_count = any_variable_ ? max_index_ + 1 : 0;
        for (Slot& slot : terms_) {
            if (slot.coefficient == 0)
                throw EquationParseError("monomial has zero coefficient after merging",
                                         slot.position);
            ExponentVector e(eq.variable_count, 0);
            for (auto& [index, exponent] : slot.exponents)
                e[index] = exponent;
            eq.terms.push_back(EquationTerm{slot.coefficient, std::move(e)});
        }
        return eq;
    }
};

void print_term(std::ostream& out, const EquationTerm& term, bool first) {
    const bool negative = term.coefficient < 0;
    if (first) {
        if (negative)
            out << '-';
    } else {
        out << (negative ? " - " : " + ");
    }
    Rat a = negative ? Rat(-term.coefficient) : term.coefficient;
    std::vector<std::string> factors;
    for (std::size_t j = 0; j < term.exponents.size(); ++j) {
        if (term.exponents[j] == 0)
            continue;
        std::ostringstream f;
        f << 'x' << j;
        if (term.exponents[j] != 1)
            f << '^' << term.exponents[j];
        factors.push_back(f.str());
    }
    if (factors.empty()) {
        out << a;
        return;
    }
    if (a != 1)
        out << a << '*';
    for (std::size_t i = 0; i < factors.size(); ++i)
        out << (i ? "*" : "") << factors[i];
}

} // namespace

Equation parse_equation(std::string_view text) {
    return Parser(text).run();
}

std::string to_string(const Equation& eq) {
    std::ostringstream out;
    for (std::size_t i = 0; i < eq.terms.size(); ++i)
        print_term(out, eq.terms[i], i == 0);
    return out.str();
}

std::vector<ExponentVector> equation_monomials(const Equation& eq) {
    std::vector<ExponentVector> out;
    out.reserve(eq.terms.size());
    for (const EquationTerm& term : eq.terms)
        out.push_back(term.exponents);
    return out;
}

DelsarteMatrix to_delsarte_matrix(const Equation& eq) {
    if (eq.terms.empty() || eq.terms.size() != eq.variable_count)
        throw std::invalid_argument("equation needs as many monomials as variables");
    IntMatrix b(eq.terms.size(), eq.variable_count);
    std::vector<Rat> coefficients;
    coefficients.reserve(eq.terms.size());
    for (std::size_t i = 0; i < eq.terms.size(); ++i) {
        for (std::size_t j = 0; j < eq.variable_count; ++j) {
            if (eq.terms[i].exponents[j] < 0)
                throw std::invalid_argument("negative exponent in monomial");
            b.at(i, j) = static_cast<long>(eq.terms[i].exponents[j]);
        }
        coefficients.push_back(eq.terms[i].coefficient);
    }
    return DelsarteMatrix(std::move(b), std::move(coefficients));
}

} // namespace wph
