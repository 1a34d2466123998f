#pragma once

// Exact arbitrary-precision integers and rationals (GMP-backed) plus the
// integer matrix algebra used everywhere else: fraction-free determinants,
// exact rational inverses, and Smith normal forms. No floating point.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wph {

using Int = mpz_class;
using Rat = mpq_class;

/// Rational p/q in lowest terms with positive denominator.
Rat make_rat(const Int& num, const Int& den);

/// floor(x) as an integer.
Int floor_rat(const Rat& x);

/// Fractional part x - floor(x), always in [0,1).
Rat frac(const Rat& x);

/// gcd of a non-empty list; non-negative; gcd of an all-zero list is 0.
Int gcd_many(std::span<const Int> values);
Int lcm(const Int& a, const Int& b);

/// Dense matrix of exact integers. Dimensions are fixed at construction
/// and must both be at least 1.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += factor * row j
    void add_row(std::size_t i, std::size_t j, const Int& factor);
    /// col i += factor * col j
    void add_col(std::size_t i, std::size_t j, const Int& factor);
    void negate_row(std::size_t i);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

/// Dense matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Rat row_sum(std::size_t i) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for non-square input.
Int det(const IntMatrix& m);

/// Exact inverse over the rationals. Throws std::invalid_argument for
/// non-square input and std::domain_error for singular input.
RatMatrix inverse_rational(const IntMatrix& m);

/// Smith normal form decomposition u * m * v = d with d diagonal,
/// d(0,0) | d(1,1) | ..., and u, v unimodular.
struct SmithNormalForm {
    IntMatrix d, u, v;
};
SmithNormalForm smith_normal_form(const IntMatrix& m);

} // namespace wph
