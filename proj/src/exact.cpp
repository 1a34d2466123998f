#include "wph/exact.hpp"

namespace wph {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Rat frac(const Rat& x) {
    return x - Rat(floor_rat(x));
}

Int gcd_many(std::span<const Int> values) {
    if (values.empty())
        throw std::invalid_argument("gcd of empty list");
    Int g = 0;
    for (const Int& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be at least 1");
}

} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    check_dims(rows, cols);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dims(rows, cols);
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& factor) {
    for (std::size_t k = 0; k < cols_; ++k)
        at(i, k) += factor * at(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& factor) {
    for (std::size_t k = 0; k < rows_; ++k)
        at(k, i) += factor * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k)
        at(i, k) = -at(i, k);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    check_dims(rows, cols);
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Rat RatMatrix::row_sum(std::size_t i) const {
    Rat s;
    for (std::size_t j = 0; j < cols_; ++j)
        s += at(i, j);
    return s;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Int det(const IntMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && a.at(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

RatMatrix inverse_rational(const IntMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = Rat(m.at(i, j));
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a.at(pivot, k) == 0)
            ++pivot;
        if (pivot == n)
            throw std::domain_error("matrix is singular");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
        }
        Rat p = a.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(k, j) /= p;
            inv.at(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            Rat f = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// True when the submatrix below and right of pivot s is already cleared.
bool pivot_isolated(const IntMatrix& a, std::size_t s) {
    for (std::size_t i = s + 1; i < a.rows(); ++i)
        if (a.at(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < a.cols(); ++j)
        if (a.at(s, j) != 0) return false;
    return true;
}

bool find_min_nonzero(const IntMatrix& a, std::size_t s, std::size_t& bi, std::size_t& bj) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < a.rows(); ++i)
        for (std::size_t j = s; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            Int v = abs_int(a.at(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                bi = i;
                bj = j;
            }
        }
    return found;
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithNormalForm s{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& a = s.d;
    const std::size_t nmin = std::min(rows, cols);
    for (std::size_t k = 0; k < nmin; ++k) {
        for (;;) {
            std::size_t bi, bj;
            if (!find_min_nonzero(a, k, bi, bj))
                break; // remaining submatrix is zero
            a.swap_rows(k, bi);
            s.u.swap_rows(k, bi);
            a.swap_cols(k, bj);
            s.v.swap_cols(k, bj);
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (a.at(i, k) == 0) continue;
                Int q = a.at(i, k) / a.at(k, k); // truncated quotient keeps remainders small
                a.add_row(i, k, -q);
                s.u.add_row(i, k, -q);
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (a.at(k, j) == 0) continue;
                Int q = a.at(k, j) / a.at(k, k);
                a.add_col(j, k, -q);
                s.v.add_col(j, k, -q);
            }
            if (!pivot_isolated(a, k))
                continue;
            // enforce the divisibility chain before moving on
            bool divides_all = true;
            for (std::size_t i = k + 1; i < rows && divides_all; ++i)
                for (std::size_t j = k + 1; j < cols; ++j)
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        a.add_row(k, i, 1);
                        s.u.add_row(k, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
        }
        if (a.at(k, k) < 0) {
            a.negate_row(k);
            s.u.negate_row(k);
        }
    }
    return s;
}

} // namespace wph
