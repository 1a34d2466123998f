#include "wph/delsarte.hpp"

#include <algorithm>

namespace wph {

DelsarteMatrix::DelsarteMatrix(IntMatrix b, std::optional<std::vector<Rat>> k)
    : exponents(std::move(b)), coefficients(std::move(k)) {
    if (!exponents.is_square())
        throw std::invalid_argument("exponent matrix must be square");
    for (std::size_t i = 0; i < exponents.rows(); ++i)
        for (std::size_t j = 0; j < exponents.cols(); ++j)
            if (exponents.at(i, j) < 0)
                throw std::invalid_argument("exponent matrix entries must be non-negative");
    if (coefficients) {
        if (coefficients->size() != exponents.rows())
            throw std::invalid_argument("one coefficient per monomial row required");
        for (const Rat& c : *coefficients)
            if (c == 0)
                throw std::invalid_argument("coefficients must be nonzero");
    }
}

ExponentVector DelsarteMatrix::row(std::size_t i) const {
    ExponentVector e(exponents.cols());
    for (std::size_t j = 0; j < exponents.cols(); ++j) {
        if (!exponents.at(i, j).fits_slong_p())
            throw std::domain_error("exponent too large");
        e[j] = exponents.at(i, j).get_si();
    }
    return e;
}

DelsarteDerivation derive_weights(const DelsarteMatrix& b) {
    const std::size_t n = b.size();
    const RatMatrix inv = inverse_rational(b.exponents); // throws when singular
    DelsarteDerivation out;
    out.q.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        out.q.push_back(inv.row_sum(j));
    out.degree = 1;
    for (const Rat& qj : out.q)
        out.degree = lcm(out.degree, Int(qj.get_den()));
    out.weights.reserve(n);
    for (const Rat& qj : out.q) {
        Rat a = Rat(out.degree) * qj;
        if (a <= 0 || a.get_den() != 1)
            throw std::domain_error("degenerate weight system");
        out.weights.push_back(Int(a.get_num()));
    }
    // the least-common-denominator construction forces gcd 1; see tests
    if (gcd_many(out.weights) != 1)
        throw std::logic_error("derived weights share a factor");
    return out;
}

bool delsarte_rational(const DelsarteMatrix& b) {
    const DelsarteDerivation der = derive_weights(b);
    Int d = det(b.exponents);
    return der.degree == abs(d);
}

LatticeOrder lattice_order_check(const DelsarteMatrix& b) {
    const std::size_t n = b.size();
    const Int determinant = det(b.exponents);
    if (determinant == 0)
        throw std::domain_error("matrix is singular");
    derive_weights(b); // surfaces degenerate-weight errors consistently

    // Order of the class of the all-ones vector v in Z^N / B Z^N: with
    // U*B*V = D the class maps to U*v in Z^N / D Z^N.
    const SmithNormalForm snf = smith_normal_form(b.exponents);
    std::vector<Int> uv(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            uv[i] += snf.u.at(i, j);
    Int order = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& di = snf.d.at(i, i);
        Int g;
        mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), uv[i].get_mpz_t());
        order = lcm(order, Int(di / g));
    }
    return LatticeOrder{abs(determinant), order};
}

LoopType::LoopType(std::vector<Int> bs) : exponents(std::move(bs)) {
    if (exponents.size() < 3)
        throw std::invalid_argument("a loop needs at least 3 exponents");
    for (const Int& b : exponents)
        if (b < 1)
            throw std::invalid_argument("loop exponents must be at least 1");
}

DelsarteMatrix loop_matrix(const LoopType& t) {
    const std::size_t n = t.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = t.exponents[i];
        m.at(i, (i + 1) % n) = 1;
    }
    return DelsarteMatrix(std::move(m));
}

DelsarteDerivation main_family(std::size_t n) {
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    std::vector<Int> bs(n + 2, Int(2));
    bs.back() = 3;
    return derive_weights(loop_matrix(LoopType(std::move(bs))));
}

Int loop_quasismooth_obstruction(const LoopType& t) {
    Int prod = 1;
    for (const Int& b : t.exponents)
        prod *= b;
    return t.size() % 2 == 0 ? Int(prod - 1) : Int(prod + 1);
}

Int DiagonalAutGroup::order() const {
    Int o = 1;
    for (const Int& f : invariant_factors)
        o *= f;
    return o;
}

namespace {

// Representatives of one generator class differ by unit multiples and by
// shifts along the weighted scaling subgroup. Normalize like the hand
// computation: fix the first variable whose weight is a unit mod the order,
// prefer the multiple scaling the equation by the primitive root itself,
// and break remaining ties lexicographically.
std::vector<Rat> canonical_generator(const std::vector<Rat>& t, const std::vector<Int>& weights,
                                     const Int& order, const ExponentVector& row0) {
    const std::size_t n = t.size();
    if (!order.fits_ulong_p())
        throw std::domain_error("generator order too large to canonicalize");
    const unsigned long d = order.get_ui();

    std::vector<Int> wmod(n);
    for (std::size_t j = 0; j < n; ++j)
        mpz_mod(wmod[j].get_mpz_t(), weights[j].get_mpz_t(), order.get_mpz_t());

    std::optional<std::size_t> gauge;
    Int gauge_inv;
    for (std::size_t j = 0; j < n; ++j) {
        Int g;
        mpz_gcd(g.get_mpz_t(), wmod[j].get_mpz_t(), order.get_mpz_t());
        if (g == 1) {
            gauge = j;
            mpz_invert(gauge_inv.get_mpz_t(), wmod[j].get_mpz_t(), order.get_mpz_t());
            break;
        }
    }

    auto scalar_of = [&](const std::vector<Rat>& cand) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s += Rat(Int(static_cast<long>(row0[j]))) * cand[j];
        return frac(s);
    };

    std::vector<std::vector<Rat>> candidates;
    for (unsigned long u = 1; u < d; ++u) {
        Int g;
        Int ui(static_cast<unsigned long>(u));
        mpz_gcd(g.get_mpz_t(), ui.get_mpz_t(), order.get_mpz_t());
        if (g != 1)
            continue;
        std::vector<unsigned long> shifts;
        if (gauge) {
            // the unique shift zeroing the gauge coordinate
            Rat tg = frac(Rat(ui) * t[*gauge]);
            Int num = tg.get_num() * (order / tg.get_den());
            Int m = ((-num * gauge_inv) % order + order) % order;
            shifts.push_back(m.get_ui());
        } else {
            for (unsigned long m = 0; m < d; ++m)
                shifts.push_back(m);
        }
        for (unsigned long m : shifts) {
            std::vector<Rat> cand(n);
            for (std::size_t j = 0; j < n; ++j)
                cand[j] = frac(Rat(ui) * t[j] + make_rat(Int(static_cast<unsigned long>(m)) * wmod[j], order));
            candidates.push_back(std::move(cand));
        }
    }

    const Rat primitive = make_rat(1, order);
    std::vector<const std::vector<Rat>*> pool;
    for (const auto& c : candidates)
        if (scalar_of(c) == primitive)
            pool.push_back(&c);
    if (pool.empty())
        for (const auto& c : candidates)
            pool.push_back(&c);
    const std::vector<Rat>* best = pool.front();
    for (const auto* c : pool)
        if (*c < *best)
            best = c;
    return *best;
}

} // namespace

DiagonalAutGroup diagonal_aut(const std::vector<ExponentVector>& monomials, const WeightSystem& w) {
    const std::size_t n = w.variable_count();
    const std::size_t m = monomials.size();
    if (m == 0)
        throw std::invalid_argument("at least one monomial required");
    for (const auto& mon : monomials)
        if (mon.size() != n)
            throw std::invalid_argument("monomial length mismatch");
    if (m == 1)
        throw std::domain_error("diagonal symmetry group is not finite");

    // Pin the common scaling factor to the first monomial and solve
    // (row_i - row_0) . t = 0 (mod 1) through the Smith normal form.
    IntMatrix diff(m - 1, n);
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            diff.at(i - 1, j) = Int(static_cast<long>(monomials[i][j]) - static_cast<long>(monomials[0][j]));
    const SmithNormalForm snf = smith_normal_form(diff);
    const std::size_t nmin = std::min(m - 1, n);

    std::size_t rank = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (snf.d.at(i, i) != 0)
            ++rank;
    if (rank + 1 < n)
        throw std::domain_error("diagonal symmetry group is not finite");

    DiagonalAutGroup out;
    for (std::size_t i = 0; i < nmin; ++i) {
        const Int& di = snf.d.at(i, i);
        if (di <= 1)
            continue;
        out.invariant_factors.push_back(di);
        std::vector<Rat> t(n);
        for (std::size_t j = 0; j < n; ++j)
            t[j] = frac(make_rat(snf.v.at(j, i), di));
        t = canonical_generator(t, w.weights(), di, monomials[0]);
        DiagonalAutGenerator gen;
        gen.order = di;
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s += Rat(Int(static_cast<long>(monomials[0][j]))) * t[j];
        gen.scalar = frac(s);
        gen.action = std::move(t);
        out.generators.push_back(std::move(gen));
    }
    return out;
}

} // namespace wph
