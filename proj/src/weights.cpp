#include "wph/weights.hpp"

#include <algorithm>
#include <numeric>

namespace wph {

namespace {

// Enumeration walks a boolean reachability table indexed by degree, so the
// degree has to stay addressable.
constexpr unsigned long kMaxEnumerationDegree = 5'000'000;

unsigned long degree_as_ulong(const Int& degree) {
    if (degree < 0)
        throw std::invalid_argument("negative weighted degree");
    if (!degree.fits_ulong_p() || degree.get_ui() > kMaxEnumerationDegree)
        throw std::domain_error("degree too large for monomial enumeration");
    return degree.get_ui();
}

std::vector<unsigned long> weights_as_ulong(std::span<const Int> weights) {
    if (weights.empty())
        throw std::invalid_argument("empty weight list");
    std::vector<unsigned long> out;
    out.reserve(weights.size());
    for (const Int& w : weights) {
        if (w <= 0)
            throw std::invalid_argument("weights must be positive");
        if (!w.fits_ulong_p())
            throw std::domain_error("weight too large for monomial enumeration");
        out.push_back(w.get_ui());
    }
    return out;
}

} // namespace

Int weighted_degree(std::span<const Int> weights, const ExponentVector& e) {
    if (weights.size() != e.size())
        throw std::invalid_argument("exponent vector length mismatch");
    Int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += weights[i] * Int(static_cast<long>(e[i]));
    return d;
}

WeightSystem::WeightSystem(std::vector<Int> weights, Int degree)
    : weights_(std::move(weights)), degree_(std::move(degree)) {
    if (weights_.size() < 3)
        throw std::invalid_argument("a weight system needs at least 3 weights");
    for (const Int& w : weights_)
        if (w <= 0)
            throw std::invalid_argument("weights must be positive");
    if (degree_ <= 0)
        throw std::invalid_argument("degree must be positive");
}

Int WeightSystem::max_weight() const {
    return *std::max_element(weights_.begin(), weights_.end());
}

Int WeightSystem::weight_sum() const {
    Int s = 0;
    for (const Int& w : weights_)
        s += w;
    return s;
}

bool is_well_formed_set(std::span<const Int> values) {
    if (values.empty())
        throw std::invalid_argument("empty weight list");
    // prefix/suffix gcds avoid re-scanning for every omitted index
    const std::size_t n = values.size();
    std::vector<Int> prefix(n + 1, Int(0)), suffix(n + 1, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        mpz_gcd(prefix[i + 1].get_mpz_t(), prefix[i].get_mpz_t(), values[i].get_mpz_t());
    for (std::size_t i = n; i-- > 0;)
        mpz_gcd(suffix[i].get_mpz_t(), suffix[i + 1].get_mpz_t(), values[i].get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
        Int g;
        mpz_gcd(g.get_mpz_t(), prefix[i].get_mpz_t(), suffix[i + 1].get_mpz_t());
        if (g != 1)
            return false;
    }
    return true;
}

bool is_well_formed(const WeightSystem& w) {
    return is_well_formed_set(w.weights());
}

std::vector<ExponentVector> enumerate_monomials(std::span<const Int> weights, const Int& degree) {
    const unsigned long d = degree_as_ulong(degree);
    const std::vector<unsigned long> ws = weights_as_ulong(weights);
    const std::size_t n = ws.size();

    // visit variables in descending-weight order so pruning bites early
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ws[a] > ws[b]; });

    // reachable[k][r]: degree r expressible using variables order[k..n-1]
    std::vector<std::vector<bool>> reachable(n + 1, std::vector<bool>(d + 1, false));
    reachable[n][0] = true;
    for (std::size_t k = n; k-- > 0;) {
        const unsigned long a = ws[order[k]];
        for (unsigned long r = 0; r <= d; ++r) {
            bool ok = reachable[k + 1][r];
            if (!ok && r >= a)
                ok = reachable[k][r - a];
            reachable[k][r] = ok;
        }
    }

    std::vector<ExponentVector> out;
    ExponentVector current(n, 0);
    auto rec = [&](auto&& self, std::size_t k, unsigned long rem) -> void {
        if (k == n) {
            if (rem == 0)
                out.push_back(current);
            return;
        }
        const unsigned long a = ws[order[k]];
        for (unsigned long e = 0; e * a <= rem; ++e) {
            const unsigned long r = rem - e * a;
            if (!reachable[k + 1][r])
                continue;
            current[order[k]] = static_cast<std::int64_t>(e);
            self(self, k + 1, r);
        }
        current[order[k]] = 0;
    };
    if (reachable[0][d])
        rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

MonomialBasis enumerate_monomials(const WeightSystem& w) {
    return MonomialBasis{w, enumerate_monomials(w.weights(), w.degree())};
}

Int count_monomials(std::span<const Int> weights, const Int& degree) {
    const unsigned long d = degree_as_ulong(degree);
    const std::vector<unsigned long> ws = weights_as_ulong(weights);
    std::vector<Int> count(d + 1);
    count[0] = 1;
    for (unsigned long a : ws)
        for (unsigned long r = a; r <= d; ++r)
            count[r] += count[r - a];
    return count[d];
}

bool degree_criterion(const WeightSystem& w) {
    const Int mx = w.max_weight();
    if (w.degree() < 2 * mx)
        return true;
    if (w.degree() != 2 * mx)
        return false;
    const auto attained = std::count(w.weights().begin(), w.weights().end(), mx);
    return attained >= 2;
}

bool is_fano(const WeightSystem& w) {
    return w.weight_sum() > w.degree();
}

Int dim_aut(const WeightSystem& w) {
    Int total = -1;
    for (const Int& a : w.weights())
        total += count_monomials(w.weights(), a);
    return total;
}

Int moduli_lower_bound(const WeightSystem& w) {
    return count_monomials(w.weights(), w.degree()) - 1 - dim_aut(w);
}

} // namespace wph
