#include "wph/singularities.hpp"

#include <algorithm>
#include <sstream>

namespace wph {

CyclicQuotientType::CyclicQuotientType(Int order, std::vector<Int> c)
    : r(std::move(order)), residues(std::move(c)) {
    if (r < 1)
        throw std::invalid_argument("quotient order must be at least 1");
    for (Int& ci : residues) {
        Int reduced;
        mpz_mod(reduced.get_mpz_t(), ci.get_mpz_t(), r.get_mpz_t());
        ci = reduced;
    }
}

CyclicQuotientType CyclicQuotientType::without_zero_residues() const {
    std::vector<Int> kept;
    for (const Int& c : residues)
        if (c != 0)
            kept.push_back(c);
    return CyclicQuotientType(r, std::move(kept));
}

std::optional<Int> reid_tai_failure(const CyclicQuotientType& t, SingularityClass mode) {
    if (t.r == 1)
        return std::nullopt;
    if (!t.r.fits_ulong_p())
        throw std::domain_error("quotient order too large for the direct sum check");
    const unsigned long r = t.r.get_ui();
    // sums of (i*c_j mod r) compared against r stay in 64-bit range as long
    // as r*s does; fall back would be pointless at that size anyway
    if (t.residues.size() >= (1ull << 20) || r > (1ull << 40))
        throw std::domain_error("quotient type too large for the direct sum check");
    std::vector<unsigned long> cs;
    cs.reserve(t.residues.size());
    for (const Int& c : t.residues)
        cs.push_back(c.get_ui());
    const bool strict = mode == SingularityClass::Terminal;
    for (unsigned long i = 1; i < r; ++i) {
        unsigned long long sum = 0;
        for (unsigned long c : cs)
            sum += static_cast<unsigned long long>(i) * c % r;
        if (strict ? sum <= r : sum < r)
            return Int(i);
    }
    return std::nullopt;
}

bool reid_tai(const CyclicQuotientType& t, SingularityClass mode) {
    return !reid_tai_failure(t, mode).has_value();
}

LoopBetas loop_betas(const LoopType& t, std::size_t rotation) {
    const std::size_t n = t.size();
    LoopBetas out;
    out.values.reserve(n - 2);
    Int beta = 1;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        beta = 1 - t.exponents[(rotation + j) % n] * beta;
        out.values.push_back(beta);
    }
    return out;
}

std::vector<CyclicQuotientType> loop_coordinate_types(const LoopType& t,
                                                      const DelsarteDerivation& derivation) {
    if (derivation.weights.size() != t.size())
        throw std::invalid_argument("derivation does not match loop type");
    std::vector<CyclicQuotientType> out;
    out.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        out.emplace_back(derivation.weights[k], loop_betas(t, k).values);
    return out;
}

Rat frac_sum_at(std::span<const Int> betas, const Rat& x) {
    Rat sum = 0;
    for (const Int& b : betas)
        if (b != 0)
            sum += frac(Rat(b) * x);
    return sum;
}

namespace {

constexpr unsigned long long kMaxBreakpoints = 10'000'000;

// One-sided limit of sum_j [beta_j x]; at a point where beta_j x is an
// integer the term tends to 1 from the increasing side and 0 from the
// decreasing side.
Rat frac_sum_limit(std::span<const Int> betas, const Rat& x, bool from_left) {
    Rat sum = 0;
    for (const Int& b : betas) {
        if (b == 0)
            continue;
        Rat y = Rat(b) * x;
        if (y.get_den() == 1) {
            const bool increasing = b > 0;
            sum += (increasing == from_left) ? 1 : 0;
        } else {
            sum += frac(y);
        }
    }
    return sum;
}

} // namespace

Rat frac_sum_left_limit(std::span<const Int> betas, const Rat& x) {
    return frac_sum_limit(betas, x, true);
}

Rat frac_sum_right_limit(std::span<const Int> betas, const Rat& x) {
    return frac_sum_limit(betas, x, false);
}

std::vector<Rat> frac_sum_breakpoints(std::span<const Int> betas) {
    unsigned long long budget = 0;
    for (const Int& b : betas) {
        if (b == 0)
            continue;
        if (!b.fits_slong_p())
            throw std::domain_error("beta value too large for breakpoint analysis");
        budget += static_cast<unsigned long long>(std::abs(b.get_si()));
        if (budget > kMaxBreakpoints)
            throw std::domain_error("too many breakpoints for exact analysis");
    }
    std::vector<Rat> points;
    for (const Int& b : betas) {
        if (b == 0)
            continue;
        const unsigned long m = static_cast<unsigned long>(std::abs(b.get_si()));
        for (unsigned long k = 1; k < m; ++k)
            points.push_back(make_rat(Int(k), Int(m)));
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

namespace {

PiecewiseInfimum eqII_min_rational(std::span<const Int> betas, std::size_t negatives,
                                   std::size_t positives, const Int& slope) {
    const std::vector<Rat> points = frac_sum_breakpoints(betas);

    // limits into the open interval from both ends
    Rat inf = Rat(static_cast<unsigned long>(negatives)); // limit at 0+
    Rat at_one = Rat(static_cast<unsigned long>(positives)); // limit at 1-
    if (at_one < inf)
        inf = at_one;
    bool attained_at_break = false;
    Rat best_value;
    bool have_value = false;
    for (const Rat& p : points) {
        Rat v = frac_sum_at(betas, p);
        if (!have_value || v < best_value) {
            best_value = v;
            have_value = true;
        }
        Rat left = frac_sum_left_limit(betas, p);
        if (left < inf)
            inf = std::move(left);
        Rat right = frac_sum_right_limit(betas, p);
        if (right < inf)
            inf = std::move(right);
    }
    if (have_value && best_value <= inf) {
        inf = best_value;
        attained_at_break = true;
    }
    // every linear piece shares the slope sum(beta); with nonzero slope the
    // interior of a piece never attains the bounding limits
    const bool attained = attained_at_break || slope == 0;
    return PiecewiseInfimum{inf, attained};
}

// value in units of 1/den at x = k/m
struct SmallFraction {
    long long num;
    long long den; // > 0
};

bool fraction_less(const SmallFraction& a, const SmallFraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

bool fraction_equal(const SmallFraction& a, const SmallFraction& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
}

// machine-word evaluation; exact as long as every |beta| < 2^31
PiecewiseInfimum eqII_min_small(const std::vector<long long>& betas, std::size_t negatives,
                                std::size_t positives, long long slope) {
    std::vector<SmallFraction> points;
    for (long long b : betas) {
        const long long m = b < 0 ? -b : b;
        for (long long k = 1; k < m; ++k)
            points.push_back(SmallFraction{k, m});
    }
    std::sort(points.begin(), points.end(), fraction_less);
    points.erase(std::unique(points.begin(), points.end(), fraction_equal), points.end());

    auto value_at = [&](const SmallFraction& x, int side) {
        // side: -1 left limit, 0 value, +1 right limit; result in units of 1/x.den
        long long total = 0;
        for (long long b : betas) {
            long long rem = (b % x.den) * x.num % x.den;
            if (rem < 0)
                rem += x.den;
            if (rem == 0 && side != 0)
                total += ((b > 0) == (side < 0)) ? x.den : 0;
            else
                total += rem;
        }
        return SmallFraction{total, x.den};
    };

    SmallFraction inf{static_cast<long long>(std::min(negatives, positives)), 1};
    SmallFraction best_value{0, 1};
    bool have_value = false, attained_at_break = false;
    for (const SmallFraction& p : points) {
        const SmallFraction v = value_at(p, 0);
        if (!have_value || fraction_less(v, best_value)) {
            best_value = v;
            have_value = true;
        }
        const SmallFraction left = value_at(p, -1);
        if (fraction_less(left, inf))
            inf = left;
        const SmallFraction right = value_at(p, +1);
        if (fraction_less(right, inf))
            inf = right;
    }
    if (have_value && !fraction_less(inf, best_value)) {
        inf = best_value;
        attained_at_break = true;
    }
    const bool attained = attained_at_break || slope == 0;
    return PiecewiseInfimum{make_rat(Int(static_cast<long>(inf.num)), Int(static_cast<long>(inf.den))),
                            attained};
}

} // namespace

PiecewiseInfimum eqII_min(std::span<const Int> betas) {
    bool any_nonzero = false;
    Int slope = 0;
    std::size_t negatives = 0, positives = 0;
    bool small = true;
    std::vector<long long> small_betas;
    unsigned long long budget = 0;
    for (const Int& b : betas) {
        if (b == 0)
            continue;
        any_nonzero = true;
        slope += b;
        (b < 0 ? negatives : positives)++;
        if (small && b.fits_slong_p()) {
            const long long v = b.get_si();
            const unsigned long long mag = v < 0 ? -static_cast<unsigned long long>(v) : v;
            if (mag < (1ull << 31)) {
                small_betas.push_back(v);
                budget += mag;
            } else {
                small = false;
            }
        } else {
            small = false;
        }
    }
    if (!any_nonzero)
        throw std::invalid_argument("all beta values are zero");
    if (budget > kMaxBreakpoints)
        throw std::domain_error("too many breakpoints for exact analysis");
    if (small)
        return eqII_min_small(small_betas, negatives, positives, slope.get_si());
    return eqII_min_rational(betas, negatives, positives, slope);
}

bool eqII_meets(const PiecewiseInfimum& result, SingularityClass mode) {
    if (mode == SingularityClass::Canonical)
        return result.infimum >= 1;
    if (result.infimum > 1)
        return true;
    return result.infimum == 1 && !result.attained;
}

bool eqII_sufficient(const LoopType& t, SingularityClass mode,
                     std::optional<std::size_t> prefix) {
    for (std::size_t rot = 0; rot < t.size(); ++rot) {
        std::vector<Int> betas = loop_betas(t, rot).values;
        if (prefix && *prefix < betas.size())
            betas.resize(*prefix);
        if (!eqII_meets(eqII_min(betas), mode))
            return false;
    }
    return true;
}

NotQuasismoothError::NotQuasismoothError(std::vector<std::size_t> s)
    : std::runtime_error([&s] {
          std::ostringstream msg;
          msg << "family cannot be quasismooth along stratum {";
          for (std::size_t i = 0; i < s.size(); ++i)
              msg << (i ? "," : "") << s[i];
          msg << "}";
          return msg.str();
      }()),
      stratum(std::move(s)) {}

std::vector<StratumReport> strata_singularities(const WeightSystem& w, const MonomialBasis& basis) {
    const std::size_t nv = w.variable_count();
    if (nv > 24)
        throw std::domain_error("too many variables for subset analysis");
    const std::vector<Int>& weights = w.weights();

    std::vector<std::uint32_t> support(basis.monomials.size(), 0);
    for (std::size_t k = 0; k < basis.monomials.size(); ++k)
        for (std::size_t j = 0; j < nv; ++j)
            if (basis.monomials[k][j] > 0)
                support[k] |= (1u << j);

    // gcd of each weight subset by peeling the lowest set bit
    const std::uint32_t full = (nv == 32) ? ~0u : ((1u << nv) - 1);
    std::vector<Int> subset_gcd(static_cast<std::size_t>(full) + 1, Int(0));
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
        const std::uint32_t rest = mask & (mask - 1);
        Int g;
        mpz_gcd(g.get_mpz_t(), subset_gcd[rest].get_mpz_t(), weights[low].get_mpz_t());
        subset_gcd[mask] = g;
    }

    std::vector<StratumReport> reports;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const Int& r = subset_gcd[mask];
        if (r <= 1)
            continue;
        std::vector<std::size_t> stratum;
        for (std::size_t j = 0; j < nv; ++j)
            if (mask >> j & 1)
                stratum.push_back(j);

        bool supported_inside = false;
        for (std::uint32_t s : support)
            if ((s & ~mask) == 0) {
                supported_inside = true;
                break;
            }
        if (supported_inside) {
            std::vector<Int> cs;
            for (std::size_t j = 0; j < nv; ++j)
                if (!(mask >> j & 1))
                    cs.push_back(weights[j]);
            reports.push_back(StratumReport{std::move(stratum), r, false,
                                            CyclicQuotientType(r, std::move(cs)), std::nullopt});
            continue;
        }

        std::optional<std::size_t> eliminated;
        for (std::size_t j = 0; j < nv && !eliminated; ++j) {
            if (mask >> j & 1)
                continue;
            for (std::size_t k = 0; k < basis.monomials.size(); ++k) {
                if ((support[k] & ~mask) == (1u << j) && basis.monomials[k][j] == 1) {
                    eliminated = j;
                    break;
                }
            }
        }
        if (!eliminated)
            throw NotQuasismoothError(std::move(stratum));

        std::vector<Int> cs;
        for (std::size_t j = 0; j < nv; ++j)
            if (!(mask >> j & 1) && j != *eliminated)
                cs.push_back(weights[j]);
        reports.push_back(StratumReport{std::move(stratum), r, true,
                                        CyclicQuotientType(r, std::move(cs)), eliminated});
    }
    return reports;
}

SingularityVerdict classify_hypersurface(const WeightSystem& w, const MonomialBasis& basis,
                                         const ClassifyOptions& options) {
    SingularityVerdict verdict;
    verdict.strata = strata_singularities(w, basis);
    bool undecided = false;
    for (const StratumReport& report : verdict.strata) {
        if (report.r > options.reid_tai_cap) {
            undecided = true;
            continue;
        }
        const CyclicQuotientType type = report.transverse.without_zero_residues();
        if (auto i = reid_tai_failure(type, SingularityClass::Canonical)) {
            verdict.canonical = Answer::No;
            verdict.witnesses.push_back(
                SingularityWitness{SingularityClass::Canonical, report.stratum, type, *i});
        }
        if (auto i = reid_tai_failure(type, SingularityClass::Terminal)) {
            verdict.terminal = Answer::No;
            verdict.witnesses.push_back(
                SingularityWitness{SingularityClass::Terminal, report.stratum, type, *i});
        }
    }
    if (undecided) {
        if (verdict.canonical == Answer::Yes)
            verdict.canonical = Answer::Undecided;
        if (verdict.terminal == Answer::Yes)
            verdict.terminal = Answer::Undecided;
    }
    return verdict;
}

} // namespace wph
