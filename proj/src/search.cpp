#include "wph/search.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace wph {

namespace {

// Loop types within one dimension enumerate as digits in base
// (max_exponent - 1), most significant digit first, offset by 2.
struct LoopSpace {
    std::size_t min_n, max_n;
    unsigned long radix; // number of choices per exponent

    std::uint64_t block_size(std::size_t n) const {
        const std::size_t length = n + 2;
        std::uint64_t size = 1;
        for (std::size_t i = 0; i < length; ++i) {
            if (size > (UINT64_MAX >> 8) / std::max(1ul, radix))
                throw std::invalid_argument("loop search space too large");
            size *= radix;
        }
        return size;
    }

    std::uint64_t total() const {
        if (min_n > max_n)
            return 0;
        std::uint64_t sum = 0;
        for (std::size_t n = min_n; n <= max_n; ++n)
            sum += block_size(n);
        return sum;
    }

    LoopType decode(std::uint64_t index) const {
        std::size_t n = min_n;
        for (;; ++n) {
            const std::uint64_t block = block_size(n);
            if (index < block)
                break;
            index -= block;
        }
        const std::size_t length = n + 2;
        std::vector<Int> exponents(length);
        for (std::size_t i = length; i-- > 0;) {
            exponents[i] = Int(2 + static_cast<unsigned long>(index % radix));
            index /= radix;
        }
        return LoopType(std::move(exponents));
    }
};

// Two-weight candidates enumerate lexicographically over (a, c, k, l) with
// a < c; invalid tuples (gcd != 1, dimension out of range) are skipped
// during processing so the index layout stays a plain product.
struct TwoWeightSpace {
    unsigned long max_weight;
    std::uint64_t max_multiplicity;

    std::uint64_t total() const {
        const std::uint64_t w = max_weight, m = max_multiplicity;
        if (w == 0 || m == 0)
            return 0;
        if (w > 4096 || m > 4096)
            throw std::invalid_argument("two-weight search space too large");
        return w * w * m * m;
    }

    TwoWeightParams decode(std::uint64_t index) const {
        const std::uint64_t m = max_multiplicity, w = max_weight;
        const std::uint64_t l = index % m;
        index /= m;
        const std::uint64_t k = index % m;
        index /= m;
        const std::uint64_t c = index % w;
        index /= w;
        const std::uint64_t a = index;
        return TwoWeightParams{Int(static_cast<unsigned long>(a + 1)),
                               Int(static_cast<unsigned long>(c + 1)),
                               static_cast<std::size_t>(k + 1), static_cast<std::size_t>(l + 1)};
    }
};

struct Pipeline {
    const SearchSpec& spec;

    bool required(SearchFilter f) const { return spec.require.count(f) != 0; }

    // Applies filters cheap to expensive. Returns the report for a hit,
    // nullopt for a rejected candidate; sets undecided when the classifier
    // hit its cap.
    std::optional<FamilyReport> evaluate(const WeightSystem& ws,
                                         const std::optional<LoopType>& loop,
                                         bool& undecided) const {
        if (required(SearchFilter::WellFormed) && !is_well_formed(ws))
            return std::nullopt;
        if (required(SearchFilter::FailsDegreeCriterion) && degree_criterion(ws))
            return std::nullopt;
        if (required(SearchFilter::Fano) && !is_fano(ws))
            return std::nullopt;
        // Klt: quotient singularities of a quasismooth family in
        // characteristic 0 are always klt, so the filter never rejects.

        std::optional<MonomialBasis> basis;
        auto get_basis = [&]() -> const MonomialBasis& {
            if (!basis)
                basis = enumerate_monomials(ws);
            return *basis;
        };

        std::optional<SingularityVerdict> verdict;
        const bool wants_terminal = required(SearchFilter::Terminal);
        const bool wants_canonical = required(SearchFilter::Canonical) || wants_terminal;
        if (wants_canonical) {
            const SingularityClass mode =
                wants_terminal ? SingularityClass::Terminal : SingularityClass::Canonical;
            // Exponent-only sufficient test as an accept-fast path; it never
            // rejects, rejection always comes from the full criterion below.
            bool fast_accept = false;
            if (loop) {
                try {
                    fast_accept = eqII_sufficient(*loop, mode, 8);
                } catch (const std::domain_error&) {
                    fast_accept = false; // beta values too large; fall through
                }
            }
            if (fast_accept) {
                SingularityVerdict v;
                v.canonical = Answer::Yes;
                v.terminal = mode == SingularityClass::Terminal ? Answer::Yes : Answer::Undecided;
                verdict = std::move(v);
            }
            if (!verdict || (wants_terminal && verdict->terminal != Answer::Yes)) {
                verdict = classify_hypersurface(ws, get_basis(), spec.classify);
            }
            const Answer answer = wants_terminal ? verdict->terminal : verdict->canonical;
            if (answer == Answer::Undecided) {
                undecided = true;
                return std::nullopt;
            }
            if (answer != Answer::Yes)
                return std::nullopt;
        }

        CertifyOptions options;
        options.classify = spec.classify;
        options.quasismooth = loop ? QuasismoothStatus::Certified : QuasismoothStatus::Assumed;
        std::optional<DelsarteMatrix> matrix;
        if (loop) {
            DelsarteMatrix lm = loop_matrix(*loop);
            // attach only when it describes the whole family
            std::vector<ExponentVector> rows;
            for (std::size_t i = 0; i < lm.size(); ++i)
                rows.push_back(lm.row(i));
            std::sort(rows.begin(), rows.end());
            if (rows == get_basis().monomials)
                matrix.emplace(std::move(lm));
        }
        if (required(SearchFilter::Rational)) {
            const auto certs = rationality_certificates(ws, get_basis(), matrix, options.assumptions);
            const bool rational = std::any_of(certs.begin(), certs.end(),
                                              [](const RationalityCertificate& c) { return c.family_level; });
            if (!rational)
                return std::nullopt;
        }

        options.precomputed_verdict = std::nullopt;
        if (verdict && !verdict->strata.empty())
            options.precomputed_verdict = verdict; // full classification already ran
        return certify(ws, get_basis(), matrix, options);
    }
};

template <typename Space>
SearchResult run_over(const SearchSpec& spec, const Space& space,
                      auto&& make_candidate) {
    SearchResult result;
    result.candidates_total = space.total();
    if (result.candidates_total == 0)
        return result;

    const Pipeline pipeline{spec};
    constexpr std::uint64_t kChunk = 64;
    const std::uint64_t num_chunks = (result.candidates_total + kChunk - 1) / kChunk;

    struct ChunkOutput {
        std::vector<SearchHit> hits;
        std::uint64_t processed = 0;
        std::uint64_t undecided = 0;
    };

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> cancelled{false};
    std::mutex mutex;
    std::map<std::uint64_t, ChunkOutput> done;
    std::uint64_t frontier = 0;       // chunks [0, frontier) all complete
    std::uint64_t hits_in_frontier = 0;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            if (cancelled.load(std::memory_order_relaxed))
                return;
            const std::uint64_t chunk = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (chunk >= num_chunks)
                return;
            ChunkOutput output;
            try {
                const std::uint64_t begin = chunk * kChunk;
                const std::uint64_t end = std::min(result.candidates_total, begin + kChunk);
                for (std::uint64_t index = begin; index < end; ++index) {
                    ++output.processed;
                    auto candidate = space.decode(index);
                    bool undecided = false;
                    std::optional<FamilyReport> report;
                    if (auto prepared = make_candidate(candidate)) {
                        try {
                            report = pipeline.evaluate(prepared->first, prepared->second, undecided);
                        } catch (const NotQuasismoothError&) {
                            // no quasismooth member exists; not a candidate family
                        } catch (const std::domain_error&) {
                            undecided = true; // out of range for exact analysis
                        }
                    }
                    if (undecided)
                        ++output.undecided;
                    if (report)
                        output.hits.push_back(SearchHit{index, std::move(candidate), std::move(*report)});
                }
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!failure)
                    failure = std::current_exception();
                cancelled.store(true, std::memory_order_relaxed);
                return;
            }
            std::lock_guard lock(mutex);
            done.emplace(chunk, std::move(output));
            while (true) {
                auto it = done.find(frontier);
                if (it == done.end())
                    break;
                hits_in_frontier += it->second.hits.size();
                ++frontier;
            }
            if (spec.limit && hits_in_frontier >= *spec.limit)
                cancelled.store(true, std::memory_order_relaxed);
        }
    };

    unsigned workers = spec.workers == 0 ? std::thread::hardware_concurrency() : spec.workers;
    workers = std::max(1u, workers);
    {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            threads.emplace_back(worker);
        for (auto& t : threads)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    // assemble in candidate order from the contiguous completed prefix; on a
    // full run the prefix is everything
    for (std::uint64_t chunk = 0; chunk < frontier; ++chunk) {
        ChunkOutput& output = done.at(chunk);
        result.candidates_processed += output.processed;
        result.undecided += output.undecided;
        for (SearchHit& hit : output.hits) {
            if (spec.limit && result.hits.size() >= *spec.limit) {
                result.truncated = true;
                break;
            }
            result.hits.push_back(std::move(hit));
        }
        if (result.truncated)
            break;
    }
    return result;
}

using PreparedCandidate = std::optional<std::pair<WeightSystem, std::optional<LoopType>>>;

} // namespace

SearchResult run_search(const SearchSpec& spec) {
    if (spec.min_dimension < 1)
        throw std::invalid_argument("dimension must be at least 1");
    if (spec.limit && *spec.limit == 0)
        throw std::invalid_argument("result limit must be positive");

    if (spec.kind == FamilyKind::Loop) {
        if (spec.max_exponent < 1 || !spec.max_exponent.fits_ulong_p())
            throw std::invalid_argument("loop exponent bound must be a small positive integer");
        const unsigned long radix =
            spec.max_exponent < 2 ? 0 : spec.max_exponent.get_ui() - 1;
        if (radix == 0 || spec.min_dimension > spec.max_dimension)
            return SearchResult{};
        LoopSpace space{spec.min_dimension, spec.max_dimension, radix};
        return run_over(spec, space, [&](const LoopType& type) -> PreparedCandidate {
            DelsarteDerivation derivation;
            try {
                derivation = derive_weights(loop_matrix(type));
            } catch (const std::domain_error&) {
                return std::nullopt; // degenerate weights
            }
            return std::make_pair(derivation.weight_system(), std::optional<LoopType>(type));
        });
    }

    if (spec.max_weight < 1 || !spec.max_weight.fits_ulong_p())
        throw std::invalid_argument("weight bound must be a small positive integer");
    if (spec.max_multiplicity < 1)
        throw std::invalid_argument("multiplicity bound must be positive");
    if (spec.min_dimension > spec.max_dimension)
        return SearchResult{};
    TwoWeightSpace space{spec.max_weight.get_ui(), spec.max_multiplicity};
    return run_over(spec, space, [&](const TwoWeightParams& params) -> PreparedCandidate {
        if (params.a >= params.c)
            return std::nullopt;
        Int g;
        mpz_gcd(g.get_mpz_t(), params.a.get_mpz_t(), params.c.get_mpz_t());
        if (g != 1)
            return std::nullopt;
        const std::size_t n = params.k + params.l - 2;
        if (n < spec.min_dimension || n > spec.max_dimension)
            return std::nullopt;
        if (params.k + params.l < 3)
            return std::nullopt;
        std::vector<Int> weights;
        weights.reserve(params.k + params.l);
        for (std::size_t i = 0; i < params.k; ++i)
            weights.push_back(params.c);
        for (std::size_t i = 0; i < params.l; ++i)
            weights.push_back(params.a);
        return std::make_pair(WeightSystem(std::move(weights), params.a * params.c),
                              std::optional<LoopType>());
    });
}

} // namespace wph
