#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sortsearch/instance.hpp"

namespace sortsearch {

/// Seeded random source: std::mt19937_64 for the raw stream plus explicit
/// transforms (rejection sampling, Box-Muller, inverse exponential) so that
/// generated instances are reproducible independent of the standard library's
/// unspecified distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), modulo rejection to stay unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t r;
        do {
            r = next();
        } while (r < reject);
        return r % bound;
    }

    /// Uniform double in (0, 1].
    double unit() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    double normal(double mean, double stddev) {
        const double u1 = unit();
        const double u2 = unit();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
        return mean + stddev * z;
    }

    double exponential(double scale) { return -scale * std::log(unit()); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 step, used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t acc = 0x8f1bbcdcbfa53e0bull;
    for (std::uint64_t p : parts) acc = mix_seed(acc ^ p);
    return acc;
}

/// Statistics of the consecutive-value gaps of an instance: gap count N,
/// value range R = last - first + 1, and the gap moments. The sum of the
/// gaps is R - 1 by construction, so mean == (R - 1) / N.
struct GapSummary {
    std::uint64_t gap_count = 0;
    std::uint64_t range = 0;
    double mean = 0.0;
    double stddev = 0.0;  // population convention, divisor N
    std::uint64_t min_gap = 0;
    std::uint64_t max_gap = 0;
};

inline GapSummary gap_summary(const SortedInstance& a) {
    if (a.size() < 2)
        throw std::invalid_argument("gap_summary: need at least 2 elements (no gaps)");
    GapSummary s;
    s.gap_count = a.size() - 1;
    s.range = static_cast<std::uint64_t>(a.back()) - static_cast<std::uint64_t>(a.front()) + 1;
    s.min_gap = UINT64_MAX;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const std::uint64_t g =
            static_cast<std::uint64_t>(a[i + 1]) - static_cast<std::uint64_t>(a[i]);
        if (g < s.min_gap) s.min_gap = g;
        if (g > s.max_gap) s.max_gap = g;
        sum += static_cast<double>(g);
    }
    s.mean = sum / static_cast<double>(s.gap_count);
    double sq = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const std::uint64_t g =
            static_cast<std::uint64_t>(a[i + 1]) - static_cast<std::uint64_t>(a[i]);
        const double d = static_cast<double>(g) - s.mean;
        sq += d * d;
    }
    s.stddev = std::sqrt(sq / static_cast<double>(s.gap_count));
    return s;
}

// ---- distribution recipes -------------------------------------------------

struct UniformGap {
    std::int64_t gap = 10;
};

struct IncreasingGap {
    std::int64_t initial_gap = 1;
    std::int64_t growth_step = 1;
};

struct StepwiseGap {
    std::vector<std::int64_t> zone_gaps = {1, 10, 100, 1000};  // ascending
};

struct Paretian {
    double split = 0.8;        // value-sum balance point
    double base_scale = 1000.0;  // scale of the exponential base gaps
};

struct GaussianGap {
    double mean = 1000.0;
    double stddev = 100.0;
};

struct NullModel {
    GapSummary target;  // match gap count, range (exactly), mean and stddev
};

using DistributionKind =
    std::variant<UniformGap, IncreasingGap, StepwiseGap, Paretian, GaussianGap, NullModel>;

/// Full recipe for one synthetic instance: the gap distribution, the element
/// count, the first value, and the RNG seed.
struct DistributionSpec {
    DistributionKind kind;
    std::size_t n = 1;
    std::int64_t start = 0;
    std::uint64_t seed = 42;
};

inline const char* distribution_name(const DistributionKind& kind) {
    struct Visitor {
        const char* operator()(const UniformGap&) const { return "uniform"; }
        const char* operator()(const IncreasingGap&) const { return "increasing"; }
        const char* operator()(const StepwiseGap&) const { return "stepwise"; }
        const char* operator()(const Paretian&) const { return "paretian"; }
        const char* operator()(const GaussianGap&) const { return "gaussian"; }
        const char* operator()(const NullModel&) const { return "nullmodel"; }
    };
    return std::visit(Visitor{}, kind);
}

namespace detail {

inline SortedInstance instance_from_gaps(std::int64_t start,
                                         const std::vector<std::uint64_t>& gaps) {
    std::vector<std::int64_t> values;
    values.reserve(gaps.size() + 1);
    __int128 v = start;
    values.push_back(start);
    for (std::uint64_t g : gaps) {
        v += static_cast<__int128>(g);
        if (v > INT64_MAX)
            throw std::invalid_argument("generate: instance exceeds the 64-bit value range");
        values.push_back(static_cast<std::int64_t>(v));
    }
    return SortedInstance(std::move(values));
}

inline std::uint64_t positive_gap(double raw) {
    if (!(raw > 0.5)) return 1;
    const double r = std::nearbyint(raw);
    if (r >= 9.007199254740992e15) return static_cast<std::uint64_t>(9.007199254740992e15);
    return static_cast<std::uint64_t>(r);
}

inline SortedInstance generate_paretian(const Paretian& p, std::size_t n, std::int64_t start,
                                        std::uint64_t seed) {
    if (n == 1) return SortedInstance({start});
    if (!(p.split > 0.0 && p.split < 1.0))
        throw std::invalid_argument("generate: paretian split must lie in (0, 1)");
    Rng rng(mix_seed({seed, 0x70617265ull}));
    std::vector<double> base(n - 1);
    for (double& b : base) b = rng.exponential(p.base_scale);

    std::size_t head = static_cast<std::size_t>(std::llround(p.split * static_cast<double>(n)));
    if (head < 1) head = 1;
    if (head > n - 1) head = n - 1;
    const std::size_t scaled_from = head - 1;  // gaps feeding the tail elements

    // value sums of the head [0, head) and tail [head, n) for a given tail
    // gap multiplier
    auto evaluate = [&](double lambda, std::vector<std::uint64_t>* out_gaps) {
        __int128 value = start, head_sum = 0, tail_sum = 0;
        if (out_gaps) out_gaps->clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) {
                const double raw = base[i - 1] * (i - 1 >= scaled_from ? lambda : 1.0);
                const std::uint64_t g = positive_gap(raw);
                value += static_cast<__int128>(g);
                if (out_gaps) out_gaps->push_back(g);
            }
            (i < head ? head_sum : tail_sum) += value;
        }
        return std::pair<__int128, __int128>(head_sum, tail_sum);
    };

    auto balanced = [](__int128 head_sum, __int128 tail_sum) {
        const __int128 diff = head_sum > tail_sum ? head_sum - tail_sum : tail_sum - head_sum;
        __int128 total = head_sum + tail_sum;
        if (total < 0) total = -total;
        return static_cast<double>(diff) <= 0.01 * static_cast<double>(total);
    };

    double lo = 1e-9, hi = 1e15;
    for (int iter = 0; iter < 400; ++iter) {
        const double mid = std::sqrt(lo * hi);  // geometric bisection
        const auto [head_sum, tail_sum] = evaluate(mid, nullptr);
        if (balanced(head_sum, tail_sum)) {
            std::vector<std::uint64_t> gaps;
            evaluate(mid, &gaps);
            return instance_from_gaps(start, gaps);
        }
        (tail_sum < head_sum ? lo : hi) = mid;
    }
    throw std::invalid_argument(
        "generate: paretian cannot balance the value sums within 1% for n=" + std::to_string(n) +
        ", start=" + std::to_string(start) + "; a larger n or start makes it feasible");
}

inline SortedInstance generate_null_model(const NullModel& nm, std::size_t n, std::int64_t start,
                                          std::uint64_t seed) {
    const std::uint64_t gap_count = nm.target.gap_count;
    if (gap_count == 0 || n != gap_count + 1)
        throw std::invalid_argument("generate: null model needs n == target.gap_count + 1 >= 2");
    const std::uint64_t span = nm.target.range - 1;  // required gap sum
    if (span < gap_count)
        throw std::invalid_argument("generate: null model range too small for positive gaps");

    Rng rng(mix_seed({seed, 0x6e756c6cull}));
    std::vector<std::uint64_t> gaps(gap_count);
    double sum = 0.0;
    for (auto& g : gaps) {
        g = positive_gap(rng.normal(nm.target.mean, nm.target.stddev));
        sum += static_cast<double>(g);
    }
    // rescale ~exactly onto the target span, then settle the residual +-1 at
    // random positions so the range matches bit-exactly
    const double scale = static_cast<double>(span) / sum;
    __int128 total = 0;
    for (auto& g : gaps) {
        g = positive_gap(static_cast<double>(g) * scale);
        total += static_cast<__int128>(g);
    }
    __int128 residual = static_cast<__int128>(span) - total;
    while (residual != 0) {
        const std::size_t j = static_cast<std::size_t>(rng.below(gap_count));
        if (residual > 0) {
            ++gaps[j];
            --residual;
        } else if (gaps[j] >= 2) {
            --gaps[j];
            ++residual;
        }
    }
    return instance_from_gaps(start, gaps);
}

}  // namespace detail

/// Builds the instance a spec describes. Deterministic per seed; rejects
/// parameter sets that cannot produce strictly positive gaps or that leave
/// the 64-bit value range.
inline SortedInstance generate(const DistributionSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("generate: n must be >= 1");

    struct Visitor {
        const DistributionSpec& spec;

        SortedInstance operator()(const UniformGap& u) const {
            if (u.gap < 1) throw std::invalid_argument("generate: uniform gap must be >= 1");
            std::vector<std::uint64_t> gaps(spec.n - 1, static_cast<std::uint64_t>(u.gap));
            return detail::instance_from_gaps(spec.start, gaps);
        }

        SortedInstance operator()(const IncreasingGap& g) const {
            if (g.initial_gap < 1 || g.growth_step < 0)
                throw std::invalid_argument(
                    "generate: increasing needs initial_gap >= 1 and growth_step >= 0");
            std::vector<std::uint64_t> gaps;
            gaps.reserve(spec.n - 1);
            for (std::size_t i = 0; i + 1 < spec.n; ++i)
                gaps.push_back(static_cast<std::uint64_t>(g.initial_gap) +
                               static_cast<std::uint64_t>(g.growth_step) * i);
            return detail::instance_from_gaps(spec.start, gaps);
        }

        SortedInstance operator()(const StepwiseGap& sw) const {
            if (sw.zone_gaps.empty())
                throw std::invalid_argument("generate: stepwise needs at least one zone");
            for (std::size_t z = 0; z < sw.zone_gaps.size(); ++z) {
                if (sw.zone_gaps[z] < 1)
                    throw std::invalid_argument("generate: stepwise zone gaps must be >= 1");
                if (z > 0 && sw.zone_gaps[z] < sw.zone_gaps[z - 1])
                    throw std::invalid_argument("generate: stepwise zone gaps must be ascending");
            }
            const std::size_t zones = sw.zone_gaps.size();
            std::vector<std::uint64_t> gaps;
            gaps.reserve(spec.n - 1);
            const std::size_t gap_count = spec.n - 1;
            for (std::size_t i = 0; i < gap_count; ++i) {
                std::size_t z = i * zones / gap_count;
                if (z >= zones) z = zones - 1;
                gaps.push_back(static_cast<std::uint64_t>(sw.zone_gaps[z]));
            }
            return detail::instance_from_gaps(spec.start, gaps);
        }

        SortedInstance operator()(const Paretian& p) const {
            return detail::generate_paretian(p, spec.n, spec.start, spec.seed);
        }

        SortedInstance operator()(const GaussianGap& g) const {
            if (!(g.mean > 0.0) || g.stddev < 0.0)
                throw std::invalid_argument("generate: gaussian needs mean > 0 and stddev >= 0");
            Rng rng(mix_seed({spec.seed, 0x67617573ull}));
            std::vector<std::uint64_t> gaps(spec.n - 1);
            for (auto& gap : gaps) gap = detail::positive_gap(rng.normal(g.mean, g.stddev));
            return detail::instance_from_gaps(spec.start, gaps);
        }

        SortedInstance operator()(const NullModel& nm) const {
            return detail::generate_null_model(nm, spec.n, spec.start, spec.seed);
        }
    };
    return std::visit(Visitor{spec}, spec.kind);
}

/// Spec with this library's documented default parameters for a distribution
/// name (uniform, increasing, stepwise, paretian, gaussian).
inline DistributionSpec default_spec(std::string_view name, std::size_t n, std::uint64_t seed,
                                     std::int64_t start = 0) {
    DistributionSpec spec;
    spec.n = n;
    spec.start = start;
    spec.seed = seed;
    if (name == "uniform")
        spec.kind = UniformGap{};
    else if (name == "increasing")
        spec.kind = IncreasingGap{};
    else if (name == "stepwise")
        spec.kind = StepwiseGap{};
    else if (name == "paretian")
        spec.kind = Paretian{};
    else if (name == "gaussian")
        spec.kind = GaussianGap{};
    else
        throw std::invalid_argument("unknown distribution: " + std::string(name));
    return spec;
}

}  // namespace sortsearch
