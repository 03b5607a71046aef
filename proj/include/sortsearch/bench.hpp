#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sortsearch/binned.hpp"
#include "sortsearch/generate.hpp"
#include "sortsearch/instance.hpp"
#include "sortsearch/search.hpp"

namespace sortsearch {

enum class Algorithm { binary, interpolation, interpolation_binary, adaptive, binned };

struct AlgorithmSpec {
    Algorithm kind = Algorithm::adaptive;
    unsigned theta = 2;  // interpolation_binary only

    std::string label() const {
        switch (kind) {
            case Algorithm::binary: return "bs";
            case Algorithm::interpolation: return "is";
            case Algorithm::interpolation_binary: return "ibs" + std::to_string(theta);
            case Algorithm::adaptive: return "as";
            case Algorithm::binned: return "binned";
        }
        return "?";
    }
};

/// Parses the CLI algorithm token: bs, is, as, binned, ibs, ibs<theta>.
inline AlgorithmSpec parse_algorithm(std::string_view token) {
    if (token == "bs") return {Algorithm::binary, 2};
    if (token == "is") return {Algorithm::interpolation, 2};
    if (token == "as") return {Algorithm::adaptive, 2};
    if (token == "binned") return {Algorithm::binned, 2};
    if (token.rfind("ibs", 0) == 0) {
        AlgorithmSpec spec{Algorithm::interpolation_binary, 2};
        if (token.size() > 3) {
            unsigned theta = 0;
            for (char c : token.substr(3)) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("bad algorithm token: " + std::string(token));
                theta = theta * 10 + static_cast<unsigned>(c - '0');
            }
            if (theta == 0) throw std::invalid_argument("ibs theta must be >= 1");
            spec.theta = theta;
        }
        return spec;
    }
    throw std::invalid_argument("unknown algorithm: " + std::string(token));
}

/// Query keys for a benchmark run over one instance. hit_count of them are
/// members; the rest are guaranteed misses drawn from gap interiors, with a
/// sprinkle of out-of-range keys.
struct QueryWorkload {
    std::vector<std::int64_t> keys;
    std::size_t hit_count = 0;
};

inline QueryWorkload make_workload(const SortedInstance& a, double query_ratio,
                                   double hit_fraction, std::uint64_t seed) {
    if (!(query_ratio > 0.0 && query_ratio <= 1.0))
        throw std::invalid_argument("make_workload: query_ratio must be in (0, 1]");
    if (!(hit_fraction >= 0.0 && hit_fraction <= 1.0))
        throw std::invalid_argument("make_workload: hit_fraction must be in [0, 1]");
    const std::size_t n = a.size();
    const std::size_t count = std::max<std::size_t>(
        1, static_cast<std::size_t>(static_cast<double>(n) * query_ratio));
    const std::size_t hits = std::min<std::size_t>(
        count, static_cast<std::size_t>(std::ceil(hit_fraction * static_cast<double>(count))));

    Rng rng(mix_seed({seed, 0x776f726bull}));
    QueryWorkload w;
    w.keys.reserve(count);
    w.hit_count = hits;
    for (std::size_t i = 0; i < hits; ++i)
        w.keys.push_back(a[static_cast<std::size_t>(rng.below(n))]);
    for (std::size_t m = 0; m < count - hits; ++m) {
        const std::size_t style = m % 8;
        std::optional<std::int64_t> key;
        if (style >= 2 && n >= 2) {
            // miss inside a gap so the search walks a full path
            for (int attempt = 0; attempt < 64 && !key; ++attempt) {
                const std::size_t g = static_cast<std::size_t>(rng.below(n - 1));
                const std::uint64_t width =
                    static_cast<std::uint64_t>(a[g + 1]) - static_cast<std::uint64_t>(a[g]);
                if (width >= 2)
                    key = a[g] + 1 + static_cast<std::int64_t>(rng.below(width - 1));
            }
        }
        if (!key) {
            const std::int64_t off = 1 + static_cast<std::int64_t>(rng.below(1000));
            key = (style % 2 == 0) ? a.front() - off : a.back() + off;
        }
        w.keys.push_back(*key);
    }
    // Fisher-Yates so hits and misses interleave
    for (std::size_t i = w.keys.size(); i > 1; --i)
        std::swap(w.keys[i - 1], w.keys[static_cast<std::size_t>(rng.below(i))]);
    return w;
}

struct BenchmarkConfig {
    std::vector<AlgorithmSpec> algorithms;
    std::vector<DistributionSpec> specs;
    unsigned repetitions = 10;
    double query_ratio = 0.001;
    double hit_fraction = 0.8;
    std::uint64_t seed = 42;
};

struct BenchmarkRow {
    std::string distribution;
    std::size_t n = 0;
    std::string algorithm;
    double accesses_per_query = 0.0;
    double iterations_per_query = 0.0;
    double time_ns_per_query = 0.0;
    double stddev_accesses = 0.0;  // across repetitions, population convention
};

struct BenchmarkReport {
    std::vector<BenchmarkRow> rows;
};

/// Sub-seed derivation is part of the harness contract: a report is
/// reproducible from (config.seed, spec index, repetition) alone.
inline std::uint64_t benchmark_instance_seed(std::uint64_t config_seed, std::uint64_t spec_seed,
                                             std::size_t spec_index, unsigned repetition) {
    return mix_seed({config_seed, spec_seed, spec_index, repetition, 0x696e7374ull});
}

inline std::uint64_t benchmark_workload_seed(std::uint64_t config_seed, std::uint64_t spec_seed,
                                             std::size_t spec_index, unsigned repetition) {
    return mix_seed({config_seed, spec_seed, spec_index, repetition, 0x71756572ull});
}

struct SingleRun {
    ProbeMetrics totals;
    double elapsed_ns = 0.0;
};

/// Runs every key of the workload through one algorithm; the clock wraps the
/// query loop only (index construction for binned is outside it).
inline SingleRun run_workload(const SortedInstance& a, const AlgorithmSpec& algo,
                              const QueryWorkload& workload) {
    SingleRun run;
    std::optional<BinnedIndex> index;
    if (algo.kind == Algorithm::binned) index.emplace(a);
    const IbsConfig ibs_cfg{algo.theta};

    const auto t0 = std::chrono::steady_clock::now();
    for (const std::int64_t key : workload.keys) {
        SearchResult r;
        switch (algo.kind) {
            case Algorithm::binary: r = binary_search(a, key); break;
            case Algorithm::interpolation: r = interpolation_search(a, key); break;
            case Algorithm::interpolation_binary: r = ibs_search(a, key, ibs_cfg); break;
            case Algorithm::adaptive: r = adaptive_search(a, key); break;
            case Algorithm::binned: r = binned_search(*index, key); break;
        }
        run.totals.accesses += r.metrics.accesses;
        run.totals.iterations += r.metrics.iterations;
        run.totals.comparisons += r.metrics.comparisons;
    }
    const auto t1 = std::chrono::steady_clock::now();
    run.elapsed_ns =
        static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return run;
}

/// The experimental protocol: per spec, `repetitions` freshly seeded
/// instances, one workload per instance consumed by every algorithm, metrics
/// normalized per query and averaged across repetitions.
inline BenchmarkReport run_benchmark(const BenchmarkConfig& config) {
    if (config.repetitions < 1)
        throw std::invalid_argument("run_benchmark: repetitions must be >= 1");
    if (config.algorithms.empty() || config.specs.empty())
        throw std::invalid_argument("run_benchmark: need at least one algorithm and one spec");

    BenchmarkReport report;
    for (std::size_t si = 0; si < config.specs.size(); ++si) {
        const DistributionSpec& base = config.specs[si];
        std::vector<std::vector<double>> acc(config.algorithms.size());
        std::vector<std::vector<double>> iter(config.algorithms.size());
        std::vector<std::vector<double>> time_ns(config.algorithms.size());

        for (unsigned rep = 0; rep < config.repetitions; ++rep) {
            DistributionSpec spec = base;
            spec.seed = benchmark_instance_seed(config.seed, base.seed, si, rep);
            SortedInstance instance = [&] {
                try {
                    return generate(spec);
                } catch (const std::exception& e) {
                    throw std::runtime_error("run_benchmark: spec[" + std::to_string(si) + "] " +
                                             distribution_name(spec.kind) + " n=" +
                                             std::to_string(spec.n) + ": " + e.what());
                }
            }();
            const QueryWorkload workload = make_workload(
                instance, config.query_ratio, config.hit_fraction,
                benchmark_workload_seed(config.seed, base.seed, si, rep));
            const double q = static_cast<double>(workload.keys.size());
            for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
                const SingleRun run = run_workload(instance, config.algorithms[ai], workload);
                acc[ai].push_back(static_cast<double>(run.totals.accesses) / q);
                iter[ai].push_back(static_cast<double>(run.totals.iterations) / q);
                time_ns[ai].push_back(run.elapsed_ns / q);
            }
        }

        auto mean_of = [](const std::vector<double>& xs) {
            double s = 0.0;
            for (double x : xs) s += x;
            return s / static_cast<double>(xs.size());
        };
        for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
            BenchmarkRow row;
            row.distribution = distribution_name(base.kind);
            row.n = base.n;
            row.algorithm = config.algorithms[ai].label();
            row.accesses_per_query = mean_of(acc[ai]);
            row.iterations_per_query = mean_of(iter[ai]);
            row.time_ns_per_query = mean_of(time_ns[ai]);
            double sq = 0.0;
            for (double x : acc[ai]) {
                const double d = x - row.accesses_per_query;
                sq += d * d;
            }
            row.stddev_accesses = std::sqrt(sq / static_cast<double>(acc[ai].size()));
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace sortsearch
