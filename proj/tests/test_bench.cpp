#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "test_support.hpp"

using namespace sortsearch;

namespace {

bool is_member(const SortedInstance& a, std::int64_t key) {
    return std::binary_search(a.values().begin(), a.values().end(), key);
}

double row_value(const BenchmarkReport& report, const std::string& dist, const std::string& algo,
                 double BenchmarkRow::*field) {
    for (const auto& row : report.rows)
        if (row.distribution == dist && row.algorithm == algo) return row.*field;
    ADD_FAILURE() << "row not found: " << dist << "/" << algo;
    return 0.0;
}

}  // namespace

TEST(MakeWorkload, CountsAndHitFraction) {
    const SortedInstance a = generate({UniformGap{7}, 100000, 0, 1});
    const QueryWorkload w = make_workload(a, 0.001, 0.8, 42);
    EXPECT_EQ(w.keys.size(), 100u);
    std::size_t hits = 0;
    for (const std::int64_t k : w.keys) hits += is_member(a, k);
    EXPECT_EQ(hits, w.hit_count);
    EXPECT_GE(hits, 80u);
}

TEST(MakeWorkload, MinimumOneQuery) {
    const SortedInstance a = generate({UniformGap{7}, 5, 0, 1});
    const QueryWorkload w = make_workload(a, 0.001, 0.8, 42);
    EXPECT_EQ(w.keys.size(), 1u);
}

TEST(MakeWorkload, AllHitsWhenFractionIsOne) {
    const SortedInstance a = generate({GaussianGap{30.0, 9.0}, 5000, 0, 5});
    const QueryWorkload w = make_workload(a, 0.01, 1.0, 9);
    EXPECT_EQ(w.hit_count, w.keys.size());
    for (const std::int64_t k : w.keys) {
        EXPECT_TRUE(is_member(a, k));
        EXPECT_TRUE(adaptive_search(a, k).found());
        EXPECT_TRUE(binary_search(a, k).found());
    }
}

TEST(MakeWorkload, MissesAreGuaranteedAndMixed) {
    const SortedInstance a = generate({UniformGap{10}, 10000, 0, 3});
    const QueryWorkload w = make_workload(a, 0.01, 0.5, 11);
    std::size_t in_range_misses = 0;
    std::size_t misses = 0;
    for (const std::int64_t k : w.keys) {
        if (is_member(a, k)) continue;
        ++misses;
        if (k > a.front() && k < a.back()) ++in_range_misses;
    }
    EXPECT_EQ(misses, w.keys.size() - w.hit_count);
    EXPECT_GT(in_range_misses, 0u);             // gap-interior misses exist
    EXPECT_LT(in_range_misses, misses);         // and so do out-of-range ones
}

TEST(MakeWorkload, SingletonInstanceFallsBackToOutOfRange) {
    const SortedInstance a(std::vector<std::int64_t>{5});
    const QueryWorkload w = make_workload(a, 1.0, 0.0, 4);
    EXPECT_EQ(w.keys.size(), 1u);
    EXPECT_NE(w.keys[0], 5);
}

TEST(RunBenchmark, SingleCellEqualsSingleRun) {
    BenchmarkConfig config;
    config.algorithms = {AlgorithmSpec{Algorithm::adaptive, 2}};
    config.specs = {default_spec("uniform", 10000, 5)};
    config.repetitions = 1;
    config.seed = 123;
    const BenchmarkReport report = run_benchmark(config);
    ASSERT_EQ(report.rows.size(), 1u);

    // reproduce the run through the public sub-seed derivation
    DistributionSpec spec = config.specs[0];
    spec.seed = benchmark_instance_seed(config.seed, config.specs[0].seed, 0, 0);
    const SortedInstance instance = generate(spec);
    const QueryWorkload workload =
        make_workload(instance, config.query_ratio, config.hit_fraction,
                      benchmark_workload_seed(config.seed, config.specs[0].seed, 0, 0));
    const SingleRun run = run_workload(instance, config.algorithms[0], workload);
    const double q = static_cast<double>(workload.keys.size());
    EXPECT_DOUBLE_EQ(report.rows[0].accesses_per_query,
                     static_cast<double>(run.totals.accesses) / q);
    EXPECT_DOUBLE_EQ(report.rows[0].iterations_per_query,
                     static_cast<double>(run.totals.iterations) / q);
    EXPECT_DOUBLE_EQ(report.rows[0].stddev_accesses, 0.0);
}

TEST(RunBenchmark, RowShapeAndDeterminism) {
    BenchmarkConfig config;
    config.algorithms = {parse_algorithm("bs"), parse_algorithm("as"), parse_algorithm("ibs2")};
    config.specs = {default_spec("uniform", 2000, 1), default_spec("stepwise", 2000, 1)};
    config.repetitions = 3;
    config.seed = 7;
    const BenchmarkReport r1 = run_benchmark(config);
    const BenchmarkReport r2 = run_benchmark(config);
    ASSERT_EQ(r1.rows.size(), config.algorithms.size() * config.specs.size());
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
        EXPECT_EQ(r1.rows[i].distribution, r2.rows[i].distribution);
        EXPECT_EQ(r1.rows[i].algorithm, r2.rows[i].algorithm);
        EXPECT_EQ(r1.rows[i].n, 2000u);
        // the time column is the only nondeterministic one
        EXPECT_DOUBLE_EQ(r1.rows[i].accesses_per_query, r2.rows[i].accesses_per_query);
        EXPECT_DOUBLE_EQ(r1.rows[i].iterations_per_query, r2.rows[i].iterations_per_query);
        EXPECT_DOUBLE_EQ(r1.rows[i].stddev_accesses, r2.rows[i].stddev_accesses);
        EXPECT_GE(r1.rows[i].accesses_per_query, 0.0);
    }
}

TEST(RunBenchmark, NormalizationIsStableUnderWorkloadDoubling) {
    BenchmarkConfig base;
    base.algorithms = {parse_algorithm("as"), parse_algorithm("bs")};
    base.specs = {default_spec("uniform", 100000, 2)};
    base.repetitions = 3;
    base.seed = 31;
    BenchmarkConfig doubled = base;
    doubled.query_ratio = base.query_ratio * 2;
    const BenchmarkReport r1 = run_benchmark(base);
    const BenchmarkReport r2 = run_benchmark(doubled);
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
        const double a = r1.rows[i].accesses_per_query;
        const double b = r2.rows[i].accesses_per_query;
        EXPECT_LT(std::abs(a - b) / a, 0.10) << r1.rows[i].algorithm;
    }
}

TEST(RunBenchmark, UniformParityPreview) {
    BenchmarkConfig config;
    config.algorithms = {parse_algorithm("is"), parse_algorithm("as")};
    config.specs = {default_spec("uniform", 100000, 3)};
    config.repetitions = 3;
    config.seed = 17;
    const BenchmarkReport report = run_benchmark(config);
    const double is_it = row_value(report, "uniform", "is", &BenchmarkRow::iterations_per_query);
    const double as_it = row_value(report, "uniform", "as", &BenchmarkRow::iterations_per_query);
    EXPECT_GE(as_it / is_it, 0.95);
    EXPECT_LE(as_it / is_it, 1.05);
}

TEST(RunBenchmark, PropagatesGenerationFailureWithSpec) {
    BenchmarkConfig config;
    config.algorithms = {parse_algorithm("bs")};
    DistributionSpec bad;
    bad.kind = UniformGap{0};
    bad.n = 10;
    config.specs = {bad};
    config.repetitions = 1;
    try {
        run_benchmark(config);
        FAIL() << "expected a generation failure";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("uniform"), std::string::npos);
    }
}

TEST(ParseAlgorithm, Tokens) {
    EXPECT_EQ(parse_algorithm("bs").kind, Algorithm::binary);
    EXPECT_EQ(parse_algorithm("is").kind, Algorithm::interpolation);
    EXPECT_EQ(parse_algorithm("as").kind, Algorithm::adaptive);
    EXPECT_EQ(parse_algorithm("binned").kind, Algorithm::binned);
    EXPECT_EQ(parse_algorithm("ibs").theta, 2u);
    EXPECT_EQ(parse_algorithm("ibs4").theta, 4u);
    EXPECT_EQ(parse_algorithm("ibs2").label(), "ibs2");
    EXPECT_THROW(parse_algorithm("ibs0"), std::invalid_argument);
    EXPECT_THROW(parse_algorithm("nope"), std::invalid_argument);
}
