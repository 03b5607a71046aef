#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "test_support.hpp"

using namespace sortsearch;

namespace {
using Gaps = std::vector<std::uint64_t>;
}

TEST(Pearson, KnownValues) {
    const Gaps x = {1, 2, 3, 4};
    EXPECT_NEAR(pearson(x, x), 1.0, 1e-12);
    EXPECT_NEAR(pearson(Gaps{1, 2, 3}, Gaps{6, 4, 2}), -1.0, 1e-12);
    // covariance 4, variances 5 and 5 -> 4/5
    EXPECT_NEAR(pearson(Gaps{1, 2, 3, 4}, Gaps{1, 3, 2, 4}), 0.8, 1e-12);
}

TEST(Pearson, Errors) {
    EXPECT_THROW(pearson(Gaps{1, 2}, Gaps{1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(pearson(Gaps{5, 5, 5}, Gaps{1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(pearson(Gaps{1}, Gaps{1}), std::invalid_argument);
}

TEST(Spearman, KnownValues) {
    const Gaps x = {10, 20, 30};
    EXPECT_NEAR(spearman(x, x), 1.0, 1e-12);
    EXPECT_NEAR(spearman(Gaps{4, 9, 11, 30}, Gaps{30, 11, 9, 4}), -1.0, 1e-12);
    // tie in y: ranks (1,2,3) vs (1.5,1.5,3) -> 1.5/sqrt(2*1.5)
    EXPECT_NEAR(spearman(Gaps{10, 20, 30}, Gaps{1, 1, 2}), 1.5 / std::sqrt(3.0), 1e-12);
}

TEST(Spearman, InvariantUnderMonotoneTransforms) {
    const Gaps x = {3, 14, 1, 5, 9, 2, 6};
    const Gaps y = {10, 4, 8, 22, 1, 17, 2};
    Gaps y_scaled;
    for (const std::uint64_t v : y) y_scaled.push_back(v * v + 7);  // strictly monotone on y
    EXPECT_NEAR(spearman(x, y), spearman(x, y_scaled), 1e-12);
    EXPECT_NEAR(spearman(x, y), spearman(y, x), 1e-12);
}

TEST(Pearson, InvariantUnderPositiveAffineTransforms) {
    const Gaps x = {3, 14, 1, 5, 9, 2, 6};
    const Gaps y = {10, 4, 8, 22, 1, 17, 2};
    Gaps y_affine;
    for (const std::uint64_t v : y) y_affine.push_back(3 * v + 11);
    EXPECT_NEAR(pearson(x, y), pearson(x, y_affine), 1e-12);
    EXPECT_NEAR(pearson(x, y), pearson(y, x), 1e-12);
}

TEST(L2FromUniform, Examples) {
    EXPECT_DOUBLE_EQ(l2_from_uniform(generate({UniformGap{10}, 100, 0, 1})).raw, 0.0);
    const UniformDistance d = l2_from_uniform(SortedInstance({0, 1, 3}));
    EXPECT_NEAR(d.raw, std::sqrt(0.5), 1e-12);  // gaps {1,2}, mean 1.5
    EXPECT_THROW(l2_from_uniform(SortedInstance({7})), std::invalid_argument);
}

TEST(L2FromUniform, ZeroOnlyWhenAllGapsEqual) {
    EXPECT_GT(l2_from_uniform(SortedInstance({0, 1, 3})).raw, 0.0);
    EXPECT_DOUBLE_EQ(l2_from_uniform(SortedInstance({5, 6, 7, 8})).raw, 0.0);
}

TEST(L2FromUniform, StepwiseExceedsIncreasingAtEqualRange) {
    // both have 100 gaps summing to 10000: increasing uses 1,3,...,199 while
    // stepwise uses fifty 1s then fifty 199s; the two-level layout is farther
    // from uniform
    const SortedInstance increasing = generate({IncreasingGap{1, 2}, 101, 0, 1});
    const SortedInstance stepwise = generate({StepwiseGap{{1, 199}}, 101, 0, 1});
    ASSERT_EQ(gap_summary(increasing).range, gap_summary(stepwise).range);
    EXPECT_GT(l2_from_uniform(stepwise).raw, l2_from_uniform(increasing).raw);
    EXPECT_GT(l2_from_uniform(stepwise).raw, 0.0);
}

TEST(NonuniformityReport, IdenticalSequencesCorrelateFully) {
    const Gaps g = {5, 9, 2, 14, 7, 7, 3};
    EXPECT_NEAR(pearson(g, g), 1.0, 1e-12);
    EXPECT_NEAR(spearman(g, g), 1.0, 1e-12);
}

TEST(NonuniformityReport, IndependentSequencesDecorrelate) {
    const std::size_t n = 100001;  // 100k gaps
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const SortedInstance a = generate({GaussianGap{200.0, 60.0}, n, 0, seed});
        const SortedInstance b = generate({GaussianGap{200.0, 60.0}, n, 0, seed + 1000});
        const auto ga = gaps_of(a);
        const auto gb = gaps_of(b);
        EXPECT_LT(std::abs(pearson(ga, gb)), 0.05) << "seed " << seed;
        EXPECT_LT(std::abs(spearman(ga, gb)), 0.05) << "seed " << seed;
    }
}

TEST(NonuniformityReport, ProducesFiniteValuesOnIngestedLists) {
    // shaped like a real id list: clustered runs with occasional big holes
    std::vector<std::int64_t> ids;
    std::int64_t v = 100;
    Rng rng(17);
    for (int i = 0; i < 5000; ++i) {
        v += 1 + static_cast<std::int64_t>(rng.below(i % 97 == 0 ? 50000 : 3));
        ids.push_back(v);
    }
    const SortedInstance a(std::move(ids));
    const NonuniformityReport rep = nonuniformity_report(a, 42);
    EXPECT_TRUE(std::isfinite(rep.spearman));
    EXPECT_TRUE(std::isfinite(rep.pearson));
    EXPECT_TRUE(std::isfinite(rep.l2_instance.raw));
    EXPECT_TRUE(std::isfinite(rep.l2_null.raw));
    // the generated counterpart really mirrors the instance's range
    const SortedInstance null_instance =
        generate({NullModel{gap_summary(a)}, a.size(), a.front(), 42});
    EXPECT_EQ(gap_summary(null_instance).range, gap_summary(a).range);
}

TEST(NonuniformityReport, RequiresThreeElements) {
    EXPECT_THROW(nonuniformity_report(SortedInstance({1, 2}), 1), std::invalid_argument);
}
