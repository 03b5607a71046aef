#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"

using namespace sortsearch;
using testsupport::exhaustive_keys;
using testsupport::linear_scan;

namespace {

SortedInstance inst(std::vector<std::int64_t> v) { return SortedInstance(std::move(v)); }

/// Brute-force bin assignment: value v belongs to the bin whose rational
/// range [x1 + b*w, x1 + (b+1)*w) contains it, with the maximum clamped into
/// the last bin. Evaluated as exact integer comparisons of (v-x1)*n vs b*span.
std::size_t brute_force_bin(const SortedInstance& a, std::int64_t v) {
    const std::size_t n = a.size();
    const unsigned __int128 span = static_cast<std::uint64_t>(a.back()) -
                                   static_cast<std::uint64_t>(a.front());
    const unsigned __int128 off =
        static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(a.front());
    for (std::size_t b = 0; b + 1 < n; ++b) {
        if (off * n < (b + 1) * span) return b;  // v < x1 + (b+1)*w
    }
    return n - 1;
}

}  // namespace

TEST(SmoothnessDelta, Examples) {
    EXPECT_DOUBLE_EQ(smoothness_delta(inst({10, 20, 30, 40})).ratio(), 1.0);
    const auto d = smoothness_delta(inst({2, 3, 5, 9}));
    EXPECT_EQ(d.max_gap, 4u);
    EXPECT_EQ(d.min_gap, 1u);
    EXPECT_DOUBLE_EQ(d.ratio(), 4.0);
    EXPECT_DOUBLE_EQ(smoothness_delta(inst({0, 1})).ratio(), 1.0);
    EXPECT_THROW(smoothness_delta(inst({7})), std::invalid_argument);
}

TEST(BinnedIndex, AssignmentMatchesBruteForce) {
    for (const auto& values : {std::vector<std::int64_t>{0, 1, 2, 3},
                               std::vector<std::int64_t>{1, 2, 3, 100},
                               std::vector<std::int64_t>{-50, -3, 0, 9, 10, 11, 1000}}) {
        const auto a = inst(values);
        const BinnedIndex index(a);
        ASSERT_EQ(index.bin_count(), a.size());
        std::size_t assigned = 0;
        for (std::size_t b = 0; b < index.bin_count(); ++b) {
            const auto [begin, end] = index.bin_elements(b);
            for (std::size_t i = begin; i < end; ++i) {
                EXPECT_EQ(brute_force_bin(a, a[i]), b) << "value " << a[i];
                ++assigned;
            }
        }
        EXPECT_EQ(assigned, a.size());  // every element in exactly one bin
    }
}

TEST(BinnedIndex, UniformGapsGiveOneElementPerBin) {
    const SortedInstance a = generate({UniformGap{10}, 64, 0, 1});
    const BinnedIndex index(a);
    for (std::size_t b = 0; b < index.bin_count(); ++b) {
        const auto [begin, end] = index.bin_elements(b);
        EXPECT_EQ(end - begin, 1u) << "bin " << b;
    }
}

TEST(BinnedIndex, EmptyInteriorBinsCarryNeighbors) {
    const auto a = inst({1, 2, 3, 100});
    const BinnedIndex index(a);
    // first bin holds {1,2,3}, last bin holds {100}, interior bins are empty
    EXPECT_EQ(index.bin_elements(0), (std::pair<std::size_t, std::size_t>{0, 3}));
    EXPECT_EQ(index.bin_elements(1), (std::pair<std::size_t, std::size_t>{3, 3}));
    EXPECT_EQ(index.bin_elements(2), (std::pair<std::size_t, std::size_t>{3, 3}));
    EXPECT_EQ(index.bin_elements(3), (std::pair<std::size_t, std::size_t>{3, 4}));
    // an empty bin still exposes the neighbors 3 and 100 as candidates
    EXPECT_EQ(index.bin_candidates(1), (std::pair<std::size_t, std::size_t>{2, 3}));
    EXPECT_EQ(index.bin_candidates(2), (std::pair<std::size_t, std::size_t>{2, 3}));
}

TEST(BinnedIndex, RejectsSingleton) {
    EXPECT_THROW(BinnedIndex(inst({7})), std::invalid_argument);
}

TEST(BinnedSearch, Examples) {
    const auto a = inst({1, 2, 3, 100});
    const BinnedIndex index(a);
    {
        const auto r = binned_search(index, 0);  // below range
        EXPECT_FALSE(r.found());
        EXPECT_EQ(r.metrics.accesses, 1u);
    }
    {
        const auto r = binned_search(index, 2);  // inside the first bin
        ASSERT_TRUE(r.found());
        EXPECT_EQ(*r.index, 1u);
    }
}

TEST(BinnedSearch, UniformInstancesVisitAtMostThreeElements) {
    const SortedInstance a = generate({UniformGap{10}, 4096, 0, 1});
    const BinnedIndex index(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto r = binned_search(index, a[i]);
        ASSERT_TRUE(r.found());
        ASSERT_LE(r.metrics.accesses, 2u + 3u);  // precheck + in-bin visits
    }
}

TEST(BinnedSearch, OracleEquivalenceOnSmallInstances) {
    for (std::size_t n = 2; n <= 64; ++n) {
        for (const DistributionSpec& spec : testsupport::corpus_specs(n, 400 + n)) {
            const SortedInstance a = generate(spec);
            const BinnedIndex index(a);
            for (const std::int64_t key : exhaustive_keys(a)) {
                const auto expect = linear_scan(a, key);
                const auto r = binned_search(index, key);
                ASSERT_EQ(r.found(), expect.has_value())
                    << "n=" << n << " dist=" << distribution_name(spec.kind) << " key=" << key;
                if (expect) {
                    ASSERT_EQ(a[*r.index], key);
                }
            }
        }
    }
}
