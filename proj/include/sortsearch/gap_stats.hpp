#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "sortsearch/generate.hpp"
#include "sortsearch/instance.hpp"

namespace sortsearch {

namespace detail {

inline void check_pair_lengths(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("correlation: sequences must have equal length");
    if (x.size() < 2) throw std::invalid_argument("correlation: need at least 2 observations");
}

inline double pearson_impl(std::span<const double> x, std::span<const double> y) {
    check_pair_lengths(x, y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("pearson: undefined for a constant sequence");
    return sxy / std::sqrt(sxx * syy);
}

/// Ranks with ties assigned the average of the positions they occupy.
inline std::vector<double> average_ranks(std::span<const std::uint64_t> x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;  // 1-based average
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

inline std::vector<double> to_doubles(std::span<const std::uint64_t> x) {
    return std::vector<double>(x.begin(), x.end());
}

}  // namespace detail

/// Sample Pearson correlation of two equally long gap sequences.
inline double pearson(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
    const auto dx = detail::to_doubles(x);
    const auto dy = detail::to_doubles(y);
    return detail::pearson_impl(dx, dy);
}

/// Spearman rank correlation: Pearson over average-rank vectors.
inline double spearman(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("correlation: sequences must have equal length");
    const auto rx = detail::average_ranks(x);
    const auto ry = detail::average_ranks(y);
    return detail::pearson_impl(rx, ry);
}

/// Euclidean distance of the gap vector from the all-equal gap vector with
/// the same total span. `normalized` divides by mean_gap * sqrt(N) so values
/// are comparable across sizes and ranges.
struct UniformDistance {
    double raw = 0.0;
    double normalized = 0.0;
};

inline UniformDistance l2_from_uniform(const SortedInstance& a) {
    if (a.size() < 2)
        throw std::invalid_argument("l2_from_uniform: need at least 2 elements");
    const std::uint64_t n_gaps = a.size() - 1;
    const std::uint64_t span =
        static_cast<std::uint64_t>(a.back()) - static_cast<std::uint64_t>(a.front());
    const double mean = static_cast<double>(span) / static_cast<double>(n_gaps);
    double sq = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const double g = static_cast<double>(static_cast<std::uint64_t>(a[i + 1]) -
                                             static_cast<std::uint64_t>(a[i]));
        sq += (g - mean) * (g - mean);
    }
    UniformDistance d;
    d.raw = std::sqrt(sq);
    d.normalized = d.raw / (mean * std::sqrt(static_cast<double>(n_gaps)));
    return d;
}

/// Gap-level comparison of an instance against a freshly generated null model
/// matching its size, value range, and gap mean/stddev. Correlations pair the
/// two gap sequences positionally.
struct NonuniformityReport {
    double spearman = 0.0;
    double pearson = 0.0;
    UniformDistance l2_instance;
    UniformDistance l2_null;
};

inline NonuniformityReport nonuniformity_report(const SortedInstance& a, std::uint64_t seed) {
    if (a.size() < 3)
        throw std::invalid_argument("nonuniformity_report: need at least 3 elements");
    DistributionSpec null_spec;
    null_spec.kind = NullModel{gap_summary(a)};
    null_spec.n = a.size();
    null_spec.start = a.front();
    null_spec.seed = seed;
    const SortedInstance null_instance = generate(null_spec);

    const auto real_gaps = gaps_of(a);
    const auto null_gaps = gaps_of(null_instance);
    NonuniformityReport rep;
    rep.spearman = spearman(real_gaps, null_gaps);
    rep.pearson = pearson(real_gaps, null_gaps);
    rep.l2_instance = l2_from_uniform(a);
    rep.l2_null = l2_from_uniform(null_instance);
    return rep;
}

}  // namespace sortsearch
