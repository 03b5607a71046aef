#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sortsearch/instance.hpp"
#include "sortsearch/search.hpp"

namespace sortsearch {

/// Ratio between the largest and smallest gap of adjacent elements; the
/// well-behavedness measure a static bin structure is sized against.
struct SmoothnessDelta {
    std::uint64_t max_gap = 0;
    std::uint64_t min_gap = 0;

    double ratio() const { return static_cast<double>(max_gap) / static_cast<double>(min_gap); }
};

inline SmoothnessDelta smoothness_delta(const SortedInstance& a) {
    if (a.size() < 2)
        throw std::invalid_argument("smoothness_delta: need at least 2 elements (no gaps)");
    SmoothnessDelta d{0, UINT64_MAX};
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const std::uint64_t g =
            static_cast<std::uint64_t>(a[i + 1]) - static_cast<std::uint64_t>(a[i]);
        if (g > d.max_gap) d.max_gap = g;
        if (g < d.min_gap) d.min_gap = g;
    }
    return d;
}

/// Static bin structure: the value interval [x_1, x_n] split into n bins of
/// equal rational width (x_n - x_1)/n. A bin knows its own elements (a
/// contiguous position range of the source array) plus the nearest neighbor
/// element on each side. Built once, never mutated.
class BinnedIndex {
public:
    explicit BinnedIndex(const SortedInstance& source)
        : source_(&source), delta_(smoothness_delta(source)) {
        const std::size_t n = source.size();
        bin_count_ = n;
        x1_ = source.front();
        xn_ = source.back();
        bins_.reserve(n);
        std::size_t pos = 0;
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t begin = pos;
            while (pos < n && bin_of(source[pos]) == b) ++pos;
            bins_.emplace_back(begin, pos);
        }
    }

    const SortedInstance& source() const noexcept { return *source_; }
    std::size_t bin_count() const noexcept { return bin_count_; }
    const SmoothnessDelta& delta() const noexcept { return delta_; }

    /// Bin that a value interpolates into: floor((v - x1) * n / (xn - x1)),
    /// clamped so the maximum value lands in the last bin.
    std::size_t bin_of(std::int64_t v) const {
        const std::uint64_t off = static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(x1_);
        const std::uint64_t span = static_cast<std::uint64_t>(xn_) - static_cast<std::uint64_t>(x1_);
        const unsigned __int128 scaled =
            static_cast<unsigned __int128>(off) * static_cast<unsigned __int128>(bin_count_);
        std::size_t b = static_cast<std::size_t>(scaled / span);
        if (b >= bin_count_) b = bin_count_ - 1;
        return b;
    }

    /// Position range of the bin's own elements (may be empty).
    std::pair<std::size_t, std::size_t> bin_elements(std::size_t b) const { return bins_[b]; }

    /// Position range covering the bin's elements plus the nearest neighbor
    /// below and above, clamped to the array.
    std::pair<std::size_t, std::size_t> bin_candidates(std::size_t b) const {
        const auto [begin, end] = bins_[b];
        const std::size_t lo = begin == 0 ? 0 : begin - 1;
        const std::size_t hi = end >= source_->size() ? source_->size() - 1 : end;
        return {lo, hi};
    }

private:
    const SortedInstance* source_;  // non-owning; keep the instance alive
    std::vector<std::pair<std::size_t, std::size_t>> bins_;
    std::size_t bin_count_ = 0;
    std::int64_t x1_ = 0, xn_ = 0;
    SmoothnessDelta delta_;
};

inline BinnedIndex build_binned_index(const SortedInstance& a) { return BinnedIndex(a); }

/// Interpolates the key into a bin, then binary-searches the bin's
/// elements-plus-neighbors slice. Indices returned are source positions.
inline SearchResult binned_search(const BinnedIndex& index, std::int64_t key,
                                  SearchTrace* trace = nullptr) {
    const SortedInstance& a = index.source();
    SearchResult r;
    const RangeCheck pre = range_precheck(a, key, r.metrics, trace);
    if (pre.kind == RangeCheck::Kind::at_boundary) {
        r.index = pre.index;
        return r;
    }
    if (pre.kind == RangeCheck::Kind::outside) return r;

    auto [bot, top] = index.bin_candidates(index.bin_of(key));
    while (bot <= top) {
        ++r.metrics.iterations;
        const std::size_t med = bot + (top - bot) / 2;
        const std::int64_t v = detail::bounded_probe(a, med, bot, top, r.metrics, trace);
        ++r.metrics.comparisons;
        if (v == key) {
            r.index = med;
            detail::trace_length(trace, 0);
            return r;
        }
        if (v < key) {
            bot = med + 1;
        } else {
            if (med == 0) {
                detail::trace_length(trace, 0);
                return r;
            }
            top = med - 1;
        }
        detail::trace_length(trace, top >= bot ? top - bot + 1 : 0);
    }
    return r;
}

}  // namespace sortsearch
