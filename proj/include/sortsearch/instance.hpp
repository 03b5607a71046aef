#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sortsearch {

/// Immutable strictly increasing array of 64-bit signed values.
/// All search algorithms operate on this; construction validates the
/// ordering so every downstream routine may assume it.
class SortedInstance {
public:
    explicit SortedInstance(std::vector<std::int64_t> values)
        : values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("SortedInstance: must hold at least one value");
        for (std::size_t i = 1; i < values_.size(); ++i) {
            if (values_[i - 1] >= values_[i])
                throw std::invalid_argument(
                    "SortedInstance: values must be strictly increasing (position " +
                    std::to_string(i) + ")");
        }
    }

    std::size_t size() const noexcept { return values_.size(); }

    std::int64_t operator[](std::size_t i) const noexcept {
        assert(i < values_.size());
        return values_[i];
    }

    std::int64_t front() const noexcept { return values_.front(); }
    std::int64_t back() const noexcept { return values_.back(); }

    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    friend bool operator==(const SortedInstance& a, const SortedInstance& b) {
        return a.values_ == b.values_;
    }

private:
    std::vector<std::int64_t> values_;
};

/// Per-query cost counters. The three counters are independent: an access is
/// one element read, an iteration is one main-loop pass that read at least
/// one element, a comparison is one key-vs-element three-way compare.
struct ProbeMetrics {
    std::uint64_t accesses = 0;
    std::uint64_t iterations = 0;
    std::uint64_t comparisons = 0;
};

/// Optional instrumentation sink. `probes` lists every element index read, in
/// order; `probe_bounds[i]` is the live [bot, top] segment when probes[i] was
/// issued; `lengths_after` is the live segment length after each iteration
/// (0 once the search is resolved).
struct SearchTrace {
    std::vector<std::size_t> probes;
    std::vector<std::pair<std::size_t, std::size_t>> probe_bounds;
    std::vector<std::size_t> lengths_after;
    std::uint64_t median_overrides = 0;
};

/// Membership answer plus the metrics the query incurred.
struct SearchResult {
    std::optional<std::size_t> index;  // position of the key when found
    ProbeMetrics metrics;

    bool found() const noexcept { return index.has_value(); }
};

/// Single choke point for element reads: every algorithm reads through here
/// so access counting stays uniform. Out-of-range i is a contract violation.
inline std::int64_t probe(const SortedInstance& a, std::size_t i, ProbeMetrics& m,
                          SearchTrace* trace = nullptr) {
    assert(i < a.size());
    ++m.accesses;
    if (trace) trace->probes.push_back(i);
    return a[i];
}

/// Consecutive differences values[i+1]-values[i], as unsigned widths.
inline std::vector<std::uint64_t> gaps_of(const SortedInstance& a) {
    std::vector<std::uint64_t> g;
    if (a.size() < 2) return g;
    g.reserve(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        g.push_back(static_cast<std::uint64_t>(a[i + 1]) - static_cast<std::uint64_t>(a[i]));
    return g;
}

}  // namespace sortsearch
