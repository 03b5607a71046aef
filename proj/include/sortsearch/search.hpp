#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

#include "sortsearch/instance.hpp"

namespace sortsearch {

/// Smallest k with 2^k >= n (0 for n <= 1).
inline unsigned ceil_log2(std::uint64_t n) {
    if (n <= 1) return 0;
    return static_cast<unsigned>(64 - std::countl_zero(n - 1));
}

/// Outcome of the constant-time boundary check that precedes every search.
struct RangeCheck {
    enum class Kind { outside, inside, at_boundary };
    Kind kind;
    std::size_t index;  // boundary position when kind == at_boundary
    std::int64_t low;   // values[0], valid unless the first probe decided
    std::int64_t high;  // values[n-1], valid when kind == inside
};

namespace detail {

inline std::int64_t bounded_probe(const SortedInstance& a, std::size_t i, std::size_t bot,
                                  std::size_t top, ProbeMetrics& m, SearchTrace* t) {
    if (t) t->probe_bounds.emplace_back(bot, top);
    return probe(a, i, m, t);
}

inline void trace_length(SearchTrace* t, std::size_t len) {
    if (t) t->lengths_after.push_back(len);
}

}  // namespace detail

/// Probes the two extreme elements and classifies the key: below/above the
/// value range (constant-time "no"), equal to a boundary, or strictly inside.
/// Costs 2 accesses (1 when the first probe already decides) and no iterations.
inline RangeCheck range_precheck(const SortedInstance& a, std::int64_t key, ProbeMetrics& m,
                                 SearchTrace* trace = nullptr) {
    const std::size_t last = a.size() - 1;
    const std::int64_t low = detail::bounded_probe(a, 0, 0, last, m, trace);
    ++m.comparisons;
    if (key < low) return {RangeCheck::Kind::outside, 0, low, low};
    if (key == low) return {RangeCheck::Kind::at_boundary, 0, low, low};
    if (last == 0) return {RangeCheck::Kind::outside, 0, low, low};  // key > single value
    const std::int64_t high = detail::bounded_probe(a, last, 0, last, m, trace);
    ++m.comparisons;
    if (key > high) return {RangeCheck::Kind::outside, 0, low, high};
    if (key == high) return {RangeCheck::Kind::at_boundary, last, low, high};
    return {RangeCheck::Kind::inside, 0, low, high};
}

/// Classic binary search over [0, n-1]; each iteration probes the midpoint
/// and halves the segment. Iterations <= ceil(log2 n) + 1.
inline SearchResult binary_search(const SortedInstance& a, std::int64_t key,
                                  SearchTrace* trace = nullptr) {
    SearchResult r;
    const RangeCheck pre = range_precheck(a, key, r.metrics, trace);
    if (pre.kind == RangeCheck::Kind::at_boundary) {
        r.index = pre.index;
        return r;
    }
    if (pre.kind == RangeCheck::Kind::outside) return r;

    std::size_t bot = 0, top = a.size() - 1;
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

/// Index the interpolation formula selects inside [bot, top] for a key known
/// to lie in [a_bot, a_top]. Evaluated in 128-bit integer arithmetic with
/// truncation, then clamped, so probe sequences are bit-stable across
/// platforms.
inline std::size_t interpolation_probe_index(std::size_t bot, std::size_t top,
                                             std::int64_t a_bot, std::int64_t a_top,
                                             std::int64_t key) {
    assert(bot < top);
    assert(a_bot < a_top);
    assert(a_bot <= key && key <= a_top);
    const std::uint64_t off = static_cast<std::uint64_t>(key) - static_cast<std::uint64_t>(a_bot);
    const std::uint64_t span = static_cast<std::uint64_t>(a_top) - static_cast<std::uint64_t>(a_bot);
    const unsigned __int128 scaled =
        static_cast<unsigned __int128>(off) * static_cast<unsigned __int128>(top - bot);
    std::size_t next = bot + static_cast<std::size_t>(scaled / span);
    if (next > top) next = top;  // guards the formula's edge against any rounding
    return next;
}

/// Classic interpolation search. Boundary values are re-read (and counted)
/// whenever a boundary index moves; an iteration is any loop pass that read
/// at least one element. O(log log n) on near-uniform gaps, O(n) worst case.
inline SearchResult interpolation_search(const SortedInstance& a, std::int64_t key,
                                         SearchTrace* trace = nullptr) {
    SearchResult r;
    const RangeCheck pre = range_precheck(a, key, r.metrics, trace);
    if (pre.kind == RangeCheck::Kind::at_boundary) {
        r.index = pre.index;
        return r;
    }
    if (pre.kind == RangeCheck::Kind::outside) return r;

    std::size_t bot = 0, top = a.size() - 1;
    std::int64_t vbot = pre.low, vtop = pre.high;
    bool fresh_bot = true, fresh_top = true;
    while (bot <= top) {
        ++r.metrics.iterations;
        if (!fresh_bot) {
            vbot = detail::bounded_probe(a, bot, bot, top, r.metrics, trace);
            fresh_bot = true;
        }
        if (!fresh_top) {
            vtop = (top == bot) ? vbot
                                : detail::bounded_probe(a, top, bot, top, r.metrics, trace);
            fresh_top = true;
        }
        ++r.metrics.comparisons;
        if (key < vbot) {
            detail::trace_length(trace, 0);
            return r;
        }
        ++r.metrics.comparisons;
        if (key > vtop) {
            detail::trace_length(trace, 0);
            return r;
        }
        if (bot == top) {  // vbot <= key <= vtop == vbot, hence equal
            r.index = bot;
            detail::trace_length(trace, 0);
            return r;
        }
        const std::size_t next = interpolation_probe_index(bot, top, vbot, vtop, key);
        const std::int64_t v = detail::bounded_probe(a, next, bot, top, r.metrics, trace);
        ++r.metrics.comparisons;
        if (v == key) {
            r.index = next;
            detail::trace_length(trace, 0);
            return r;
        }
        if (v < key) {
            bot = next + 1;  // next == top makes the segment empty, loop exits
            fresh_bot = false;
        } else {
            if (next == 0) {
                detail::trace_length(trace, 0);
                return r;
            }
            top = next - 1;
            fresh_top = false;
        }
        detail::trace_length(trace, top >= bot ? top - bot + 1 : 0);
    }
    return r;
}

/// Interpolation search with a built-in binary fallback. Each iteration takes
/// the interpolation probe first; when the clipped segment would still exceed
/// half of the current one, the probe is overridden by the midpoint of the
/// clipped segment. Segment bounds carry over as values learned from earlier
/// probes (A[next]+-1), so no boundary re-reads are ever needed. This pins
/// the guarantees: iterations <= ceil(log2 n) + 1, accesses <= 2*iterations + 2,
/// and the live segment at least halves every iteration.
inline SearchResult adaptive_search(const SortedInstance& a, std::int64_t key,
                                    SearchTrace* trace = nullptr) {
    SearchResult r;
    const RangeCheck pre = range_precheck(a, key, r.metrics, trace);
    if (pre.kind == RangeCheck::Kind::at_boundary) {
        r.index = pre.index;
        return r;
    }
    if (pre.kind == RangeCheck::Kind::outside) return r;

    std::size_t bot = 0, top = a.size() - 1;
    // Invariants: low <= A[bot] <= A[top] <= high and low <= key <= high.
    std::int64_t low = pre.low, high = pre.high;
    while (bot <= top) {
        ++r.metrics.iterations;
        if (bot == top) {  // bounds may be inexact here, one probe decides
            const std::int64_t v = detail::bounded_probe(a, bot, bot, top, r.metrics, trace);
            ++r.metrics.comparisons;
            if (v == key) r.index = bot;
            detail::trace_length(trace, 0);
            return r;
        }
        const std::size_t length = top - bot + 1;
        const std::size_t next = interpolation_probe_index(bot, top, low, high, key);
        const std::int64_t v = detail::bounded_probe(a, next, bot, top, r.metrics, trace);
        ++r.metrics.comparisons;
        if (v == key) {
            r.index = next;
            detail::trace_length(trace, 0);
            return r;
        }
        std::size_t nb = bot, nt = top;
        std::int64_t nlow = low, nhigh = high;
        if (v < key) {
            if (next == top) {
                detail::trace_length(trace, 0);
                return r;
            }
            nb = next + 1;
            nlow = v + 1;
        } else {
            if (next == bot) {
                detail::trace_length(trace, 0);
                return r;
            }
            nt = next - 1;
            nhigh = v - 1;
        }
        if (2 * (nt - nb + 1) > length) {
            // interpolation clipped less than binary search would have:
            // fall back to the midpoint of the clipped segment
            if (trace) ++trace->median_overrides;
            const std::size_t med = nb + (nt - nb) / 2;
            const std::int64_t mv = detail::bounded_probe(a, med, nb, nt, r.metrics, trace);
            ++r.metrics.comparisons;
            if (mv == key) {
                r.index = med;
                detail::trace_length(trace, 0);
                return r;
            }
            if (mv < key) {
                if (med == nt) {
                    detail::trace_length(trace, 0);
                    return r;
                }
                nb = med + 1;
                nlow = mv + 1;
            } else {
                if (med == nb) {
                    detail::trace_length(trace, 0);
                    return r;
                }
                nt = med - 1;
                nhigh = mv - 1;
            }
        }
        bot = nb;
        top = nt;
        low = nlow;
        high = nhigh;
        detail::trace_length(trace, top - bot + 1);
    }
    return r;
}

/// Threshold knob for interpolation-binary search; segments spanning fewer
/// than theta * ceil(log2 n) positions are searched by pure binary steps.
struct IbsConfig {
    unsigned theta = 2;
};

/// Interpolation-binary search: below the threshold every pass is a plain
/// binary step; above it a pass is one interpolation probe followed, if the
/// key was not found, by one binary probe on the clipped segment. As with
/// interpolation search, boundary values are re-read (and counted) when a
/// boundary index moves. One composite pass counts as one iteration.
inline SearchResult ibs_search(const SortedInstance& a, std::int64_t key, IbsConfig cfg = {},
                               SearchTrace* trace = nullptr) {
    if (cfg.theta < 1) throw std::invalid_argument("ibs_search: theta must be >= 1");
    SearchResult r;
    const RangeCheck pre = range_precheck(a, key, r.metrics, trace);
    if (pre.kind == RangeCheck::Kind::at_boundary) {
        r.index = pre.index;
        return r;
    }
    if (pre.kind == RangeCheck::Kind::outside) return r;

    const std::uint64_t threshold =
        static_cast<std::uint64_t>(cfg.theta) * ceil_log2(a.size());
    std::size_t bot = 0, top = a.size() - 1;
    std::int64_t vbot = pre.low, vtop = pre.high;
    bool fresh_bot = true, fresh_top = true;
    while (bot <= top) {
        ++r.metrics.iterations;
        if (top - bot < threshold) {
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
                fresh_bot = false;
            } else {
                if (med == 0) {
                    detail::trace_length(trace, 0);
                    return r;
                }
                top = med - 1;
                fresh_top = false;
            }
            detail::trace_length(trace, top >= bot ? top - bot + 1 : 0);
            continue;
        }
        // interpolation step needs current boundary values
        if (!fresh_bot) {
            vbot = detail::bounded_probe(a, bot, bot, top, r.metrics, trace);
            fresh_bot = true;
        }
        if (!fresh_top) {
            vtop = detail::bounded_probe(a, top, bot, top, r.metrics, trace);
            fresh_top = true;
        }
        ++r.metrics.comparisons;
        if (key < vbot) {
            detail::trace_length(trace, 0);
            return r;
        }
        ++r.metrics.comparisons;
        if (key > vtop) {
            detail::trace_length(trace, 0);
            return r;
        }
        const std::size_t next = interpolation_probe_index(bot, top, vbot, vtop, key);
        const std::int64_t v = detail::bounded_probe(a, next, bot, top, r.metrics, trace);
        ++r.metrics.comparisons;
        std::size_t nb = bot, nt = top;
        if (v == key) {
            r.index = next;
            detail::trace_length(trace, 0);
            return r;
        }
        if (v < key) {
            if (next == top) {
                detail::trace_length(trace, 0);
                return r;
            }
            nb = next + 1;
            fresh_bot = false;
        } else {
            if (next == bot) {
                detail::trace_length(trace, 0);
                return r;
            }
            nt = next - 1;
            fresh_top = false;
        }
        // unconditional binary probe on the clipped segment
        const std::size_t med = nb + (nt - nb) / 2;
        const std::int64_t mv = detail::bounded_probe(a, med, nb, nt, r.metrics, trace);
        ++r.metrics.comparisons;
        if (mv == key) {
            r.index = med;
            detail::trace_length(trace, 0);
            return r;
        }
        if (mv < key) {
            if (med == nt) {
                detail::trace_length(trace, 0);
                return r;
            }
            nb = med + 1;
            fresh_bot = false;
        } else {
            if (med == nb) {
                detail::trace_length(trace, 0);
                return r;
            }
            nt = med - 1;
            fresh_top = false;
        }
        bot = nb;
        top = nt;
        detail::trace_length(trace, top - bot + 1);
    }
    return r;
}

}  // namespace sortsearch
