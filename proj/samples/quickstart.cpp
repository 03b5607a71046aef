// minimal tour: generate an instance, query it with each algorithm, print the
// per-query cost counters side by side

#include <iomanip>
#include <iostream>

#include "sortsearch/sortsearch.hpp"

using namespace sortsearch;

int main() {
    DistributionSpec spec;
    spec.kind = StepwiseGap{{1, 10, 100, 1000}};
    spec.n = 100000;
    spec.seed = 7;
    const SortedInstance instance = generate(spec);

    const std::int64_t key = instance[instance.size() / 3];
    std::cout << "searching key " << key << " in a stepwise instance of " << instance.size()
              << " values\n\n";

    const auto show = [](const char* name, const SearchResult& r) {
        std::cout << std::left << std::setw(8) << name;
        if (r.found())
            std::cout << "found at " << *r.index;
        else
            std::cout << "absent";
        std::cout << "  accesses=" << r.metrics.accesses << " iterations=" << r.metrics.iterations
                  << " comparisons=" << r.metrics.comparisons << "\n";
    };

    show("bs", binary_search(instance, key));
    show("is", interpolation_search(instance, key));
    show("ibs2", ibs_search(instance, key, IbsConfig{2}));
    show("as", adaptive_search(instance, key));
    const BinnedIndex index(instance);
    show("binned", binned_search(index, key));

    const GapSummary s = gap_summary(instance);
    std::cout << "\ngaps: mean=" << s.mean << " std=" << s.stddev << " min=" << s.min_gap
              << " max=" << s.max_gap << " (delta=" << smoothness_delta(instance).ratio()
              << ")\n";
    return 0;
}
