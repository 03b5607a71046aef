// command-line front end: generate | search | bench | split | analyze

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sortsearch/sortsearch.hpp"

namespace ss = sortsearch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAbsent = 3;

ss::InstanceFormat parse_format(const std::string& token) {
    if (token == "text") return ss::InstanceFormat::text;
    if (token == "binary") return ss::InstanceFormat::binary;
    throw std::invalid_argument("unknown format: " + token);
}

ss::InstanceFormat resolve_read_format(const std::string& token, const std::string& path) {
    if (token == "auto") return ss::detect_format(path);
    return parse_format(token);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream is(s);
    while (std::getline(is, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void print_gap_summary(const ss::GapSummary& s) {
    std::cout << "gaps=" << s.gap_count << "\n"
              << "range=" << s.range << "\n"
              << std::fixed << std::setprecision(4)
              << "gap_mean=" << s.mean << "\n"
              << "gap_std=" << s.stddev << "\n"
              << "gap_min=" << s.min_gap << "\n"
              << "gap_max=" << s.max_gap << "\n";
    std::cout.unsetf(std::ios::floatfield);
}

struct GenerateOptions {
    std::string dist;
    std::size_t n = 0;
    std::uint64_t seed = 42;
    std::int64_t start = 0;
    std::string out;
    std::string format = "text";
    std::int64_t gap = 10;
    std::int64_t initial_gap = 1;
    std::int64_t growth_step = 1;
    std::string zone_gaps = "1,10,100,1000";
    double split = 0.8;
    double mean = 1000.0;
    double stddev = 100.0;
    std::string target;  // null model: instance file supplying the target summary
};

ss::DistributionSpec build_spec(const GenerateOptions& o) {
    ss::DistributionSpec spec;
    spec.n = o.n;
    spec.start = o.start;
    spec.seed = o.seed;
    if (o.dist == "uniform") {
        spec.kind = ss::UniformGap{o.gap};
    } else if (o.dist == "increasing") {
        spec.kind = ss::IncreasingGap{o.initial_gap, o.growth_step};
    } else if (o.dist == "stepwise") {
        std::vector<std::int64_t> gaps;
        for (const std::string& tok : split_csv(o.zone_gaps)) gaps.push_back(std::stoll(tok));
        spec.kind = ss::StepwiseGap{std::move(gaps)};
    } else if (o.dist == "paretian") {
        spec.kind = ss::Paretian{o.split};
    } else if (o.dist == "gaussian") {
        spec.kind = ss::GaussianGap{o.mean, o.stddev};
    } else if (o.dist == "nullmodel") {
        if (o.target.empty())
            throw std::invalid_argument("nullmodel needs --target <instance file>");
        const auto target = ss::read_instance(o.target, ss::detect_format(o.target));
        spec.kind = ss::NullModel{ss::gap_summary(target)};
        spec.n = target.size();
    } else {
        throw std::invalid_argument("unknown distribution: " + o.dist);
    }
    return spec;
}

int cmd_generate(const GenerateOptions& o) {
    const ss::DistributionSpec spec = build_spec(o);
    const ss::SortedInstance instance = ss::generate(spec);
    ss::write_instance(instance, o.out, parse_format(o.format));
    std::cout << "n=" << instance.size() << "\n";
    if (instance.size() >= 2)
        print_gap_summary(ss::gap_summary(instance));
    else
        std::cout << "gaps=0\n";
    return kExitOk;
}

struct SearchOptions {
    std::string in;
    std::int64_t key = 0;
    std::string algo = "as";
    unsigned theta = 2;
    std::string format = "auto";
};

int cmd_search(const SearchOptions& o) {
    const ss::SortedInstance instance =
        ss::read_instance(o.in, resolve_read_format(o.format, o.in));
    ss::AlgorithmSpec algo = ss::parse_algorithm(o.algo);
    if (o.algo == "ibs") algo.theta = o.theta;

    ss::SearchResult r;
    switch (algo.kind) {
        case ss::Algorithm::binary: r = ss::binary_search(instance, o.key); break;
        case ss::Algorithm::interpolation: r = ss::interpolation_search(instance, o.key); break;
        case ss::Algorithm::interpolation_binary:
            r = ss::ibs_search(instance, o.key, ss::IbsConfig{algo.theta});
            break;
        case ss::Algorithm::adaptive: r = ss::adaptive_search(instance, o.key); break;
        case ss::Algorithm::binned: {
            const ss::BinnedIndex index(instance);
            r = ss::binned_search(index, o.key);
            break;
        }
    }
    if (r.found())
        std::cout << "found index=" << *r.index;
    else
        std::cout << "absent";
    std::cout << " accesses=" << r.metrics.accesses << " iterations=" << r.metrics.iterations
              << " comparisons=" << r.metrics.comparisons << "\n";
    return r.found() ? kExitOk : kExitAbsent;
}

struct BenchOptions {
    std::string dists = "uniform,increasing,stepwise,paretian";
    std::string sizes = "100000";
    std::string algos = "bs,is,ibs2,as";
    unsigned reps = 10;
    std::uint64_t seed = 42;
    double query_ratio = 0.001;
    double hit_fraction = 0.8;
    std::string out_csv;
    std::string config_file;
};

void apply_config_file(BenchOptions& o) {
    std::ifstream in(o.config_file);
    if (!in) throw std::runtime_error(o.config_file + ": cannot open");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] == '#') continue;
        const std::size_t eq = line.find('=', b);
        if (eq == std::string::npos)
            throw std::runtime_error(o.config_file + ": expected key=value at line " +
                                     std::to_string(line_no));
        const std::string key = line.substr(b, eq - b);
        const std::string value = line.substr(eq + 1);
        if (key == "dists") o.dists = value;
        else if (key == "sizes") o.sizes = value;
        else if (key == "algos") o.algos = value;
        else if (key == "reps") o.reps = static_cast<unsigned>(std::stoul(value));
        else if (key == "seed") o.seed = std::stoull(value);
        else if (key == "query_ratio") o.query_ratio = std::stod(value);
        else if (key == "hit_fraction") o.hit_fraction = std::stod(value);
        else if (key == "out_csv") o.out_csv = value;
        else
            throw std::runtime_error(o.config_file + ": unknown key '" + key + "' at line " +
                                     std::to_string(line_no));
    }
}

void print_report_table(const ss::BenchmarkReport& report) {
    std::cout << std::left << std::setw(12) << "distribution" << std::right << std::setw(10) << "n"
              << "  " << std::left << std::setw(8) << "algo" << std::right << std::setw(14)
              << "accesses/q" << std::setw(14) << "iterations/q" << std::setw(16) << "time_ns/q"
              << std::setw(14) << "stddev_acc" << "\n";
    std::cout << std::fixed << std::setprecision(2);
    for (const auto& row : report.rows) {
        std::cout << std::left << std::setw(12) << row.distribution << std::right << std::setw(10)
                  << row.n << "  " << std::left << std::setw(8) << row.algorithm << std::right
                  << std::setw(14) << row.accesses_per_query << std::setw(14)
                  << row.iterations_per_query << std::setw(16) << row.time_ns_per_query
                  << std::setw(14) << row.stddev_accesses << "\n";
    }
    std::cout.unsetf(std::ios::floatfield);
}

int cmd_bench(BenchOptions o) {
    if (!o.config_file.empty()) apply_config_file(o);
    ss::BenchmarkConfig config;
    config.repetitions = o.reps;
    config.seed = o.seed;
    config.query_ratio = o.query_ratio;
    config.hit_fraction = o.hit_fraction;
    for (const std::string& tok : split_csv(o.algos))
        config.algorithms.push_back(ss::parse_algorithm(tok));
    for (const std::string& size_tok : split_csv(o.sizes)) {
        const std::size_t n = static_cast<std::size_t>(std::stoull(size_tok));
        for (const std::string& dist : split_csv(o.dists))
            config.specs.push_back(ss::default_spec(dist, n, o.seed));
    }
    const ss::BenchmarkReport report = ss::run_benchmark(config);
    print_report_table(report);
    if (!o.out_csv.empty()) {
        ss::write_report_csv(report, std::filesystem::path(o.out_csv));
        std::cerr << "wrote " << o.out_csv << "\n";
    }
    return kExitOk;
}

struct SplitOptions {
    std::string in;
    std::size_t chunk = 100000;
    std::string out_prefix;
    std::string format = "auto";
};

int cmd_split(const SplitOptions& o) {
    const ss::InstanceFormat format = resolve_read_format(o.format, o.in);
    const ss::SortedInstance instance = ss::read_instance(o.in, format);
    const auto chunks = ss::split_subinstances(instance, o.chunk);
    const char* ext = format == ss::InstanceFormat::binary ? ".bin" : ".txt";
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        const std::string path = o.out_prefix + std::to_string(i) + ext;
        ss::write_instance(chunks[i], path, format);
        std::cout << "wrote " << path << " (" << chunks[i].size() << " values)\n";
    }
    std::cout << "chunks=" << chunks.size() << "\n";
    return kExitOk;
}

struct AnalyzeOptions {
    std::string in;
    std::uint64_t seed = 42;
    std::string format = "auto";
};

int cmd_analyze(const AnalyzeOptions& o) {
    const ss::SortedInstance instance =
        ss::read_instance(o.in, resolve_read_format(o.format, o.in));
    if (instance.size() < 2) throw std::runtime_error("need at least 2 elements");
    std::cout << "n=" << instance.size() << "\n";
    print_gap_summary(ss::gap_summary(instance));
    const ss::SmoothnessDelta delta = ss::smoothness_delta(instance);
    const ss::UniformDistance l2 = ss::l2_from_uniform(instance);
    std::cout << std::fixed << std::setprecision(6) << "delta_max_gap=" << delta.max_gap << "\n"
              << "delta_min_gap=" << delta.min_gap << "\n"
              << "delta=" << delta.ratio() << "\n"
              << "l2_raw=" << l2.raw << "\n"
              << "l2_normalized=" << l2.normalized << "\n";
    if (instance.size() >= 3) {
        try {
            const ss::NonuniformityReport rep = ss::nonuniformity_report(instance, o.seed);
            std::cout << "null_spearman=" << rep.spearman << "\n"
                      << "null_pearson=" << rep.pearson << "\n"
                      << "null_l2_raw=" << rep.l2_null.raw << "\n"
                      << "null_l2_normalized=" << rep.l2_null.normalized << "\n";
        } catch (const std::invalid_argument&) {
            // constant gap sequence: correlation against the null model is undefined
            std::cout << "null_spearman=nan\n"
                      << "null_pearson=nan\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"laboratory for searching sorted integer sets"};
    app.require_subcommand(1);

    GenerateOptions gen;
    CLI::App* cgen = app.add_subcommand("generate", "generate a synthetic instance file");
    cgen->add_option("--dist", gen.dist,
                     "distribution: uniform|increasing|stepwise|paretian|gaussian|nullmodel")
        ->required();
    cgen->add_option("--n", gen.n, "element count")->required();
    cgen->add_option("--seed", gen.seed, "RNG seed (default 42)");
    cgen->add_option("--start", gen.start, "first value (default 0)");
    cgen->add_option("--out", gen.out, "output file")->required();
    cgen->add_option("--format", gen.format, "text|binary (default text)");
    cgen->add_option("--gap", gen.gap, "uniform: fixed gap (default 10)");
    cgen->add_option("--initial-gap", gen.initial_gap, "increasing: first gap (default 1)");
    cgen->add_option("--growth-step", gen.growth_step, "increasing: gap growth (default 1)");
    cgen->add_option("--zone-gaps", gen.zone_gaps,
                     "stepwise: comma list, ascending (default 1,10,100,1000)");
    cgen->add_option("--split", gen.split, "paretian: value-sum split (default 0.8)");
    cgen->add_option("--mean", gen.mean, "gaussian: gap mean (default 1000)");
    cgen->add_option("--std", gen.stddev, "gaussian: gap stddev (default 100)");
    cgen->add_option("--target", gen.target, "nullmodel: instance file to mirror");

    SearchOptions sea;
    CLI::App* csea = app.add_subcommand("search", "run one membership query");
    csea->add_option("--in", sea.in, "instance file")->required();
    csea->add_option("--key", sea.key, "key to search")->required();
    csea->add_option("--algo", sea.algo, "bs|is|ibs|ibs<theta>|as|binned (default as)");
    csea->add_option("--theta", sea.theta, "IBS threshold factor (default 2)");
    csea->add_option("--format", sea.format, "text|binary|auto (default auto)");

    BenchOptions ben;
    CLI::App* cben = app.add_subcommand("bench", "run the benchmark protocol");
    cben->add_option("--dists", ben.dists, "comma list (default uniform,increasing,stepwise,paretian)");
    cben->add_option("--sizes", ben.sizes, "comma list of n (default 100000)");
    cben->add_option("--algos", ben.algos, "comma list (default bs,is,ibs2,as)");
    cben->add_option("--reps", ben.reps, "instances per spec (default 10)");
    cben->add_option("--seed", ben.seed, "top-level seed (default 42)");
    cben->add_option("--query-ratio", ben.query_ratio, "queries per element (default 0.001)");
    cben->add_option("--hit-fraction", ben.hit_fraction, "fraction of member keys (default 0.8)");
    cben->add_option("--out-csv", ben.out_csv, "also write the report as CSV");
    cben->add_option("--config", ben.config_file, "key=value config file (flags override)");

    SplitOptions spl;
    CLI::App* cspl = app.add_subcommand("split", "split an instance into fixed-size chunks");
    cspl->add_option("--in", spl.in, "instance file")->required();
    cspl->add_option("--chunk", spl.chunk, "chunk size (default 100000)");
    cspl->add_option("--out-prefix", spl.out_prefix, "output file prefix")->required();
    cspl->add_option("--format", spl.format, "text|binary|auto (default auto)");

    AnalyzeOptions ana;
    CLI::App* cana = app.add_subcommand("analyze", "gap statistics and null-model comparison");
    cana->add_option("--in", ana.in, "instance file")->required();
    cana->add_option("--seed", ana.seed, "null model seed (default 42)");
    cana->add_option("--format", ana.format, "text|binary|auto (default auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cgen->parsed()) return cmd_generate(gen);
        if (csea->parsed()) return cmd_search(sea);
        if (cben->parsed()) return cmd_bench(ben);
        if (cspl->parsed()) return cmd_split(spl);
        if (cana->parsed()) return cmd_analyze(ana);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
