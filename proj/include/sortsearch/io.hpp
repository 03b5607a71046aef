#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sortsearch/bench.hpp"
#include "sortsearch/instance.hpp"

namespace sortsearch {

enum class InstanceFormat { text, binary };

inline constexpr std::array<char, 4> kInstanceMagic = {'A', 'S', 'R', 'T'};
inline constexpr std::uint8_t kInstanceVersion = 1;

namespace detail {

inline void put_u64_le(std::ostream& os, std::uint64_t v) {
    std::array<char, 8> buf;
    for (int i = 0; i < 8; ++i) buf[static_cast<std::size_t>(i)] = static_cast<char>(v >> (8 * i));
    os.write(buf.data(), 8);
}

inline std::uint64_t get_u64_le(std::istream& is) {
    std::array<char, 8> buf;
    is.read(buf.data(), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[static_cast<std::size_t>(i)]))
             << (8 * i);
    return v;
}

inline SortedInstance finish_instance(std::vector<std::int64_t> values,
                                      const std::filesystem::path& path, bool normalize,
                                      const char* position_noun) {
    if (values.empty()) throw std::runtime_error(path.string() + ": empty instance file");
    if (normalize) {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
    } else {
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i - 1] >= values[i])
                throw std::runtime_error(path.string() + ": not strictly increasing at " +
                                         position_noun + " " + std::to_string(i + 1));
        }
    }
    return SortedInstance(std::move(values));
}

}  // namespace detail

/// Sniffs the on-disk format from the 4-byte magic.
inline InstanceFormat detect_format(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path.string() + ": cannot open");
    std::array<char, 4> head{};
    in.read(head.data(), 4);
    if (in.gcount() == 4 && std::memcmp(head.data(), kInstanceMagic.data(), 4) == 0)
        return InstanceFormat::binary;
    return InstanceFormat::text;
}

/// Reads an instance file. Text is one decimal integer per line; binary is
/// magic "ASRT", a version byte, a little-endian u64 count, then count
/// little-endian i64 values. Without `normalize` the payload must already be
/// strictly increasing.
inline SortedInstance read_instance(const std::filesystem::path& path, InstanceFormat format,
                                    bool normalize = false) {
    if (format == InstanceFormat::text) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error(path.string() + ": cannot open");
        std::vector<std::int64_t> values;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t b = line.find_first_not_of(" \t");
            if (b == std::string::npos) {
                if (in.peek() == EOF) break;  // tolerate a blank final line
                throw std::runtime_error(path.string() + ": blank line " +
                                         std::to_string(line_no));
            }
            std::size_t e = line.find_last_not_of(" \t") + 1;
            std::int64_t v = 0;
            const auto res = std::from_chars(line.data() + b, line.data() + e, v);
            if (res.ec != std::errc{} || res.ptr != line.data() + e)
                throw std::runtime_error(path.string() + ": expected integer at line " +
                                         std::to_string(line_no));
            values.push_back(v);
        }
        return detail::finish_instance(std::move(values), path, normalize, "line");
    }

    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path.string() + ": cannot open");
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    if (in.gcount() != 4 || std::memcmp(magic.data(), kInstanceMagic.data(), 4) != 0)
        throw std::runtime_error(path.string() + ": bad magic (not an ASRT instance file)");
    char version = 0;
    in.read(&version, 1);
    if (!in || static_cast<std::uint8_t>(version) != kInstanceVersion)
        throw std::runtime_error(path.string() + ": unsupported version");
    const std::uint64_t count = detail::get_u64_le(in);
    if (!in) throw std::runtime_error(path.string() + ": truncated header");
    std::vector<std::int64_t> values;
    values.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t raw = detail::get_u64_le(in);
        if (!in)
            throw std::runtime_error(path.string() + ": truncated at value " +
                                     std::to_string(i + 1));
        values.push_back(static_cast<std::int64_t>(raw));
    }
    return detail::finish_instance(std::move(values), path, normalize, "value");
}

inline void write_instance(const SortedInstance& a, const std::filesystem::path& path,
                           InstanceFormat format) {
    if (format == InstanceFormat::text) {
        std::ofstream out(path);
        if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
        for (std::int64_t v : a.values()) out << v << '\n';
        if (!out) throw std::runtime_error(path.string() + ": write failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out.write(kInstanceMagic.data(), 4);
    const char version = static_cast<char>(kInstanceVersion);
    out.write(&version, 1);
    detail::put_u64_le(out, a.size());
    for (std::int64_t v : a.values()) detail::put_u64_le(out, static_cast<std::uint64_t>(v));
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

/// Consecutive position-based chunks of chunk_size elements; a final partial
/// chunk is dropped.
inline std::vector<SortedInstance> split_subinstances(const SortedInstance& a,
                                                      std::size_t chunk_size = 100000) {
    if (chunk_size < 2) throw std::invalid_argument("split_subinstances: chunk_size must be >= 2");
    std::vector<SortedInstance> chunks;
    const auto& v = a.values();
    for (std::size_t begin = 0; begin + chunk_size <= v.size(); begin += chunk_size)
        chunks.emplace_back(
            std::vector<std::int64_t>(v.begin() + static_cast<std::ptrdiff_t>(begin),
                                      v.begin() + static_cast<std::ptrdiff_t>(begin + chunk_size)));
    return chunks;
}

inline void write_report_csv(const BenchmarkReport& report, std::ostream& os) {
    os << "distribution,n,algorithm,accesses_per_query,iterations_per_query,"
          "time_ns_per_query,stddev_accesses\n";
    os << std::fixed << std::setprecision(4);
    for (const BenchmarkRow& row : report.rows) {
        os << row.distribution << ',' << row.n << ',' << row.algorithm << ','
           << row.accesses_per_query << ',' << row.iterations_per_query << ','
           << row.time_ns_per_query << ',' << row.stddev_accesses << '\n';
    }
}

inline void write_report_csv(const BenchmarkReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    write_report_csv(report, out);
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace sortsearch
