#ifndef BCIS_CSV_HPP
#define BCIS_CSV_HPP

// Flat-file formats for trial records and ratio summaries. Fields never need
// quoting; inapplicable fields are empty. Lines end in LF.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "bcis/bench.hpp"

namespace bcis::csv {

inline constexpr std::string_view record_header =
    "algo,dist,n,k_param,seed,trial,comparisons,assignments,swaps,sort_trips,"
    "terminated_by_equal,elapsed_ns";

inline constexpr std::string_view summary_header =
    "dist,n,k_param,numerator,denominator,metric,ratio,trials,dispersion";

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename T>
void put_opt(std::ostream& os, const std::optional<T>& v) {
    if (v) os << *v;
}

// Shortest representation that parses back to the same double.
inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

template <typename T>
T parse_number(std::string_view field, std::string_view name, std::size_t line_no) {
    T value{};
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + std::string(name) +
                         " '" + std::string(field) + "'");
    }
    return value;
}

template <typename T>
std::optional<T> parse_opt(std::string_view field, std::string_view name, std::size_t line_no) {
    if (field.empty()) return std::nullopt;
    return parse_number<T>(field, name, line_no);
}

inline std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
    return os;
}

inline void finish_write(std::ofstream& os, const std::filesystem::path& path) {
    os.flush();
    if (!os) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace detail

inline void write_csv(std::span<const bench::TrialRecord> records, std::ostream& os) {
    os << record_header << '\n';
    for (const auto& r : records) {
        os << bench::to_string(r.algo) << ',' << to_string(r.dataset.kind) << ',' << r.dataset.n
           << ',';
        detail::put_opt(os, r.dataset.k_param);
        os << ',' << r.dataset.seed << ',' << r.trial << ',';
        if (r.counters) {
            const auto& c = *r.counters;
            os << c.comparisons << ',' << c.assignments << ',' << c.swaps << ',' << c.sort_trips
               << ',' << (c.terminated_by_equal ? "true" : "false");
        } else {
            os << ",,,,";
        }
        os << ',';
        detail::put_opt(os, r.elapsed_ns);
        os << '\n';
    }
}

inline void write_csv(std::span<const bench::SummaryRow> rows, std::ostream& os) {
    os << summary_header << '\n';
    for (const auto& r : rows) {
        os << to_string(r.dist) << ',' << r.n << ',';
        detail::put_opt(os, r.k_param);
        os << ',' << bench::to_string(r.numerator) << ',' << bench::to_string(r.denominator) << ','
           << bench::to_string(r.metric) << ',' << detail::format_double(r.ratio) << ','
           << r.trials << ',' << detail::format_double(r.dispersion) << '\n';
    }
}

template <typename Row>
void write_csv(std::span<const Row> rows, const std::filesystem::path& path) {
    auto os = detail::open_for_write(path);
    write_csv(rows, os);
    detail::finish_write(os, path);
}

inline std::vector<bench::TrialRecord> parse_records(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing header");
    if (line != record_header) throw ParseError("unexpected header '" + line + "'");

    std::vector<bench::TrialRecord> out;
    std::size_t line_no = 1;
    using detail::parse_number;
    using detail::parse_opt;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = detail::split(line);
        if (f.size() != 12) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 12 fields, got " +
                             std::to_string(f.size()));
        }
        bench::TrialRecord r;
        const auto algo = bench::parse_algorithm(f[0]);
        const auto dist = parse_distribution(f[1]);
        if (!algo) throw ParseError("line " + std::to_string(line_no) + ": unknown algo");
        if (!dist) throw ParseError("line " + std::to_string(line_no) + ": unknown dist");
        r.algo = *algo;
        r.dataset.kind = *dist;
        r.dataset.n = parse_number<std::size_t>(f[2], "n", line_no);
        r.dataset.k_param = parse_opt<std::size_t>(f[3], "k_param", line_no);
        r.dataset.seed = parse_number<std::uint64_t>(f[4], "seed", line_no);
        r.trial = parse_number<std::uint64_t>(f[5], "trial", line_no);
        if (!f[6].empty()) {
            bench::Counters c;
            c.comparisons = parse_number<std::uint64_t>(f[6], "comparisons", line_no);
            c.assignments = parse_number<std::uint64_t>(f[7], "assignments", line_no);
            c.swaps = parse_number<std::uint64_t>(f[8], "swaps", line_no);
            c.sort_trips = parse_number<std::uint64_t>(f[9], "sort_trips", line_no);
            if (f[10] != "true" && f[10] != "false") {
                throw ParseError("line " + std::to_string(line_no) + ": bad terminated_by_equal");
            }
            c.terminated_by_equal = f[10] == "true";
            r.counters = c;
        }
        r.elapsed_ns = parse_opt<std::int64_t>(f[11], "elapsed_ns", line_no);
        out.push_back(r);
    }
    return out;
}

inline std::vector<bench::TrialRecord> read_records(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open '" + path.string() + "' for reading");
    return parse_records(is);
}

}  // namespace bcis::csv

#endif  // BCIS_CSV_HPP
