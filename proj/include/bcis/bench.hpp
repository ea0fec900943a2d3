#ifndef BCIS_BENCH_HPP
#define BCIS_BENCH_HPP

// Benchmark harness: runs (algorithm x dataset x trial) grids, verifies every
// sorted output, and reduces the resulting records to ratio tables and
// log-log scaling fits.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "bcis/baselines.hpp"
#include "bcis/core_sort.hpp"
#include "bcis/datagen.hpp"
#include "bcis/sort_stats.hpp"

namespace bcis::bench {

enum class Algorithm { bcis, is, qs };

inline constexpr std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
        case Algorithm::bcis: return "bcis";
        case Algorithm::is: return "is";
        case Algorithm::qs: return "qs";
    }
    return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (auto a : {Algorithm::bcis, Algorithm::is, Algorithm::qs}) {
        if (name == to_string(a)) return a;
    }
    return std::nullopt;
}

enum class Mode { count, time, both };

inline std::optional<Mode> parse_mode(std::string_view name) noexcept {
    if (name == "count") return Mode::count;
    if (name == "time") return Mode::time;
    if (name == "both") return Mode::both;
    return std::nullopt;
}

inline constexpr bool counts(Mode m) noexcept { return m != Mode::time; }
inline constexpr bool times(Mode m) noexcept { return m != Mode::count; }

enum class Metric { comparisons, assignments, elapsed_ns };

inline constexpr std::string_view to_string(Metric m) noexcept {
    switch (m) {
        case Metric::comparisons: return "comparisons";
        case Metric::assignments: return "assignments";
        case Metric::elapsed_ns: return "elapsed_ns";
    }
    return "?";
}

inline std::optional<Metric> parse_metric(std::string_view name) noexcept {
    for (auto m : {Metric::comparisons, Metric::assignments, Metric::elapsed_ns}) {
        if (name == to_string(m)) return m;
    }
    return std::nullopt;
}

/// The counter subset that is persisted in CSV.
struct Counters {
    std::uint64_t comparisons = 0;
    std::uint64_t assignments = 0;
    std::uint64_t swaps = 0;
    std::uint64_t sort_trips = 0;
    bool terminated_by_equal = false;

    static Counters from(const SortStats& s) noexcept {
        return {s.comparisons, s.assignments, s.swaps, s.sort_trips, s.terminated_by_equal};
    }
    bool operator==(const Counters&) const = default;
};

struct TrialRecord {
    Algorithm algo = Algorithm::bcis;
    DatasetSpec dataset;  // seed is the derived per-trial seed
    std::uint64_t trial = 0;
    std::optional<Counters> counters;       // count and both modes
    std::optional<std::int64_t> elapsed_ns;  // time and both modes

    bool operator==(const TrialRecord&) const = default;
};

struct RunOptions {
    BcisOptions bcis;
    QuicksortOptions qs;
};

class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string describe(const DatasetSpec& spec) {
    std::ostringstream os;
    os << "dist=" << to_string(spec.kind) << " n=" << spec.n << " seed=" << spec.seed;
    if (spec.k_param) os << " k_param=" << *spec.k_param;
    return os.str();
}

template <StatsSink S>
void run_algorithm(Algorithm algo, std::span<Element> data, S& stats, const RunOptions& opts) {
    switch (algo) {
        case Algorithm::bcis: bcis_sort(data, stats, opts.bcis); break;
        case Algorithm::is: insertion_sort(data, stats); break;
        case Algorithm::qs: quicksort_mo3(data, stats, opts.qs); break;
    }
}

/// Throws VerificationError unless `output` is the ascending permutation of
/// `input`.
inline void verify_output(std::span<const Element> input, std::span<const Element> output,
                          Algorithm algo, const DatasetSpec& spec) {
    std::vector<Element> expected(input.begin(), input.end());
    std::sort(expected.begin(), expected.end());
    if (output.size() == expected.size() && std::equal(output.begin(), output.end(), expected.begin())) {
        return;
    }
    std::ostringstream os;
    os << "verification failed: algo=" << to_string(algo) << ' ' << describe(spec) << ": ";
    if (!std::is_sorted(output.begin(), output.end())) {
        const auto it = std::is_sorted_until(output.begin(), output.end());
        os << "output not sorted at position " << (it - output.begin());
    } else {
        os << "output is not a permutation of the input";
    }
    throw VerificationError(os.str());
}

/// Generates `spec`, sorts a clone with `algo` and verifies the result.
/// Timing runs an untimed warm-up on a separate clone first and measures an
/// uninstrumented run; counting runs use a fresh SortStats.
inline TrialRecord run_trial(Algorithm algo, const DatasetSpec& spec, Mode mode,
                             std::uint64_t trial = 0, const RunOptions& opts = {}) {
    const std::vector<Element> input = generate(spec);
    TrialRecord rec{algo, spec, trial, std::nullopt, std::nullopt};

    if (counts(mode)) {
        std::vector<Element> work = input;
        SortStats stats;
        run_algorithm(algo, std::span<Element>(work), stats, opts);
        verify_output(input, work, algo, spec);
        rec.counters = Counters::from(stats);
    }
    if (times(mode)) {
        NullStats sink;
        std::vector<Element> warm = input;
        run_algorithm(algo, std::span<Element>(warm), sink, opts);
        std::vector<Element> work = input;
        const auto t0 = std::chrono::steady_clock::now();
        run_algorithm(algo, std::span<Element>(work), sink, opts);
        const auto t1 = std::chrono::steady_clock::now();
        verify_output(input, work, algo, spec);
        rec.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    }
    return rec;
}

struct GridEntry {
    Algorithm algo = Algorithm::bcis;
    DatasetSpec spec;  // spec.seed is the base seed for the entry
    std::size_t trials = 1;
};

/// Dataset for one trial of a grid entry.
inline DatasetSpec trial_spec(const DatasetSpec& base, std::uint64_t trial) {
    DatasetSpec s = base;
    s.seed = derive_seed(base.seed, base.kind, base.n, base.k_param.value_or(0), trial);
    return s;
}

/// Runs every trial of every entry. Output is ordered by grid position, then
/// trial, regardless of `jobs`. Count-mode trials may run on up to `jobs`
/// threads; timing always runs serially.
inline std::vector<TrialRecord> run_suite(std::span<const GridEntry> grid, Mode mode,
                                          const RunOptions& opts = {}, unsigned jobs = 1) {
    if (grid.empty()) throw std::invalid_argument("run_suite: empty grid");

    struct Task {
        std::size_t entry;
        std::uint64_t trial;
    };
    std::vector<Task> tasks;
    for (std::size_t e = 0; e < grid.size(); ++e) {
        for (std::uint64_t t = 0; t < grid[e].trials; ++t) tasks.push_back({e, t});
    }
    std::vector<TrialRecord> out(tasks.size());

    auto run_one = [&](std::size_t idx) {
        const auto& [e, t] = tasks[idx];
        try {
            out[idx] = run_trial(grid[e].algo, trial_spec(grid[e].spec, t), mode, t, opts);
        } catch (const VerificationError& ex) {
            throw VerificationError("grid entry " + std::to_string(e) + ", trial " +
                                    std::to_string(t) + ": " + ex.what());
        } catch (const std::exception& ex) {
            throw std::runtime_error("grid entry " + std::to_string(e) + ", trial " +
                                     std::to_string(t) + ": " + ex.what());
        }
    };

    if (jobs <= 1 || times(mode) || tasks.size() < 2) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        const auto n_workers = std::min<std::size_t>(jobs, tasks.size());
        for (std::size_t w = 0; w < n_workers; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    try {
                        run_one(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = tasks.size();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

struct SummaryRow {
    Distribution dist = Distribution::uniform;
    std::size_t n = 0;
    std::optional<std::size_t> k_param;
    Algorithm numerator = Algorithm::bcis;
    Algorithm denominator = Algorithm::is;
    Metric metric = Metric::comparisons;
    double ratio = 0;
    std::size_t trials = 0;
    double dispersion = 0;  // sample standard deviation of per-trial ratios

    bool operator==(const SummaryRow&) const = default;
};

enum class Aggregate { mean, median };

namespace detail {

inline double metric_value(const TrialRecord& r, Metric m) {
    switch (m) {
        case Metric::comparisons:
            if (r.counters) return static_cast<double>(r.counters->comparisons);
            break;
        case Metric::assignments:
            if (r.counters) return static_cast<double>(r.counters->assignments);
            break;
        case Metric::elapsed_ns:
            if (r.elapsed_ns) return static_cast<double>(*r.elapsed_ns);
            break;
    }
    throw std::invalid_argument("record for algo=" + std::string(to_string(r.algo)) + ' ' +
                                describe(r.dataset) + " has no " + std::string(to_string(m)));
}

inline double aggregate(std::vector<double> v, Aggregate how) {
    if (how == Aggregate::mean) return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

inline double sample_stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0;
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double ss = 0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / (v.size() - 1));
}

}  // namespace detail

/// One row per (dist, n, k_param): aggregate(numerator) / aggregate(denominator)
/// over trials that ran on the same dataset instance. Throws
/// std::invalid_argument when a record of either algorithm has no counterpart.
inline std::vector<SummaryRow> ratio_table(std::span<const TrialRecord> records, Algorithm numerator,
                                           Algorithm denominator, Metric metric,
                                           Aggregate how = Aggregate::mean) {
    using Instance = std::tuple<Distribution, std::size_t, std::size_t, std::uint64_t, std::uint64_t>;
    using Group = std::tuple<Distribution, std::size_t, std::size_t>;
    auto instance_of = [](const TrialRecord& r) {
        return Instance{r.dataset.kind, r.dataset.n, r.dataset.k_param.value_or(0), r.dataset.seed,
                        r.trial};
    };

    std::map<Instance, const TrialRecord*> num, den;
    for (const auto& r : records) {
        if (r.algo == numerator) num.emplace(instance_of(r), &r);
        if (r.algo == denominator) den.emplace(instance_of(r), &r);
    }
    auto unmatched = [](const TrialRecord& r, Algorithm missing) {
        return std::invalid_argument("no " + std::string(to_string(missing)) +
                                     " record matching " + describe(r.dataset) +
                                     " trial=" + std::to_string(r.trial));
    };
    for (const auto& [key, r] : num) {
        if (!den.contains(key)) throw unmatched(*r, denominator);
    }
    for (const auto& [key, r] : den) {
        if (!num.contains(key)) throw unmatched(*r, numerator);
    }

    struct Acc {
        std::optional<std::size_t> k_param;
        std::vector<double> num, den, per_trial;
    };
    std::map<Group, Acc> groups;
    for (const auto& [key, r] : num) {
        const double a = detail::metric_value(*r, metric);
        const double b = detail::metric_value(*den.at(key), metric);
        auto& g = groups[Group{std::get<0>(key), std::get<1>(key), std::get<2>(key)}];
        g.k_param = r->dataset.k_param;
        g.num.push_back(a);
        g.den.push_back(b);
        if (b > 0) g.per_trial.push_back(a / b);
    }

    std::vector<SummaryRow> rows;
    for (auto& [key, g] : groups) {
        const double a = detail::aggregate(g.num, how);
        const double b = detail::aggregate(g.den, how);
        if (!(a > 0) || !(b > 0)) {
            throw std::domain_error("ratio undefined for dist=" +
                                    std::string(to_string(std::get<0>(key))) +
                                    " n=" + std::to_string(std::get<1>(key)) + ": zero " +
                                    std::string(to_string(metric)));
        }
        rows.push_back({std::get<0>(key), std::get<1>(key), g.k_param, numerator, denominator,
                        metric, a / b, g.num.size(), detail::sample_stddev(g.per_trial)});
    }
    return rows;
}

/// Least-squares slope of log(metric) against log(n).
inline double fit_scaling_exponent(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) throw std::invalid_argument("fit needs at least 3 points");
    double sx = 0, sy = 0;
    for (const auto& [n, m] : points) {
        if (!(n > 0) || !(m > 0)) {
            throw std::invalid_argument("fit needs positive values (got n=" + std::to_string(n) +
                                        ", metric=" + std::to_string(m) + ")");
        }
        sx += std::log(n);
        sy += std::log(m);
    }
    const double k = static_cast<double>(points.size());
    const double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0;
    for (const auto& [n, m] : points) {
        const double dx = std::log(n) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(m) - my);
    }
    if (sxx == 0) throw std::invalid_argument("fit needs at least two distinct n");
    return sxy / sxx;
}

/// Mean metric per n over the records of one algorithm and distribution.
inline std::vector<std::pair<double, double>> mean_by_n(std::span<const TrialRecord> records,
                                                        Algorithm algo, Distribution dist,
                                                        Metric metric) {
    std::map<std::size_t, std::vector<double>> by_n;
    for (const auto& r : records) {
        if (r.algo == algo && r.dataset.kind == dist) {
            by_n[r.dataset.n].push_back(detail::metric_value(r, metric));
        }
    }
    std::vector<std::pair<double, double>> out;
    for (auto& [n, v] : by_n) {
        out.emplace_back(static_cast<double>(n), detail::aggregate(std::move(v), Aggregate::mean));
    }
    return out;
}

}  // namespace bcis::bench

#endif  // BCIS_BENCH_HPP
