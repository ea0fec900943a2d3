#ifndef BCIS_ACCEPTANCE_HPP
#define BCIS_ACCEPTANCE_HPP

// Acceptance checks for the sorting laboratory. Each criterion runs its
// experiment at fixed sizes, seeds and tolerances and reports pass, fail or
// (for machine-dependent timing) info. Used by the acceptance test binary and
// by `bcis_bench verify`.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bcis/bench.hpp"
#include "bcis/cost_models.hpp"
#include "bcis/csv.hpp"
#include "bcis/datagen.hpp"

namespace bcis::acceptance {

enum class Status { pass, fail, info };

inline constexpr std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::info: return "INFO";
    }
    return "?";
}

struct Result {
    Status status = Status::pass;
    std::string summary;
    std::vector<std::string> details;
};

struct Config {
    unsigned jobs = 1;
    std::uint64_t seed = 20160101;
};

struct Criterion {
    int id;
    std::string_view title;
    std::function<Result(const Config&)> run;
};

namespace detail {

using bench::Algorithm;
using bench::GridEntry;
using bench::Mode;
using bench::TrialRecord;

inline std::string fmt(double x, int precision = 4) {
    std::ostringstream os;
    os << std::setprecision(precision) << x;
    return os.str();
}

// Collects per-check outcomes; the criterion passes only if all do.
class Checker {
public:
    void check(bool ok, std::string line) {
        all_ok_ = all_ok_ && ok;
        lines_.push_back(std::string(ok ? "ok   " : "BAD  ") + std::move(line));
    }
    void note(std::string line) { lines_.push_back("     " + std::move(line)); }
    Result finish(std::string summary) && {
        return {all_ok_ ? Status::pass : Status::fail, std::move(summary), std::move(lines_)};
    }

private:
    bool all_ok_ = true;
    std::vector<std::string> lines_;
};

inline std::vector<TrialRecord> suite(const Config& cfg, std::vector<GridEntry> grid,
                                      Mode mode = Mode::count) {
    return bench::run_suite(grid, mode, {}, cfg.jobs);
}

inline GridEntry entry(Algorithm algo, Distribution kind, std::size_t n, std::uint64_t seed,
                       std::size_t trials, std::optional<std::size_t> k = std::nullopt) {
    DatasetSpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.seed = seed;
    spec.k_param = k;
    return {algo, spec, trials};
}

inline double mean_of(std::span<const TrialRecord> recs, auto&& field) {
    double s = 0;
    for (const auto& r : recs) s += static_cast<double>(field(*r.counters));
    return s / static_cast<double>(recs.size());
}

inline bool close_rel(double got, double want, double tol = 1e-12) {
    return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

// -- 1 ----------------------------------------------------------------------

inline Result correctness(const Config& cfg) {
    Checker c;
    const Algorithm algos[] = {Algorithm::bcis, Algorithm::is, Algorithm::qs};

    auto sort_with = [](Algorithm a, std::vector<Element>& v) {
        SortStats stats;
        bench::run_algorithm(a, std::span<Element>(v), stats, {});
    };
    auto is_reference = [](std::vector<Element> input, const std::vector<Element>& output) {
        std::sort(input.begin(), input.end());
        return input == output;
    };

    std::size_t exhaustive = 0, failures = 0;
    for (std::size_t len = 0; len <= 10; ++len) {
        std::vector<Element> digits(len, 0);
        for (;;) {
            ++exhaustive;
            for (auto a : algos) {
                auto v = digits;
                sort_with(a, v);
                if (!is_reference(digits, v)) ++failures;
            }
            std::size_t pos = 0;
            while (pos < len && digits[pos] == 2) digits[pos++] = 0;
            if (pos == len) break;
            ++digits[pos];
        }
    }
    c.check(failures == 0, std::to_string(exhaustive) +
                               " exhaustive sequences (len <= 10, alphabet {0,1,2}) x 3 algos: " +
                               std::to_string(failures) + " failures");

    std::mt19937_64 rng(cfg.seed);
    std::size_t random_failures = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto n = static_cast<std::size_t>(uniform_draw(rng, 0, 2000));
        // Alternate narrow and wide value ranges so some cases are duplicate-heavy.
        const Element hi = (t % 2) ? 1'000'000'000 : static_cast<Element>(1 + n / 8);
        std::vector<Element> input(n);
        for (auto& x : input) x = uniform_draw(rng, 0, hi);
        for (auto a : algos) {
            auto v = input;
            sort_with(a, v);
            if (!is_reference(input, v)) ++random_failures;
        }
    }
    c.check(random_failures == 0,
            "1000 random cases n in [0, 2000] x 3 algos: " + std::to_string(random_failures) +
                " failures");
    return std::move(c).finish("exhaustive + randomized sortedness/permutation");
}

// -- 2 ----------------------------------------------------------------------

inline Result all_equal_linearity(const Config& cfg) {
    Checker c;
    for (std::size_t n : {1'000u, 10'000u, 100'000u, 1'000'000u}) {
        const auto recs = suite(cfg, {entry(Algorithm::bcis, Distribution::equal, n, cfg.seed, 1)});
        const auto& k = *recs.front().counters;
        c.check(k.comparisons <= 2 * n && k.sort_trips == 1 && k.terminated_by_equal,
                "n=" + std::to_string(n) + " comparisons=" + std::to_string(k.comparisons) +
                    " (<= " + std::to_string(2 * n) + ") sort_trips=" +
                    std::to_string(k.sort_trips));
    }
    return std::move(c).finish("equal input: comparisons <= 2n, one trip");
}

// -- 3 ----------------------------------------------------------------------

inline Result sorted_bound(const Config& cfg) {
    Checker c;
    for (std::size_t n : {10'000u, 100'000u}) {
        const auto recs = suite(cfg, {entry(Algorithm::bcis, Distribution::sorted, n, cfg.seed, 1)});
        const double per_item = static_cast<double>(recs.front().counters->comparisons) / n;
        c.check(per_item >= 2 && per_item <= 6,
                "n=" + std::to_string(n) + " comparisons/n=" + fmt(per_item) + " in [2, 6]" +
                    " (model 4n)");
    }
    return std::move(c).finish("ascending input: comparisons/n in [2, 6]");
}

// -- 4 ----------------------------------------------------------------------

inline Result reverse_bound(const Config& cfg) {
    Checker c;
    for (std::size_t n : {1'000u, 10'000u}) {
        const auto recs =
            suite(cfg, {entry(Algorithm::bcis, Distribution::reverse, n, cfg.seed, 1)});
        const double ratio = static_cast<double>(recs.front().counters->comparisons) /
                             cost::bcis_worst_reverse(static_cast<double>(n));
        c.check(ratio >= 0.8 && ratio <= 1.3,
                "n=" + std::to_string(n) + " comparisons/(n^2/6 + 3n/2)=" + fmt(ratio) +
                    " in [0.8, 1.3]");
    }
    return std::move(c).finish("descending input vs n^2/6 + 3n/2");
}

// -- 5, 6 -------------------------------------------------------------------

inline constexpr std::size_t construction_sizes[] = {10, 50, 99};
inline constexpr std::size_t construction_seeds = 20;

inline Result worst_small(const Config& cfg) {
    Checker c;
    for (std::size_t n : construction_sizes) {
        const auto recs = suite(cfg, {entry(Algorithm::bcis, Distribution::worst_small, n, cfg.seed,
                                            construction_seeds)});
        const double model = cost::bcis_worst_small(static_cast<double>(n));
        double worst_dev = 0;
        for (const auto& r : recs) {
            const double dev = std::abs(r.counters->comparisons / model - 1);
            worst_dev = std::max(worst_dev, dev);
        }
        c.check(worst_dev <= 0.10, "n=" + std::to_string(n) + " comparisons=" +
                                       std::to_string(recs.front().counters->comparisons) +
                                       " vs n(n-1)/2=" + fmt(model, 6) + ", max |rel dev|=" +
                                       fmt(worst_dev) + " (<= 0.10) over " +
                                       std::to_string(recs.size()) + " seeds");
    }
    return std::move(c).finish("worst-small construction vs n(n-1)/2 within 10%");
}

inline Result best_small(const Config& cfg) {
    Checker c;
    for (std::size_t n : construction_sizes) {
        const auto recs = suite(cfg, {entry(Algorithm::bcis, Distribution::best_small, n, cfg.seed,
                                            construction_seeds)});
        std::uint64_t max_c = 0, max_a = 0;
        for (const auto& r : recs) {
            max_c = std::max(max_c, r.counters->comparisons);
            max_a = std::max(max_a, r.counters->assignments);
        }
        c.check(max_c <= 3 * n && max_a <= 3 * n,
                "n=" + std::to_string(n) + " max comparisons=" + std::to_string(max_c) +
                    " max assignments=" + std::to_string(max_a) + " (both <= 3n=" +
                    std::to_string(3 * n) + ") over " + std::to_string(recs.size()) + " seeds");
    }
    return std::move(c).finish("best-small construction: comparisons, assignments <= 3n");
}

// -- 7 ----------------------------------------------------------------------

inline Result average_scaling(const Config& cfg) {
    Checker c;
    std::vector<GridEntry> grid;
    for (int e = 10; e <= 17; ++e) {
        grid.push_back(entry(Algorithm::bcis, Distribution::uniform, std::size_t{1} << e, cfg.seed, 20));
    }
    const auto recs = suite(cfg, grid);

    std::vector<std::pair<double, double>> points;
    bool assign_below = true;
    std::ostringstream per_n;
    double measured_8k = 0;
    for (const auto& g : grid) {
        std::vector<TrialRecord> mine;
        for (const auto& r : recs) {
            if (r.dataset.n == g.spec.n) mine.push_back(r);
        }
        const double mc = mean_of(mine, [](const auto& k) { return k.comparisons; });
        const double ma = mean_of(mine, [](const auto& k) { return k.assignments; });
        points.emplace_back(static_cast<double>(g.spec.n), mc);
        assign_below = assign_below && ma < mc;
        per_n << " n=" << g.spec.n << ":" << fmt(ma / mc, 3);
        if (g.spec.n == (1u << 13)) measured_8k = mc;
    }
    const double slope = bench::fit_scaling_exponent(points);
    c.check(slope >= 1.35 && slope <= 1.65,
            "(a) log-log slope of mean comparisons = " + fmt(slope) + " in [1.35, 1.65]");
    c.check(assign_below, "(b) mean assignments < mean comparisons at every n (a/c:" +
                              per_n.str() + ")");
    const double model = cost::bcis_avg_comparisons(8192);
    const double factor = measured_8k / model;
    c.check(factor >= 0.5 && factor <= 2.0, "(c) n=8192 measured/model = " + fmt(measured_8k, 7) +
                                                "/" + fmt(model, 7) + " = " + fmt(factor) +
                                                " in [0.5, 2]");
    return std::move(c).finish("uniform input, n = 2^10..2^17, 20 seeds");
}

// -- 8 ----------------------------------------------------------------------

inline Result is_fidelity(const Config& cfg) {
    Checker c;
    for (std::size_t n : {1'000u, 10'000u}) {
        const auto recs = suite(cfg, {entry(Algorithm::is, Distribution::uniform, n, cfg.seed, 20)});
        const double mc = mean_of(recs, [](const auto& k) { return k.comparisons; });
        const double ratio = mc / (static_cast<double>(n) * n / 4);
        c.check(ratio >= 0.9 && ratio <= 1.1,
                "n=" + std::to_string(n) + " mean comparisons/(n^2/4) = " + fmt(ratio) +
                    " in [0.9, 1.1] over 20 seeds");
    }
    return std::move(c).finish("insertion sort average comparisons vs n^2/4");
}

// -- 9 ----------------------------------------------------------------------

inline Result bcis_is_ratio(const Config& cfg) {
    Checker c;
    const auto recs = suite(cfg, {entry(Algorithm::bcis, Distribution::uniform, 10'000, cfg.seed, 20),
                                  entry(Algorithm::is, Distribution::uniform, 10'000, cfg.seed, 20)});
    const auto rows =
        bench::ratio_table(recs, Algorithm::bcis, Algorithm::is, bench::Metric::comparisons);
    const double ratio = rows.front().ratio;
    const double model = cost::bcis_avg_comparisons(1e4) / cost::is_avg_comparisons(1e4);
    c.check(rows.size() == 1 && ratio >= 0.02 && ratio <= 0.10,
            "n=10000 BCIS/IS comparisons = " + fmt(ratio) + " in [0.02, 0.10] (model " +
                fmt(model) + ", sd " + fmt(rows.front().dispersion, 3) + ")");
    return std::move(c).finish("BCIS/IS comparison-count ratio at n=10^4");
}

// -- 10 ---------------------------------------------------------------------

inline Result cost_model_checks(const Config&) {
    Checker c;
    struct Case {
        const char* what;
        double got;
        double want;
    };
    using namespace bcis::cost;
    const Case cases[] = {
        {"is_avg_comparisons(1)", is_avg_comparisons(1), 0},
        {"is_avg_comparisons(10)", is_avg_comparisons(10), 31.5},
        {"is_avg_comparisons(10000)", is_avg_comparisons(10000), 25'007'499},
        {"is_avg_assignments(0)", is_avg_assignments(0), 3},
        {"is_avg_assignments(10)", is_avg_assignments(10), 45.5},
        {"is_avg_assignments(100)", is_avg_assignments(100), 2678},
        {"bcis_trip_comparisons(4)", bcis_trip_comparisons(4), 1.5},
        {"bcis_trip_comparisons(8)", bcis_trip_comparisons(8), 6},
        {"bcis_trip_comparisons(16)", bcis_trip_comparisons(16), 21},
        {"bcis_trip_assignments(4)", bcis_trip_assignments(4), 8.5},
        {"bcis_trip_assignments(8)", bcis_trip_assignments(8), 15},
        {"bcis_trip_assignments(16)", bcis_trip_assignments(16), 34},
        {"bcis_general_comparisons(10, 2)", bcis_general_comparisons(10, 2), 40},
        {"bcis_general_comparisons(8, 8)", bcis_general_comparisons(8, 8), 12},
        {"bcis_general_comparisons(100, 10)", bcis_general_comparisons(100, 10), 1080},
        {"bcis_avg_comparisons(4)", bcis_avg_comparisons(4), 4},
        {"bcis_avg_comparisons(10000)", bcis_avg_comparisons(10000), 1'122'300},
        {"bcis_avg_assignments(4)", bcis_avg_assignments(4), 24},
        {"bcis_avg_assignments(10000)", bcis_avg_assignments(10000), 143'300},
        {"bcis_best_small(1)", bcis_best_small(1), 1},
        {"bcis_best_small(50)", bcis_best_small(50), 50},
        {"bcis_best_small(99)", bcis_best_small(99), 99},
        {"bcis_best_sorted(100)", bcis_best_sorted(100), 400},
        {"bcis_best_sorted(10^4)", bcis_best_sorted(1e4), 4e4},
        {"bcis_best_sorted(0)", bcis_best_sorted(0), 0},
        {"bcis_worst_small(2)", bcis_worst_small(2), 1},
        {"bcis_worst_small(10)", bcis_worst_small(10), 45},
        {"bcis_worst_small(99)", bcis_worst_small(99), 4851},
        {"bcis_worst_reverse(100)", bcis_worst_reverse(100), 5450.0 / 3},
        {"bcis_worst_reverse(6)", bcis_worst_reverse(6), 15},
        {"bcis_worst_reverse(10^4)", bcis_worst_reverse(1e4), 50'045'000.0 / 3},
    };
    std::size_t bad = 0;
    for (const auto& k : cases) {
        if (!close_rel(k.got, k.want)) {
            ++bad;
            c.check(false, std::string(k.what) + " = " + fmt(k.got, 17) + ", want " +
                               fmt(k.want, 17));
        }
    }
    c.check(bad == 0, std::to_string(std::size(cases)) +
                          " substitution examples at relative error <= 1e-12");

    for (double n : {1e2, 1e4, 1e6}) {
        // Log-spaced k grid over [2, n], 64 points per decade, endpoints included.
        std::vector<double> ks{2};
        for (double e = std::log10(2.0) + 1.0 / 64; e < std::log10(n); e += 1.0 / 64) {
            ks.push_back(std::pow(10.0, e));
        }
        ks.push_back(n);
        double best_k = 2, best = bcis_general_comparisons(n, 2);
        for (double k : ks) {
            const double v = bcis_general_comparisons(n, k);
            if (v < best) best = v, best_k = k;
        }
        const double root = std::sqrt(n);
        const double at_root = bcis_general_comparisons(n, root);
        const bool near = best_k >= root / 4 && best_k <= root * 4;
        const bool beats_ends = at_root <= bcis_general_comparisons(n, 2) &&
                                at_root <= bcis_general_comparisons(n, n);
        c.check(near && beats_ends, "n=" + fmt(n) + " argmin k=" + fmt(best_k) +
                                        " within x4 of sqrt(n)=" + fmt(root) +
                                        "; T(sqrt n) <= T(2), T(n)");
    }
    return std::move(c).finish("closed-form substitutions and k-sweep minimum");
}

// -- 11 ---------------------------------------------------------------------

inline Result timing_report(const Config& cfg) {
    Result res{Status::info, "wall-time BCIS/QS medians (machine-dependent, not asserted)", {}};
    constexpr std::size_t trials = 7;
    auto table = [&](Distribution kind, std::initializer_list<std::size_t> sizes,
                     std::optional<std::size_t> k) {
        std::vector<GridEntry> grid;
        for (std::size_t n : sizes) {
            grid.push_back(entry(Algorithm::bcis, kind, n, cfg.seed, trials, k));
            grid.push_back(entry(Algorithm::qs, kind, n, cfg.seed, trials, k));
        }
        const auto recs = bench::run_suite(grid, Mode::time);
        for (const auto& row : bench::ratio_table(recs, Algorithm::bcis, Algorithm::qs,
                                                  bench::Metric::elapsed_ns,
                                                  bench::Aggregate::median)) {
            std::string line = std::string(to_string(kind)) + " n=" + std::to_string(row.n);
            if (k) line += " k=" + std::to_string(*k);
            res.details.push_back("     " + line + "  BCIS/QS time = " + fmt(row.ratio, 3));
        }
    };
    res.details.emplace_back("     uniform, n < 1500 (reported elsewhere: 0.3 .. 0.9)");
    table(Distribution::uniform, {32, 64, 128, 256, 512, 1024, 1499}, std::nullopt);
    res.details.emplace_back("     50 distinct values (reported elsewhere: 0.5 .. 0.9)");
    table(Distribution::k_distinct, {10'000, 100'000, 1'000'000}, 50);
    return res;
}

// -- 12 ---------------------------------------------------------------------

inline Result determinism(const Config& cfg) {
    Checker c;
    std::vector<GridEntry> grid;
    for (auto a : {Algorithm::bcis, Algorithm::is, Algorithm::qs}) {
        grid.push_back(entry(a, Distribution::uniform, 2'000, cfg.seed, 5));
        grid.push_back(entry(a, Distribution::k_distinct, 2'000, cfg.seed, 3, 50));
        grid.push_back(entry(a, Distribution::worst_small, 60, cfg.seed, 3));
        grid.push_back(entry(a, Distribution::reverse, 500, cfg.seed, 1));
    }
    auto render = [&](unsigned jobs) {
        std::ostringstream os;
        csv::write_csv(std::span<const TrialRecord>(bench::run_suite(grid, Mode::count, {}, jobs)), os);
        return os.str();
    };
    const std::string first = render(1);
    const std::string second = render(1);
    const std::string threaded = render(std::max(2u, cfg.jobs));
    c.check(first == second, "two serial count-mode runs: " + std::to_string(first.size()) +
                                 " bytes, identical=" + (first == second ? "yes" : "no"));
    c.check(first == threaded, "threaded run identical to serial=" +
                                   std::string(first == threaded ? "yes" : "no"));
    return std::move(c).finish("count-mode CSV is byte-reproducible");
}

}  // namespace detail

inline std::vector<Criterion> criteria() {
    using namespace detail;
    return {
        {1, "correctness", correctness},
        {2, "all-equal linearity", all_equal_linearity},
        {3, "sorted-array bound", sorted_bound},
        {4, "reverse-sorted bound", reverse_bound},
        {5, "small-n worst construction", worst_small},
        {6, "small-n best construction", best_small},
        {7, "average-case scaling", average_scaling},
        {8, "insertion sort baseline fidelity", is_fidelity},
        {9, "BCIS/IS comparison ratio", bcis_is_ratio},
        {10, "cost-model unit checks", cost_model_checks},
        {11, "timing ratios (report only)", timing_report},
        {12, "determinism", determinism},
    };
}

/// Runs the selected criteria (all when `only` is empty), printing one status
/// line per criterion followed by its details. Returns the number of failures.
inline int run(std::ostream& os, const Config& cfg, std::span<const int> only = {}) {
    int failures = 0;
    for (const auto& crit : criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), crit.id) == only.end()) continue;
        Result r;
        try {
            r = crit.run(cfg);
        } catch (const std::exception& ex) {
            r = {Status::fail, std::string("exception: ") + ex.what(), {}};
        }
        if (r.status == Status::fail) ++failures;
        os << '[' << to_string(r.status) << "] " << std::setw(2) << crit.id << ' ' << crit.title
           << ": " << r.summary << '\n';
        for (const auto& d : r.details) os << "        " << d << '\n';
        os.flush();
    }
    return failures;
}

}  // namespace bcis::acceptance

#endif  // BCIS_ACCEPTANCE_HPP
