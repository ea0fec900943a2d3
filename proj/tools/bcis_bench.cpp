// bcis_bench: run sorting grids, reduce them to ratio tables and scaling fits,
// and run the acceptance suite.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bcis/acceptance.hpp"
#include "bcis/bench.hpp"
#include "bcis/csv.hpp"
#include "bcis/datagen.hpp"

namespace {

enum Exit : int { ok = 0, usage = 1, verification = 2, io = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    for (std::size_t start = 0;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

// "1000,2000,5000" or "start:stop:factor" (geometric, stop inclusive).
std::vector<std::size_t> parse_sizes(std::string_view text) {
    std::vector<std::size_t> out;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw UsageError("--n range must be start:stop:factor");
        const auto start = parse_u64(parts[0], "--n start");
        const auto stop = parse_u64(parts[1], "--n stop");
        const auto factor = parse_u64(parts[2], "--n factor");
        if (start == 0 || factor < 2) throw UsageError("--n range needs start >= 1, factor >= 2");
        for (auto n = start; n <= stop; n *= factor) out.push_back(n);
    } else {
        for (auto part : split(text, ',')) out.push_back(parse_u64(part, "--n value"));
    }
    if (out.empty()) throw UsageError("--n selects no sizes");
    return out;
}

std::vector<bcis::bench::Algorithm> parse_algos(std::string_view text) {
    std::vector<bcis::bench::Algorithm> out;
    for (auto part : split(text, ',')) {
        const auto a = bcis::bench::parse_algorithm(part);
        if (!a) throw UsageError("unknown algorithm '" + std::string(part) + "'");
        out.push_back(*a);
    }
    return out;
}

bcis::Distribution parse_dist(std::string_view text) {
    const auto d = bcis::parse_distribution(text);
    if (!d) throw UsageError("unknown distribution '" + std::string(text) + "'");
    return *d;
}

bcis::bench::Metric parse_metric(std::string_view text) {
    const auto m = bcis::bench::parse_metric(text);
    if (!m) throw UsageError("unknown metric '" + std::string(text) + "'");
    return *m;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct BenchArgs {
    std::string algo;
    std::string dist;
    std::string n;
    std::optional<std::size_t> k_param;
    std::optional<std::size_t> trials;
    std::uint64_t seed = 1;
    std::string mode = "count";
    unsigned jobs = default_jobs();
    std::string out;
};

int run_bench(const BenchArgs& a) {
    using namespace bcis;
    const auto algos = parse_algos(a.algo);
    const auto dist = parse_dist(a.dist);
    const auto mode = bench::parse_mode(a.mode);
    if (!mode) throw UsageError("unknown mode '" + a.mode + "'");
    const std::size_t trials = a.trials.value_or(is_deterministic(dist) ? 1 : 20);

    std::vector<bench::GridEntry> grid;
    for (std::size_t n : parse_sizes(a.n)) {
        DatasetSpec spec;
        spec.kind = dist;
        spec.n = n;
        spec.seed = a.seed;
        spec.k_param = a.k_param;
        if (auto v = validate(spec); !v.empty()) throw SpecError(v);
        for (auto algo : algos) grid.push_back({algo, spec, trials});
    }
    const auto records = bench::run_suite(grid, *mode, {}, a.jobs);
    csv::write_csv(std::span<const bench::TrialRecord>(records), std::filesystem::path(a.out));
    return ok;
}

struct SummaryArgs {
    std::string in;
    std::string ratio;
    std::string metric;
    std::string aggregate = "mean";
    std::string out;
};

int run_summary(const SummaryArgs& a) {
    using namespace bcis;
    const auto parts = split(a.ratio, ':');
    if (parts.size() != 2) throw UsageError("--ratio must be NUM:DEN");
    const auto num = parse_algos(parts[0]);
    const auto den = parse_algos(parts[1]);
    if (num.size() != 1 || den.size() != 1) throw UsageError("--ratio takes one algorithm per side");
    const auto metric = parse_metric(a.metric);
    if (a.aggregate != "mean" && a.aggregate != "median") throw UsageError("--aggregate must be mean or median");
    const auto how = a.aggregate == "mean" ? bench::Aggregate::mean : bench::Aggregate::median;

    const auto records = csv::read_records(a.in);
    std::vector<bench::SummaryRow> rows;
    try {
        rows = bench::ratio_table(records, num.front(), den.front(), metric, how);
    } catch (const std::logic_error& ex) {
        throw UsageError(ex.what());
    }
    csv::write_csv(std::span<const bench::SummaryRow>(rows), std::filesystem::path(a.out));
    return ok;
}

struct FitArgs {
    std::string in;
    std::string algo;
    std::string dist;
    std::string metric;
};

int run_fit(const FitArgs& a) {
    using namespace bcis;
    const auto algos = parse_algos(a.algo);
    if (algos.size() != 1) throw UsageError("--algo takes one algorithm");
    const auto records = csv::read_records(a.in);
    const auto points = bench::mean_by_n(records, algos.front(), parse_dist(a.dist), parse_metric(a.metric));
    double slope = 0;
    try {
        slope = bench::fit_scaling_exponent(points);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    std::cout << csv::detail::format_double(slope) << '\n';
    return ok;
}

int run_verify(const std::string& only, unsigned jobs) {
    std::vector<int> ids;
    if (!only.empty()) {
        for (auto part : split(only, ',')) ids.push_back(static_cast<int>(parse_u64(part, "--only id")));
    }
    bcis::acceptance::Config cfg;
    cfg.jobs = jobs;
    const int failures = bcis::acceptance::run(std::cout, cfg, ids);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << '\n';
    return failures == 0 ? ok : verification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Instrumented BCIS sorting laboratory"};
    app.require_subcommand(1);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Run an algorithm x size x trial grid and write CSV");
    bench->add_option("--algo", bench_args.algo, "bcis|is|qs, comma-separated for several")->required();
    bench->add_option("--dist", bench_args.dist,
                      "uniform|sorted|reverse|equal|kdistinct|best-small|worst-small")
        ->required();
    bench->add_option("--n", bench_args.n, "Sizes: comma list or start:stop:factor")->required();
    bench->add_option("--k-param", bench_args.k_param, "Distinct values for kdistinct");
    bench->add_option("--trials", bench_args.trials,
                      "Trials per size (default 20; 1 for sorted/reverse/equal)");
    bench->add_option("--seed", bench_args.seed, "Base seed")->capture_default_str();
    bench->add_option("--mode", bench_args.mode, "count|time|both")->capture_default_str();
    bench->add_option("--jobs", bench_args.jobs, "Worker threads for count mode")->capture_default_str();
    bench->add_option("--out", bench_args.out, "Output CSV path")->required();

    SummaryArgs summary_args;
    auto* summary = app.add_subcommand("summary", "Reduce trial records to a ratio table");
    summary->add_option("--in", summary_args.in, "Input CSV from bench")->required();
    summary->add_option("--ratio", summary_args.ratio, "NUM:DEN algorithms, e.g. bcis:is")->required();
    summary->add_option("--metric", summary_args.metric, "comparisons|assignments|elapsed_ns")->required();
    summary->add_option("--aggregate", summary_args.aggregate, "mean|median")->capture_default_str();
    summary->add_option("--out", summary_args.out, "Output CSV path")->required();

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "Print the log-log slope of a metric against n");
    fit->add_option("--in", fit_args.in, "Input CSV from bench")->required();
    fit->add_option("--algo", fit_args.algo, "Algorithm")->required();
    fit->add_option("--dist", fit_args.dist, "Distribution")->required();
    fit->add_option("--metric", fit_args.metric, "comparisons|assignments|elapsed_ns")->required();

    std::string verify_only;
    unsigned verify_jobs = default_jobs();
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--only", verify_only, "Comma-separated criterion ids");
    verify->add_option("--jobs", verify_jobs, "Worker threads for count-mode checks")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*bench) return run_bench(bench_args);
        if (*summary) return run_summary(summary_args);
        if (*fit) return run_fit(fit_args);
        if (*verify) return run_verify(verify_only, verify_jobs);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const bcis::SpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const bcis::bench::VerificationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return verification;
    } catch (const bcis::csv::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io;
    } catch (const bcis::csv::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return verification;
    }
    return usage;
}
