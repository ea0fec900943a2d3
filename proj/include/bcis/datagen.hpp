#ifndef BCIS_DATAGEN_HPP
#define BCIS_DATAGEN_HPP

// Seeded, platform-independent input generators.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Bounded draws use rejection sampling written here rather than
// std::uniform_int_distribution, whose algorithm is implementation-defined.
// Per-trial seeds are derived with the SplitMix64 finalizer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcis {

using Element = std::int64_t;

enum class Distribution { uniform, sorted, reverse, equal, k_distinct, best_small, worst_small };

inline constexpr std::string_view to_string(Distribution d) noexcept {
    switch (d) {
        case Distribution::uniform: return "uniform";
        case Distribution::sorted: return "sorted";
        case Distribution::reverse: return "reverse";
        case Distribution::equal: return "equal";
        case Distribution::k_distinct: return "kdistinct";
        case Distribution::best_small: return "best-small";
        case Distribution::worst_small: return "worst-small";
    }
    return "?";
}

inline std::optional<Distribution> parse_distribution(std::string_view name) noexcept {
    for (auto d : {Distribution::uniform, Distribution::sorted, Distribution::reverse,
                   Distribution::equal, Distribution::k_distinct, Distribution::best_small,
                   Distribution::worst_small}) {
        if (name == to_string(d)) return d;
    }
    return std::nullopt;
}

/// Inputs where the order is fully determined by n.
inline constexpr bool is_deterministic(Distribution d) noexcept {
    return d == Distribution::sorted || d == Distribution::reverse || d == Distribution::equal;
}

struct ValueRange {
    Element lo = 0;
    Element hi = std::numeric_limits<std::int32_t>::max();

    bool operator==(const ValueRange&) const = default;
};

/// The best/worst constructions are only meaningful below this size; at and
/// above it the pre-scan rearranges the comparators.
inline constexpr std::size_t small_construction_limit = 100;

struct DatasetSpec {
    Distribution kind = Distribution::uniform;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> k_param;  // kdistinct only
    ValueRange value_range;              // uniform only

    bool operator==(const DatasetSpec&) const = default;
};

class SpecError : public std::invalid_argument {
public:
    explicit SpecError(const std::vector<std::string>& violations)
        : std::invalid_argument(join(violations)), violations_(violations) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid dataset spec:";
        for (const auto& s : v) out += " " + s + ";";
        return out;
    }
    std::vector<std::string> violations_;
};

/// Returns every violated constraint; an empty list means the spec is valid.
inline std::vector<std::string> validate(const DatasetSpec& spec) {
    std::vector<std::string> out;
    const bool small_kind =
        spec.kind == Distribution::best_small || spec.kind == Distribution::worst_small;
    if (small_kind && spec.n >= small_construction_limit) {
        out.push_back(std::string(to_string(spec.kind)) + " requires n < " +
                      std::to_string(small_construction_limit));
    }
    if (spec.kind == Distribution::k_distinct) {
        if (!spec.k_param) {
            out.emplace_back("k_param is required for kdistinct");
        } else if (*spec.k_param < 1 || *spec.k_param > spec.n) {
            out.push_back("k_param must satisfy 1 <= k_param <= n (got k_param=" +
                          std::to_string(*spec.k_param) + ", n=" + std::to_string(spec.n) + ")");
        }
    }
    if (spec.kind == Distribution::uniform && spec.value_range.lo > spec.value_range.hi) {
        out.emplace_back("value_range lo must not exceed hi");
    }
    return out;
}

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for one trial of a dataset. Independent of the algorithm, so every
/// algorithm in a grid sorts the same instance for a given trial.
constexpr std::uint64_t derive_seed(std::uint64_t base, Distribution kind, std::size_t n,
                                    std::size_t k_param, std::uint64_t trial) noexcept {
    std::uint64_t h = mix64(base);
    h = mix64(h ^ static_cast<std::uint64_t>(kind));
    h = mix64(h ^ static_cast<std::uint64_t>(n));
    h = mix64(h ^ static_cast<std::uint64_t>(k_param));
    return mix64(h ^ trial);
}

/// Uniform integer in [lo, hi] by rejection; identical on every platform.
inline Element uniform_draw(std::mt19937_64& rng, Element lo, Element hi) {
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<Element>(rng());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<Element>(static_cast<std::uint64_t>(lo) + x % range);
}

namespace detail {

// Values base+1 .. base+n with the two largest at the ends (second largest on
// the left) and the rest ascending or descending in between. The middle and
// last slots are then exchanged, which the sort's own first mid swap undoes.
inline std::vector<Element> comparator_construction(std::size_t n, Element base, bool ascending) {
    std::vector<Element> v(n);
    if (n == 0) return v;
    if (n == 1) {
        v[0] = base + 1;
        return v;
    }
    v.front() = base + static_cast<Element>(n) - 1;
    v.back() = base + static_cast<Element>(n);
    for (std::size_t p = 1; p + 1 < n; ++p) {
        v[p] = ascending ? base + static_cast<Element>(p) : base + static_cast<Element>(n - 1 - p);
    }
    const std::size_t mid = (n - 1) / 2;  // 0-based form of SL + (SR - SL)/2
    std::swap(v[mid], v[n - 1]);
    return v;
}

inline constexpr Element construction_offset_bound = 1'000'000;
inline constexpr Element default_equal_bound = 1'000;

}  // namespace detail

/// Builds the input described by `spec`. Throws SpecError if it is invalid.
inline std::vector<Element> generate(const DatasetSpec& spec) {
    if (auto violations = validate(spec); !violations.empty()) throw SpecError(violations);

    std::mt19937_64 rng(spec.seed);
    std::vector<Element> v;
    v.reserve(spec.n);

    switch (spec.kind) {
        case Distribution::uniform:
            for (std::size_t i = 0; i < spec.n; ++i) {
                v.push_back(uniform_draw(rng, spec.value_range.lo, spec.value_range.hi));
            }
            break;
        case Distribution::sorted:
            for (std::size_t i = 1; i <= spec.n; ++i) v.push_back(static_cast<Element>(i));
            break;
        case Distribution::reverse:
            for (std::size_t i = spec.n; i >= 1; --i) v.push_back(static_cast<Element>(i));
            break;
        case Distribution::equal:
            v.assign(spec.n, uniform_draw(rng, 0, detail::default_equal_bound));
            break;
        case Distribution::k_distinct: {
            const auto k = static_cast<Element>(*spec.k_param);
            for (std::size_t i = 0; i < spec.n; ++i) v.push_back(uniform_draw(rng, 1, k));
            break;
        }
        case Distribution::best_small:
        case Distribution::worst_small:
            v = detail::comparator_construction(
                spec.n, uniform_draw(rng, 0, detail::construction_offset_bound),
                spec.kind == Distribution::best_small);
            break;
    }
    return v;
}

}  // namespace bcis

#endif  // BCIS_DATAGEN_HPP
