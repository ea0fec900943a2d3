#ifndef BCIS_SORT_STATS_HPP
#define BCIS_SORT_STATS_HPP

#include <concepts>
#include <cstdint>

namespace bcis {

/// Operation counters threaded through every instrumented sort.
///
/// Counting convention shared by all algorithms in this library:
///  - comparisons: every element-vs-element comparison that is evaluated
///    (short-circuited guards are not counted);
///  - assignments: every write of an element value, to an array slot or to a
///    temporary (a swap contributes exactly 3);
///  - shifts: element moves performed inside insertion loops (a subset of
///    assignments);
///  - sort_trips: outer-loop iterations.
/// Index arithmetic is never counted.
struct SortStats {
    std::uint64_t comparisons = 0;
    std::uint64_t assignments = 0;
    std::uint64_t swaps = 0;
    std::uint64_t shifts = 0;
    std::uint64_t sort_trips = 0;
    bool terminated_by_equal = false;

    void on_compare() noexcept { ++comparisons; }
    void on_assign() noexcept { ++assignments; }
    void on_shift() noexcept {
        ++shifts;
        ++assignments;
    }
    void on_swap() noexcept {
        ++swaps;
        assignments += 3;
    }
    void on_trip() noexcept { ++sort_trips; }
    void on_all_equal() noexcept { terminated_by_equal = true; }

    bool operator==(const SortStats&) const = default;
};

/// Discards every event; used for timing runs.
struct NullStats {
    void on_compare() noexcept {}
    void on_assign() noexcept {}
    void on_shift() noexcept {}
    void on_swap() noexcept {}
    void on_trip() noexcept {}
    void on_all_equal() noexcept {}
};

template <typename S>
concept StatsSink = requires(S& s) {
    s.on_compare();
    s.on_assign();
    s.on_shift();
    s.on_swap();
    s.on_trip();
    s.on_all_equal();
};

static_assert(StatsSink<SortStats>);
static_assert(StatsSink<NullStats>);

namespace detail {

// Counted element operations. Every comparison and element write in the
// algorithms goes through one of these.

template <typename T, StatsSink S>
constexpr bool lt(const T& a, const T& b, S& stats) {
    stats.on_compare();
    return a < b;
}

template <typename T, StatsSink S>
constexpr bool le(const T& a, const T& b, S& stats) {
    stats.on_compare();
    return a <= b;
}

template <typename T, StatsSink S>
constexpr bool eq(const T& a, const T& b, S& stats) {
    stats.on_compare();
    return a == b;
}

template <typename T, StatsSink S>
constexpr void assign(T& dst, const T& src, S& stats) {
    stats.on_assign();
    dst = src;
}

template <typename T, StatsSink S>
constexpr void shift(T& dst, const T& src, S& stats) {
    stats.on_shift();
    dst = src;
}

}  // namespace detail

}  // namespace bcis

#endif  // BCIS_SORT_STATS_HPP
