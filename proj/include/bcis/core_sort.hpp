#ifndef BCIS_CORE_SORT_HPP
#define BCIS_CORE_SORT_HPP

// Bidirectional Conditional Insertion Sort.
//
// The array keeps two sorted parts, one growing from the left end and one
// from the right end. Every sort trip picks a left comparator LC and a right
// comparator RC (LC < RC) and scans the unsorted window between them: items
// <= LC are inserted into the left part, items >= RC into the right part, and
// everything else stays put for a later trip.
//
// The primitives below use 1-based inclusive indices over the span, so that
// seq[i] in the comments means span[i - 1].

#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "bcis/sort_stats.hpp"

namespace bcis {

/// Window spans at or above this size run the sqrt-length pre-scan.
inline constexpr std::size_t default_prescan_threshold = 100;

struct BcisOptions {
    std::size_t prescan_threshold = default_prescan_threshold;
};

/// Boundaries of one BCIS sort trip. `lc` and `rc` are meaningful only from
/// TripEvent::scan onwards.
template <typename T>
struct SortRegion {
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t sl = 0;
    std::size_t sr = 0;
    T lc{};
    T rc{};
};

enum class TripEvent {
    begin,  // top of the outer loop, before the mid swap
    scan,   // comparators fixed, before the conditional-insertion loop
    end,    // after SL/SR have been advanced past the trip's comparators
};

struct NoTripObserver {
    template <typename T>
    void operator()(TripEvent, std::span<const T>, const SortRegion<T>&) const noexcept {}
};

namespace detail {

inline void require_index(std::size_t i, std::size_t size, const char* what) {
    if (i < 1 || i > size) {
        throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                                " outside [1, " + std::to_string(size) + "]");
    }
}

template <typename T>
constexpr T& at(std::span<T> seq, std::size_t i) noexcept {
    return seq[i - 1];
}

inline std::size_t isqrt(std::size_t n) noexcept {
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Unchecked forms used inside bcis_sort, where the indices are invariant-bound.

template <typename T, StatsSink S>
void swap_at(std::span<T> seq, std::size_t i, std::size_t j, S& stats) {
    stats.on_swap();
    T temp = at(seq, i);
    at(seq, i) = at(seq, j);
    at(seq, j) = std::move(temp);
}

template <typename T, StatsSink S>
std::optional<std::size_t> equal_scan_at(std::span<T> seq, std::size_t sl, std::size_t sr,
                                         S& stats) {
    for (std::size_t k = sl + 1; k < sr; ++k) {
        if (!eq(at(seq, k), at(seq, sl), stats)) {
            swap_at(seq, k, sl, stats);
            return k;
        }
    }
    return std::nullopt;
}

template <typename T, StatsSink S>
void insert_right_at(std::span<T> seq, const T& item, std::size_t sr, std::size_t right,
                     S& stats) {
    std::size_t j = sr;
    while (j <= right && lt(at(seq, j), item, stats)) {
        shift(at(seq, j - 1), at(seq, j), stats);
        ++j;
    }
    assign(at(seq, j - 1), item, stats);
}

template <typename T, StatsSink S>
void insert_left_at(std::span<T> seq, const T& item, std::size_t sl, std::size_t left,
                    S& stats) {
    // Tracks j + 1 so the index never has to go below zero when left == 1.
    std::size_t slot = sl + 1;
    while (slot > left && lt(item, at(seq, slot - 1), stats)) {
        shift(at(seq, slot), at(seq, slot - 1), stats);
        --slot;
    }
    assign(at(seq, slot), item, stats);
}

template <typename T, StatsSink S>
std::size_t prescan_at(std::span<T> seq, std::size_t sl, std::size_t sr, S& stats,
                       std::size_t threshold) {
    if (sr <= sl || sr - sl < threshold) return sl + 1;
    const std::size_t last = sl + isqrt(sr - sl);
    for (std::size_t i = sl + 1; i <= last; ++i) {
        if (lt(at(seq, sr), at(seq, i), stats)) {
            swap_at(seq, sr, i, stats);
        } else if (lt(at(seq, i), at(seq, sl), stats)) {
            swap_at(seq, sl, i, stats);
        }
    }
    return last + 1;
}

}  // namespace detail

/// Exchanges seq[i] and seq[j] through a temporary (3 assignments).
template <std::totally_ordered T, StatsSink S>
void swap(std::span<T> seq, std::size_t i, std::size_t j, S& stats) {
    detail::require_index(i, seq.size(), "swap");
    detail::require_index(j, seq.size(), "swap");
    detail::swap_at(seq, i, j, stats);
}

/// Looks for an item in seq[sl+1 .. sr-1] that differs from seq[sl]. The first
/// one found is swapped into position sl and its old index is returned.
/// std::nullopt means every scanned item equals seq[sl].
template <std::totally_ordered T, StatsSink S>
std::optional<std::size_t> is_equal_scan(std::span<T> seq, std::size_t sl, std::size_t sr,
                                         S& stats) {
    detail::require_index(sl, seq.size(), "is_equal_scan");
    detail::require_index(sr, seq.size(), "is_equal_scan");
    return detail::equal_scan_at(seq, sl, sr, stats);
}

/// Inserts `item` into the ascending right part seq[sr .. right], using
/// seq[sr-1] as the free slot. Afterwards seq[sr-1 .. right] is ascending.
template <std::totally_ordered T, StatsSink S>
void insert_right(std::span<T> seq, const T& item, std::size_t sr, std::size_t right, S& stats) {
    if (sr < 2) throw std::out_of_range("insert_right: no free slot left of sr");
    detail::require_index(sr - 1, seq.size(), "insert_right");
    if (right >= sr) detail::require_index(right, seq.size(), "insert_right");
    detail::insert_right_at(seq, item, sr, right, stats);
}

/// Inserts `item` into the ascending left part seq[left .. sl], using
/// seq[sl+1] as the free slot. Afterwards seq[left .. sl+1] is ascending.
template <std::totally_ordered T, StatsSink S>
void insert_left(std::span<T> seq, const T& item, std::size_t sl, std::size_t left, S& stats) {
    if (left < 1) throw std::out_of_range("insert_left: left index must be >= 1");
    detail::require_index(sl + 1, seq.size(), "insert_left");
    detail::insert_left_at(seq, item, sl, left, stats);
}

/// Conditional pass over the first floor(sqrt(sr - sl)) items of the window
/// when the window spans at least `threshold`. Items above seq[sr] are swapped
/// into sr and items below seq[sl] into sl. Returns where the main scan
/// starts: just past the pre-scanned items, or sl + 1 when the pass is skipped.
template <std::totally_ordered T, StatsSink S>
std::size_t guarded_prescan(std::span<T> seq, std::size_t sl, std::size_t sr, S& stats,
                            std::size_t threshold = default_prescan_threshold) {
    if (sr > sl && sr - sl >= threshold) {
        detail::require_index(sl, seq.size(), "guarded_prescan");
        detail::require_index(sr, seq.size(), "guarded_prescan");
    }
    return detail::prescan_at(seq, sl, sr, stats, threshold);
}

/// Sorts seq[left .. right] (1-based, inclusive) ascending in place.
/// Not stable. Ranges with left >= right are left untouched.
///
/// `observer` is invoked at each TripEvent with a read-only view of the whole
/// sequence and the current trip boundaries.
template <std::totally_ordered T, StatsSink S, typename Observer = NoTripObserver>
void bcis_sort(std::span<T> seq, std::size_t left, std::size_t right, S& stats,
               const BcisOptions& options = {}, Observer&& observer = {}) {
    if (left < 1) throw std::out_of_range("bcis_sort: left index must be >= 1");
    if (right > seq.size()) {
        throw std::out_of_range("bcis_sort: right index " + std::to_string(right) +
                                " exceeds length " + std::to_string(seq.size()));
    }
    if (left >= right) return;

    using detail::at;
    const std::span<const T> view(seq);
    SortRegion<T> region{left, right, left, right, {}, {}};
    std::size_t& sl = region.sl;
    std::size_t& sr = region.sr;

    while (sl < sr) {
        stats.on_trip();
        observer(TripEvent::begin, view, std::as_const(region));

        detail::swap_at(seq, sr, sl + (sr - sl) / 2, stats);
        if (detail::eq(at(seq, sl), at(seq, sr), stats)) {
            if (!detail::equal_scan_at(seq, sl, sr, stats)) {
                stats.on_all_equal();
                return;
            }
        }
        if (detail::lt(at(seq, sr), at(seq, sl), stats)) detail::swap_at(seq, sl, sr, stats);

        std::size_t i = detail::prescan_at(seq, sl, sr, stats, options.prescan_threshold);

        detail::assign(region.lc, at(seq, sl), stats);
        detail::assign(region.rc, at(seq, sr), stats);
        observer(TripEvent::scan, view, std::as_const(region));

        T curr{};
        while (i < sr) {
            detail::assign(curr, at(seq, i), stats);
            if (detail::le(region.rc, curr, stats)) {
                // The item pulled in from sr-1 has not been scanned yet, so i stays.
                detail::assign(at(seq, i), at(seq, sr - 1), stats);
                detail::insert_right_at(seq, curr, sr, right, stats);
                --sr;
            } else if (detail::le(curr, region.lc, stats)) {
                detail::assign(at(seq, i), at(seq, sl + 1), stats);
                detail::insert_left_at(seq, curr, sl, left, stats);
                ++sl;
                ++i;
            } else {
                ++i;
            }
        }
        ++sl;
        --sr;
        observer(TripEvent::end, view, std::as_const(region));
    }
}

/// Sorts the whole span.
template <std::totally_ordered T, StatsSink S>
void bcis_sort(std::span<T> seq, S& stats, const BcisOptions& options = {}) {
    bcis_sort(seq, 1, seq.size(), stats, options);
}

}  // namespace bcis

#endif  // BCIS_CORE_SORT_HPP
