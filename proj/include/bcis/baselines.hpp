#ifndef BCIS_BASELINES_HPP
#define BCIS_BASELINES_HPP

// Instrumented reference sorts. Same index convention (1-based, inclusive)
// and counting convention as bcis_sort.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "bcis/core_sort.hpp"
#include "bcis/sort_stats.hpp"

namespace bcis {

namespace detail {

inline void require_range(std::size_t left, std::size_t right, std::size_t size, const char* what) {
    if (left < 1) throw std::out_of_range(std::string(what) + ": left index must be >= 1");
    if (right > size) {
        throw std::out_of_range(std::string(what) + ": right index " + std::to_string(right) +
                                " exceeds length " + std::to_string(size));
    }
}

template <typename T, StatsSink S>
void insertion_sort_at(std::span<T> seq, std::size_t left, std::size_t right, S& stats) {
    for (std::size_t i = left + 1; i <= right; ++i) {
        stats.on_trip();
        T item{};
        assign(item, at(seq, i), stats);
        std::size_t slot = i;
        while (slot > left && lt(item, at(seq, slot - 1), stats)) {
            shift(at(seq, slot), at(seq, slot - 1), stats);
            --slot;
        }
        assign(at(seq, slot), item, stats);
    }
}

}  // namespace detail

/// Classical insertion sort: one left-anchored sorted part, grown by one item
/// per outer iteration (each iteration counts as a sort trip).
template <std::totally_ordered T, StatsSink S>
void insertion_sort(std::span<T> seq, std::size_t left, std::size_t right, S& stats) {
    detail::require_range(left, right, seq.size(), "insertion_sort");
    if (left >= right) return;
    detail::insertion_sort_at(seq, left, right, stats);
}

template <std::totally_ordered T, StatsSink S>
void insertion_sort(std::span<T> seq, S& stats) {
    insertion_sort(seq, 1, seq.size(), stats);
}

struct QuicksortOptions {
    /// Partitions of at most this many items are finished by insertion sort.
    /// 0 disables the cutoff.
    std::size_t insertion_cutoff = 0;
};

/// Quicksort with median-of-three pivots.
///
/// The first, middle and last items of each partition are sorted in place and
/// the middle one becomes the pivot. Partitioning uses two crossing scans that
/// both stop on keys equal to the pivot, so runs of duplicates split evenly.
/// The smaller side is recursed into and the larger one iterated, keeping the
/// stack depth logarithmic. Each partitioning step counts as a sort trip.
template <std::totally_ordered T, StatsSink S>
void quicksort_mo3(std::span<T> seq, std::size_t left, std::size_t right, S& stats,
                   const QuicksortOptions& options = {}) {
    detail::require_range(left, right, seq.size(), "quicksort_mo3");
    using detail::at;
    using detail::lt;

    std::size_t lo = left;
    std::size_t hi = right;
    while (lo < hi) {
        const std::size_t size = hi - lo + 1;
        if (options.insertion_cutoff > 0 && size <= options.insertion_cutoff) {
            detail::insertion_sort_at(seq, lo, hi, stats);
            return;
        }
        stats.on_trip();

        const std::size_t mid = lo + (hi - lo) / 2;
        if (lt(at(seq, mid), at(seq, lo), stats)) detail::swap_at(seq, lo, mid, stats);
        if (lt(at(seq, hi), at(seq, lo), stats)) detail::swap_at(seq, lo, hi, stats);
        if (lt(at(seq, hi), at(seq, mid), stats)) detail::swap_at(seq, mid, hi, stats);
        if (size <= 3) return;

        // seq[lo] <= pivot <= seq[hi] bound both scans.
        detail::swap_at(seq, mid, hi - 1, stats);
        T pivot{};
        detail::assign(pivot, at(seq, hi - 1), stats);
        std::size_t i = lo;
        std::size_t j = hi - 1;
        for (;;) {
            while (lt(at(seq, ++i), pivot, stats)) {
            }
            while (lt(pivot, at(seq, --j), stats)) {
            }
            if (i >= j) break;
            detail::swap_at(seq, i, j, stats);
        }
        detail::swap_at(seq, i, hi - 1, stats);

        // Pivot now final at i; sides are [lo, i-1] and [i+1, hi].
        if (i - lo < hi - i) {
            if (i > lo + 1) quicksort_mo3(seq, lo, i - 1, stats, options);
            lo = i + 1;
        } else {
            if (i + 1 < hi) quicksort_mo3(seq, i + 1, hi, stats, options);
            hi = i - 1;
        }
    }
}

template <std::totally_ordered T, StatsSink S>
void quicksort_mo3(std::span<T> seq, S& stats, const QuicksortOptions& options = {}) {
    quicksort_mo3(seq, 1, seq.size(), stats, options);
}

}  // namespace bcis

#endif  // BCIS_BASELINES_HPP
