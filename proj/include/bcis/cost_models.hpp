#ifndef BCIS_COST_MODELS_HPP
#define BCIS_COST_MODELS_HPP

// Closed-form operation-count models for insertion sort and BCIS.
// All values are expectations in floating point; nothing is rounded.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace bcis::cost {

struct CostPrediction {
    double n = 0;
    std::optional<double> k;
    double predicted_comparisons = 0;
    std::optional<double> predicted_assignments;
};

/// Insertion sort, average comparisons: n^2/4 + 3n/4 - 1.
constexpr double is_avg_comparisons(double n) noexcept { return n * n / 4 + 3 * n / 4 - 1; }

/// Insertion sort, average assignments: n^2/4 + 7n/4 + 3.
constexpr double is_avg_assignments(double n) noexcept { return n * n / 4 + 7 * n / 4 + 3; }

/// Comparisons spent by one insertion function during one trip when it
/// receives k/2 of the k items inserted in that trip.
constexpr double bcis_trip_comparisons(double k) noexcept { return is_avg_comparisons(k / 2); }

/// As above for assignments, plus the one move that frees the slot next to
/// the sorted part.
constexpr double bcis_trip_assignments(double k) noexcept { return is_avg_assignments(k / 2) + 1; }

inline void require_k(double n, double k) {
    if (!(k >= 2 && k <= n)) {
        throw std::domain_error("k = " + std::to_string(k) + " outside [2, n = " +
                                std::to_string(n) + "]");
    }
}

/// BCIS comparisons when every trip inserts k items: (n/k)(k^2/8 + 3k/4 - 2 + n) - n.
/// Throws std::domain_error unless 2 <= k <= n.
inline double bcis_general_comparisons(double n, double k) {
    require_k(n, k);
    return n / k * (k * k / 8 + 3 * k / 4 - 2 + n) - n;
}

/// BCIS average comparisons at k = sqrt(n): (9/8) n^1.5 - n/4 - 2 sqrt(n).
inline double bcis_avg_comparisons(double n) {
    const double r = std::sqrt(n);
    return 9.0 / 8.0 * n * r - n / 4 - 2 * r;
}

/// BCIS average assignments at k = sqrt(n): n^1.5/8 + 7n/4 + 8 sqrt(n).
inline double bcis_avg_assignments(double n) {
    const double r = std::sqrt(n);
    return n * r / 8 + 7 * n / 4 + 8 * r;
}

// Best and worst cases. The "small" forms apply below the pre-scan threshold.

constexpr double bcis_best_small(double n) noexcept { return n; }
constexpr double bcis_best_sorted(double n) noexcept { return 4 * n; }
constexpr double bcis_worst_small(double n) noexcept { return n * (n - 1) / 2; }
constexpr double bcis_worst_reverse(double n) noexcept { return n * n / 6 + 3 * n / 2; }

inline CostPrediction predict_insertion_sort(double n) {
    return {n, std::nullopt, is_avg_comparisons(n), is_avg_assignments(n)};
}

inline CostPrediction predict_bcis(double n) {
    return {n, std::sqrt(n), bcis_avg_comparisons(n), bcis_avg_assignments(n)};
}

inline CostPrediction predict_bcis(double n, double k) {
    return {n, k, bcis_general_comparisons(n, k), std::nullopt};
}

}  // namespace bcis::cost

#endif  // BCIS_COST_MODELS_HPP
