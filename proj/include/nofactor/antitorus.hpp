#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "nofactor/complex.hpp"
#include "nofactor/word.hpp"

namespace nofactor {

/// Budgets for the bounded searches. Every certificate records the values used.
struct SearchBounds {
    int commuting_k = 8;  // K: largest power of w1 tried for a torus relation
    int commuting_j = 8;  // J: largest power of w2 tried
    std::int64_t max_tops = 1'000'000;  // iMax: developed top words before giving up
    std::int64_t max_periods = 10'000;  // kMax: periods of w1 scanned for a mismatch

    friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

/// A horizontal and a vertical loop at the single vertex of a complete square
/// complex. Their lifts through the base vertex span the flat being searched.
class AntiTorusQuery {
public:
    /// Throws NotCSC, UnsupportedComplex or ClassError.
    AntiTorusQuery(SquareComplex complex, PeriodicWord w1, PeriodicWord w2);

    const SquareComplex& complex() const noexcept { return complex_; }
    const PeriodicWord& w1() const noexcept { return w1_; }
    const PeriodicWord& w2() const noexcept { return w2_; }

    /// The same flat read east-to-west: w1 is replaced by its inverse.
    AntiTorusQuery mirrored() const { return AntiTorusQuery(complex_, w1_.inverse(), w2_); }

private:
    SquareComplex complex_;
    PeriodicWord w1_;
    PeriodicWord w2_;
};

/// Least (k, j) in lexicographic order with 1 <= k <= K, 1 <= j <= J such that
/// the w1^k by w2^j rectangle closes up into a torus; nullopt if none.
std::optional<std::pair<int, int>> commuting_powers_search(const AntiTorusQuery& q, int max_k, int max_j);

struct PeriodicTop {
    std::int64_t j = 0;             // period: top(w1^n, w2^j) == w1^n
    std::int64_t first_repeat = 0;  // least i >= 1 with v_i == v_{i+j}
};

/// Develops v_i = top(w1^n, w2^i) for i = 1, 2, ... until a word repeats.
/// Throws BudgetExceeded once i + j would pass max_tops.
PeriodicTop find_periodic_top(const AntiTorusQuery& q, int n, std::int64_t max_tops);

/// Extent of the w1-geodesic through height y = j * |w2| along the flat, in
/// edges on each side of the base column.
struct OverlapSides {
    std::int64_t left = 0;
    std::int64_t right = 0;

    friend bool operator==(const OverlapSides&, const OverlapSides&) = default;
};

/// Number of leading letters on which top(w1^k, w2^j) agrees with w1^infinity
/// as k grows. Throws BudgetExceeded after max_periods periods of agreement.
std::int64_t rightward_overlap(const AntiTorusQuery& q, std::int64_t j, std::int64_t max_periods);

/// Both sides; the left side is the rightward overlap of the mirrored query.
OverlapSides overlap_at_height(const AntiTorusQuery& q, std::int64_t j, std::int64_t max_periods);

struct GammaResult {
    int n = 0;
    std::int64_t j = 0;
    std::int64_t left_len = 0;
    std::int64_t right_len = 0;
    std::int64_t total_len = 0;
    std::int64_t y_offset = 0;

    friend bool operator==(const GammaResult&, const GammaResult&) = default;
};

/// The finite segment gamma where the w1-geodesic through the top of the
/// w1^n by w2^j rectangle runs inside the flat.
GammaResult overlap_gamma(const AntiTorusQuery& q, int n, const SearchBounds& bounds = {});

}  // namespace nofactor
