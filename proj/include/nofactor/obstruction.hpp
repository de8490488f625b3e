#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nofactor/antitorus.hpp"

namespace nofactor {

/// Projection of a w1-geodesic F' onto F = l1 x {p2}. In the product of trees
/// the image is gamma x {p2}, so its diameter is the edge length of gamma.
struct ProjectionResult {
    int n = 0;
    GammaResult gamma;
    std::int64_t diam = 0;
    bool contains_basepoint = false;

    friend bool operator==(const ProjectionResult&, const ProjectionResult&) = default;
};

ProjectionResult projection_diameter(const AntiTorusQuery& q, int n, const SearchBounds& bounds = {});

struct ObstructionRow {
    int n = 0;
    std::optional<ProjectionResult> projection;
    std::string failure;  // set when the row ran out of budget

    bool ok() const noexcept { return projection.has_value(); }

    friend bool operator==(const ObstructionRow&, const ObstructionRow&) = default;
};

struct ObstructionTable {
    std::vector<ObstructionRow> rows;
    SearchBounds bounds;

    std::int64_t max_diam() const;
    bool all_contain_basepoint() const;
    /// For every threshold up to the largest diameter some row reaches it.
    bool exceeds_every_threshold_up_to_max() const;

    friend bool operator==(const ObstructionTable&, const ObstructionTable&) = default;
};

/// Rows for n = 1..n_max. Runs the commuting-powers screen first and throws
/// HypothesisRejected if it finds a torus relation. Rows that exceed their
/// budget are kept and flagged. Rows are computed on up to `jobs` threads and
/// assembled in order.
ObstructionTable obstruction_table(const AntiTorusQuery& q, int n_max, const SearchBounds& bounds = {},
                                   unsigned jobs = 1);

struct WellSeparationResult {
    int n = 0;
    std::int64_t overlap = 0;            // L, the length of gamma
    std::int64_t crossing_set_size = 0;  // hyperplanes transverse to both strip hyperplanes
    bool facing_triple_free = false;
    std::int64_t triples_checked = 0;

    friend bool operator==(const WellSeparationResult&, const WellSeparationResult&) = default;
};

/// Longest gamma for which the exhaustive facing-triple scan is attempted.
inline constexpr std::int64_t kMaxTripleScanLength = 2000;

/// Crossing hyperplanes are indexed by the edges of gamma. Hyperplane p cuts
/// gamma between vertices p and p + 1; a triple is facing when none of its
/// members separates the other two. Throws BudgetExceeded past kMaxTripleScanLength.
WellSeparationResult separation_from_gamma(const GammaResult& gamma);

WellSeparationResult well_separation(const AntiTorusQuery& q, int n, const SearchBounds& bounds = {});

}  // namespace nofactor
