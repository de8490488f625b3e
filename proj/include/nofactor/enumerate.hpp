#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nofactor/complex.hpp"

namespace nofactor {

struct EnumerateOptions {
    /// Search nodes visited before BudgetExceeded is thrown.
    std::uint64_t node_budget = 200'000'000;
    unsigned jobs = 1;
};

/// Squares of a one-vertex complex in relabeling-invariant normal form: each
/// square replaced by its least orientation, then sorted.
using SquareSet = std::vector<Square>;

SquareSet normalize_squares(std::vector<Square> squares);

/// Least normal form over all relabelings (permutations and inversions of the
/// labels within each class).
SquareSet canonical_form(const SquareComplex& complex);

/// Every one-vertex complete square complex with the given numbers of
/// horizontal and vertical edges, one per relabeling class, ordered by
/// canonical form. Horizontal labels are a, b, c, ...; vertical ones x, y, z, ...
std::vector<SquareComplex> enumerate_csc(int hcount, int vcount, const EnumerateOptions& options = {});

/// Streams the same census to a callback.
void for_each_csc(int hcount, int vcount, const std::function<void(const SquareComplex&)>& sink,
                  const EnumerateOptions& options = {});

SquareComplex one_vertex_complex(int hcount, int vcount, std::vector<Square> squares);

}  // namespace nofactor
