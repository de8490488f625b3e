#include "nofactor/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "nofactor/errors.hpp"

namespace nofactor {

ProjectionResult projection_diameter(const AntiTorusQuery& q, int n, const SearchBounds& bounds) {
    ProjectionResult r;
    r.n = n;
    r.gamma = overlap_gamma(q, n, bounds);
    r.diam = r.gamma.total_len;
    // gamma spans [-left_len, right_len] around the base vertex at 0.
    r.contains_basepoint = r.gamma.left_len >= 0 && r.gamma.right_len >= 0;
    return r;
}

std::int64_t ObstructionTable::max_diam() const {
    std::int64_t best = 0;
    for (const auto& row : rows) {
        if (row.ok()) {
            best = std::max(best, row.projection->diam);
        }
    }
    return best;
}

bool ObstructionTable::all_contain_basepoint() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ObstructionRow& row) { return !row.ok() || row.projection->contains_basepoint; });
}

bool ObstructionTable::exceeds_every_threshold_up_to_max() const {
    const std::int64_t top = max_diam();
    for (std::int64_t xi = 1; xi <= top; ++xi) {
        const bool reached = std::any_of(rows.begin(), rows.end(),
                                         [xi](const ObstructionRow& row) { return row.ok() && row.projection->diam >= xi; });
        if (!reached) {
            return false;
        }
    }
    return true;
}

ObstructionTable obstruction_table(const AntiTorusQuery& q, int n_max, const SearchBounds& bounds, unsigned jobs) {
    if (n_max < 1) {
        throw InvalidParams("nmax must be at least 1");
    }
    if (const auto relation = commuting_powers_search(q, bounds.commuting_k, bounds.commuting_j)) {
        throw HypothesisRejected("w1^" + std::to_string(relation->first) + " and w2^" + std::to_string(relation->second) +
                                 " commute: not an anti-torus, no obstruction rows produced");
    }

    ObstructionTable table;
    table.bounds = bounds;
    table.rows.resize(static_cast<std::size_t>(n_max));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < n_max; i = next++) {
            ObstructionRow& row = table.rows[static_cast<std::size_t>(i)];
            row.n = i + 1;
            try {
                row.projection = projection_diameter(q, row.n, bounds);
            } catch (const BudgetExceeded& e) {
                row.failure = e.what();
            }
        }
    };
    jobs = std::clamp(jobs, 1u, static_cast<unsigned>(n_max));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    return table;
}

WellSeparationResult separation_from_gamma(const GammaResult& gamma) {
    WellSeparationResult r;
    r.n = gamma.n;
    r.overlap = gamma.total_len;

    // Edge p of gamma joins vertices p and p + 1, positions relative to the base vertex.
    std::vector<std::int64_t> crossing;
    for (std::int64_t p = -gamma.left_len; p < gamma.right_len; ++p) {
        crossing.push_back(p);
    }
    r.crossing_set_size = static_cast<std::int64_t>(std::set<std::int64_t>(crossing.begin(), crossing.end()).size());

    if (r.overlap > kMaxTripleScanLength) {
        throw BudgetExceeded("gamma of length " + std::to_string(r.overlap) + " is too long for the facing-triple scan");
    }
    // Hyperplane h separates edges a and c when they lie in opposite halfspaces
    // {vertices <= h} and {vertices >= h + 1}.
    auto side_of_edge = [](std::int64_t h, std::int64_t e) { return e + 1 <= h ? -1 : (e >= h + 1 ? 1 : 0); };
    auto separates = [&](std::int64_t h, std::int64_t a, std::int64_t c) {
        const int sa = side_of_edge(h, a);
        const int sc = side_of_edge(h, c);
        return sa != 0 && sc != 0 && sa != sc;
    };
    r.facing_triple_free = true;
    const std::size_t m = crossing.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                const auto a = crossing[i];
                const auto b = crossing[j];
                const auto c = crossing[k];
                ++r.triples_checked;
                if (!separates(a, b, c) && !separates(b, a, c) && !separates(c, a, b)) {
                    r.facing_triple_free = false;
                }
            }
        }
    }
    return r;
}

WellSeparationResult well_separation(const AntiTorusQuery& q, int n, const SearchBounds& bounds) {
    return separation_from_gamma(overlap_gamma(q, n, bounds));
}

}  // namespace nofactor
