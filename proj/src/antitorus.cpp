#include "nofactor/antitorus.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "nofactor/develop.hpp"
#include "nofactor/errors.hpp"

namespace nofactor {

AntiTorusQuery::AntiTorusQuery(SquareComplex complex, PeriodicWord w1, PeriodicWord w2)
    : complex_(std::move(complex)), w1_(std::move(w1)), w2_(std::move(w2)) {
    require_developable(complex_);
    if (w1_.cls() != EdgeClass::horizontal) {
        throw ClassError("w1 must be a horizontal word");
    }
    if (w2_.cls() != EdgeClass::vertical) {
        throw ClassError("w2 must be a vertical word");
    }
}

std::optional<std::pair<int, int>> commuting_powers_search(const AntiTorusQuery& q, int max_k, int max_j) {
    const SquareComplex& c = q.complex();
    const Word& w2 = q.w2().period();
    for (int k = 1; k <= max_k; ++k) {
        const Word bottom = q.w1().period().power(static_cast<std::size_t>(k));
        Word top = bottom;
        std::vector<Letter> right;
        for (int j = 1; j <= max_j; ++j) {
            const Rectangle slab = fill_rectangle(c, top, w2);
            top = slab.top;
            right.insert(right.end(), slab.right.letters().begin(), slab.right.letters().end());
            if (top == bottom && Word(EdgeClass::vertical, right) == w2.power(static_cast<std::size_t>(j))) {
                return std::make_pair(k, j);
            }
        }
    }
    return std::nullopt;
}

namespace {

std::u16string key_of(const Word& w) {
    std::u16string key;
    key.reserve(w.size());
    for (Letter l : w.letters()) {
        key.push_back(static_cast<char16_t>(l.code()));
    }
    return key;
}

}  // namespace

PeriodicTop find_periodic_top(const AntiTorusQuery& q, int n, std::int64_t max_tops) {
    if (n < 1) {
        throw InvalidParams("n must be at least 1");
    }
    const SquareComplex& c = q.complex();
    const Word base = q.w1().period().power(static_cast<std::size_t>(n));
    const Word& w2 = q.w2().period();

    std::unordered_map<std::u16string, std::int64_t> seen;
    Word v = base;
    PeriodicTop result;
    for (std::int64_t i = 1;; ++i) {
        if (i > max_tops) {
            throw BudgetExceeded("no repeated top word within " + std::to_string(max_tops) + " developments (n=" +
                                 std::to_string(n) + ")");
        }
        v = develop_top(c, v, w2);
        auto [it, fresh] = seen.emplace(key_of(v), i);
        if (!fresh) {
            result.first_repeat = it->second;
            result.j = i - it->second;
            break;
        }
    }

    if (develop_top(c, base, w2.power(static_cast<std::size_t>(result.j))) != base) {
        throw std::logic_error("periodic top postcondition failed: top(w1^n, w2^j) != w1^n");
    }
    return result;
}

std::int64_t rightward_overlap(const AntiTorusQuery& q, std::int64_t j, std::int64_t max_periods) {
    const PeriodicWord& w1 = q.w1();
    ColumnDeveloper dev(q.complex(), q.w2().period().power(static_cast<std::size_t>(j)));
    const std::int64_t limit = max_periods * static_cast<std::int64_t>(w1.length());
    for (std::int64_t x = 0; x < limit; ++x) {
        if (dev.push(w1.at(x)) != w1.at(x)) {
            return x;
        }
    }
    throw BudgetExceeded("no mismatch within " + std::to_string(max_periods) +
                         " periods of w1: periodic flat suspected, anti-torus hypothesis may fail");
}

OverlapSides overlap_at_height(const AntiTorusQuery& q, std::int64_t j, std::int64_t max_periods) {
    return {rightward_overlap(q.mirrored(), j, max_periods), rightward_overlap(q, j, max_periods)};
}

GammaResult overlap_gamma(const AntiTorusQuery& q, int n, const SearchBounds& bounds) {
    const PeriodicTop top = find_periodic_top(q, n, bounds.max_tops);
    const OverlapSides sides = overlap_at_height(q, top.j, bounds.max_periods);

    GammaResult g;
    g.n = n;
    g.j = top.j;
    g.left_len = sides.left;
    g.right_len = sides.right;
    g.total_len = sides.left + sides.right;
    g.y_offset = top.j * static_cast<std::int64_t>(q.w2().length());
    if (g.right_len < static_cast<std::int64_t>(n) * static_cast<std::int64_t>(q.w1().length())) {
        throw std::logic_error("overlap shorter than the periodic top it contains");
    }
    return g;
}

}  // namespace nofactor
