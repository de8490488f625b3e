#pragma once

// Reference implementations used to cross-check the library. They are
// deliberately slow and share no code with the production paths beyond the
// plain data types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "nofactor/complex.hpp"
#include "nofactor/word.hpp"

namespace oracle {

using nofactor::EdgeClass;
using nofactor::Letter;
using nofactor::Square;
using nofactor::SquareComplex;
using nofactor::Word;

inline std::array<Square, 4> readings(const Square& s) {
    const Square ew{s.bottom.inverse(), s.left, s.top.inverse(), s.right};
    const Square ns{s.top, s.right.inverse(), s.bottom, s.left.inverse()};
    const Square both{ew.top, ew.right.inverse(), ew.bottom, ew.left.inverse()};
    return {s, ew, ns, both};
}

/// Linear scan over all readings of all squares; no corner table.
inline Square square_at(const SquareComplex& c, Letter east, Letter north) {
    std::optional<Square> found;
    for (const Square& s : c.squares()) {
        for (const Square& o : readings(s)) {
            if (o.bottom == east && o.left == north) {
                if (found && !(*found == o)) {
                    throw std::logic_error("oracle: corner covered twice");
                }
                found = o;
            }
        }
    }
    if (!found) {
        throw std::logic_error("oracle: corner not covered");
    }
    return *found;
}

struct NaiveRect {
    std::vector<Letter> top;
    std::vector<Letter> right;
    std::vector<std::vector<Square>> rows;  // rows[row][col]
};

/// Row-major development: each row is read off the row below it.
inline NaiveRect naive_fill(const SquareComplex& c, const Word& bottom, const Word& left) {
    NaiveRect r;
    std::vector<Letter> current(bottom.letters().begin(), bottom.letters().end());
    for (std::size_t row = 0; row < left.size(); ++row) {
        Letter west = left[row];
        std::vector<Square> cells;
        std::vector<Letter> next;
        for (const Letter b : current) {
            const Square s = square_at(c, b, west);
            cells.push_back(s);
            next.push_back(s.top);
            west = s.right;
        }
        r.right.push_back(west);
        r.rows.push_back(std::move(cells));
        current = std::move(next);
    }
    r.top = std::move(current);
    return r;
}

inline std::vector<Letter> letters_of(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

/// Uniform random reduced word of the given length over `count` labels.
inline Word random_word(std::mt19937_64& rng, EdgeClass cls, int count, std::size_t length) {
    std::uniform_int_distribution<int> pick(0, 2 * count - 1);
    std::vector<Letter> out;
    while (out.size() < length) {
        const Letter l = Letter::from_code(static_cast<std::uint16_t>(pick(rng)));
        if (!out.empty() && out.back() == l.inverse()) {
            continue;
        }
        out.push_back(l);
    }
    return Word(cls, std::move(out));
}

// ---- brute-force census ----

inline Square least_reading(const Square& s) {
    const auto r = readings(s);
    return *std::min_element(r.begin(), r.end());
}

struct Relabel {
    std::vector<int> perm;
    std::vector<bool> flip;

    Letter apply(Letter l) const {
        return Letter(static_cast<std::uint16_t>(perm[l.index()]), l.inverted() != flip[l.index()]);
    }
};

inline std::vector<Relabel> relabelings(int count) {
    std::vector<Relabel> out;
    std::vector<int> perm(static_cast<std::size_t>(count));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int mask = 0; mask < (1 << count); ++mask) {
            Relabel r{perm, std::vector<bool>(static_cast<std::size_t>(count))};
            for (int i = 0; i < count; ++i) {
                r.flip[static_cast<std::size_t>(i)] = ((mask >> i) & 1) != 0;
            }
            out.push_back(std::move(r));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline std::vector<Square> oracle_canonical(const std::vector<Square>& squares, int h, int v) {
    std::vector<Square> best;
    for (const Relabel& rh : relabelings(h)) {
        for (const Relabel& rv : relabelings(v)) {
            std::vector<Square> img;
            for (const Square& s : squares) {
                img.push_back(least_reading({rh.apply(s.bottom), rv.apply(s.right), rh.apply(s.top), rv.apply(s.left)}));
            }
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) {
                best = std::move(img);
            }
        }
    }
    return best;
}

/// Every h*v-subset of square orbits whose readings cover each corner once,
/// reduced to canonical forms.
inline std::set<std::vector<Square>> brute_census(int h, int v) {
    std::set<Square> orbit_reps;
    for (int b = 0; b < 2 * h; ++b) {
        for (int t = 0; t < 2 * h; ++t) {
            for (int l = 0; l < 2 * v; ++l) {
                for (int r = 0; r < 2 * v; ++r) {
                    const Square s{Letter::from_code(static_cast<std::uint16_t>(b)),
                                   Letter::from_code(static_cast<std::uint16_t>(r)),
                                   Letter::from_code(static_cast<std::uint16_t>(t)),
                                   Letter::from_code(static_cast<std::uint16_t>(l))};
                    orbit_reps.insert(least_reading(s));
                }
            }
        }
    }
    const std::vector<Square> reps(orbit_reps.begin(), orbit_reps.end());
    const int need = h * v;
    std::set<std::vector<Square>> forms;
    if (need == 0) {
        return forms;
    }
    std::vector<int> pick;
    auto covers_once = [&](const std::vector<Square>& chosen) {
        std::vector<int> hits(static_cast<std::size_t>(4 * h * v), 0);
        for (const Square& s : chosen) {
            for (const Square& o : readings(s)) {
                if (++hits[static_cast<std::size_t>(o.bottom.code() * 2 * v + o.left.code())] > 1) {
                    return false;
                }
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == need) {
            std::vector<Square> chosen;
            for (int i : pick) {
                chosen.push_back(reps[static_cast<std::size_t>(i)]);
            }
            if (covers_once(chosen)) {
                forms.insert(oracle_canonical(chosen, h, v));
            }
            return;
        }
        for (std::size_t i = from; i < reps.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return forms;
}

}  // namespace oracle
