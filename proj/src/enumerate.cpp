#include "nofactor/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "nofactor/errors.hpp"

namespace nofactor {

namespace {

/// Letter-code permutation induced by relabeling one class.
using CodeMap = std::vector<std::uint16_t>;

std::vector<CodeMap> class_relabelings(int count) {
    std::vector<CodeMap> out;
    std::vector<int> perm(static_cast<std::size_t>(count));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned flips = 0; flips < (1u << count); ++flips) {
            CodeMap m(static_cast<std::size_t>(2 * count));
            for (int i = 0; i < count; ++i) {
                const bool flip = ((flips >> i) & 1u) != 0;
                const auto to = static_cast<std::uint16_t>(perm[static_cast<std::size_t>(i)]);
                m[static_cast<std::size_t>(2 * i)] = Letter(to, flip).code();
                m[static_cast<std::size_t>(2 * i + 1)] = Letter(to, !flip).code();
            }
            out.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Square least_orientation(const Square& sq) {
    const auto os = sq.orientations();
    return *std::min_element(os.begin(), os.end());
}

Square relabel(const Square& sq, const CodeMap& hmap, const CodeMap& vmap) {
    return {Letter::from_code(hmap[sq.bottom.code()]), Letter::from_code(vmap[sq.right.code()]),
            Letter::from_code(hmap[sq.top.code()]), Letter::from_code(vmap[sq.left.code()])};
}

struct Relabelings {
    std::vector<CodeMap> h;
    std::vector<CodeMap> v;
};

SquareSet apply(const SquareSet& form, const CodeMap& hmap, const CodeMap& vmap) {
    SquareSet out;
    out.reserve(form.size());
    for (const Square& sq : form) {
        out.push_back(least_orientation(relabel(sq, hmap, vmap)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True when no relabeling yields a smaller normal form.
bool is_canonical(const SquareSet& form, const Relabelings& rl) {
    for (const auto& hm : rl.h) {
        for (const auto& vm : rl.v) {
            if (apply(form, hm, vm) < form) {
                return false;
            }
        }
    }
    return true;
}

class CensusSearch {
public:
    CensusSearch(int hcount, int vcount, std::uint64_t budget, std::atomic<std::uint64_t>& nodes)
        : h_(hcount), v_(vcount), budget_(budget), nodes_(nodes) {}

    /// Candidate squares completing the least uncovered corner.
    std::vector<Square> extensions(std::uint64_t covered) const {
        std::vector<Square> out;
        const int total = 4 * h_ * v_;
        int slot = 0;
        while (slot < total && ((covered >> slot) & 1u) != 0) {
            ++slot;
        }
        if (slot == total) {
            return out;
        }
        const Letter b = Letter::from_code(static_cast<std::uint16_t>(slot / (2 * v_)));
        const Letter l = Letter::from_code(static_cast<std::uint16_t>(slot % (2 * v_)));
        for (int tc = 0; tc < 2 * h_; ++tc) {
            for (int rc = 0; rc < 2 * v_; ++rc) {
                const Square sq{b, Letter::from_code(static_cast<std::uint16_t>(rc)), Letter::from_code(static_cast<std::uint16_t>(tc)), l};
                if (const auto mask = corner_mask(sq); mask != 0 && (mask & covered) == 0) {
                    out.push_back(sq);
                }
            }
        }
        return out;
    }

    /// Bits of the four corners, or 0 if two corners coincide.
    std::uint64_t corner_mask(const Square& sq) const {
        std::uint64_t mask = 0;
        for (const Square& o : sq.orientations()) {
            const auto bit = std::uint64_t{1} << (o.bottom.code() * (2 * v_) + o.left.code());
            if ((mask & bit) != 0) {
                return 0;
            }
            mask |= bit;
        }
        return mask;
    }

    void run(std::uint64_t covered, std::vector<Square>& chosen, const Relabelings& rl, std::vector<SquareSet>& found) {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
            throw BudgetExceeded("census search exceeded " + std::to_string(budget_) + " nodes");
        }
        if (chosen.size() == static_cast<std::size_t>(h_ * v_)) {
            SquareSet form = normalize_squares(chosen);
            if (is_canonical(form, rl)) {
                found.push_back(std::move(form));
            }
            return;
        }
        for (const Square& sq : extensions(covered)) {
            chosen.push_back(sq);
            run(covered | corner_mask(sq), chosen, rl, found);
            chosen.pop_back();
        }
    }

private:
    int h_;
    int v_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t>& nodes_;
};

std::string label_name(char base, int i) {
    return std::string(1, static_cast<char>(base + i));
}

}  // namespace

SquareSet normalize_squares(std::vector<Square> squares) {
    for (Square& sq : squares) {
        sq = least_orientation(sq);
    }
    std::sort(squares.begin(), squares.end());
    return squares;
}

SquareSet canonical_form(const SquareComplex& complex) {
    if (!complex.one_vertex()) {
        throw UnsupportedComplex("canonical forms are defined for one-vertex complexes");
    }
    const Relabelings rl{class_relabelings(static_cast<int>(complex.edge_count(EdgeClass::horizontal))),
                         class_relabelings(static_cast<int>(complex.edge_count(EdgeClass::vertical)))};
    SquareSet best = normalize_squares({complex.squares().begin(), complex.squares().end()});
    for (const auto& hm : rl.h) {
        for (const auto& vm : rl.v) {
            best = std::min(best, apply(best, hm, vm));
        }
    }
    return best;
}

SquareComplex one_vertex_complex(int hcount, int vcount, std::vector<Square> squares) {
    std::vector<EdgeLabel> hedges;
    std::vector<EdgeLabel> vedges;
    for (int i = 0; i < hcount; ++i) {
        hedges.push_back({label_name('a', i), EdgeClass::horizontal, 0, 0});
    }
    for (int i = 0; i < vcount; ++i) {
        vedges.push_back({label_name('x', i), EdgeClass::vertical, 0, 0});
    }
    return SquareComplex({}, std::move(hedges), std::move(vedges), std::move(squares));
}

void for_each_csc(int hcount, int vcount, const std::function<void(const SquareComplex&)>& sink,
                  const EnumerateOptions& options) {
    if (hcount < 0 || vcount < 0 || hcount > 3 || vcount > 3) {
        throw InvalidParams("census is limited to at most 3 edges per class");
    }
    if (hcount == 0 || vcount == 0) {
        return;
    }
    const Relabelings rl{class_relabelings(hcount), class_relabelings(vcount)};
    std::atomic<std::uint64_t> nodes{0};
    CensusSearch search(hcount, vcount, options.node_budget, nodes);

    // Split on the choice of the first square; branches are merged by canonical form.
    const auto roots = search.extensions(0);
    std::vector<std::vector<SquareSet>> per_root(roots.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < roots.size() && !failed; i = next++) {
            try {
                std::vector<Square> chosen{roots[i]};
                search.run(search.corner_mask(roots[i]), chosen, rl, per_root[i]);
            } catch (...) {
                if (!failed.exchange(true)) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<SquareSet> forms;
    for (auto& v : per_root) {
        std::move(v.begin(), v.end(), std::back_inserter(forms));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    for (auto& form : forms) {
        sink(one_vertex_complex(hcount, vcount, std::move(form)));
    }
}

std::vector<SquareComplex> enumerate_csc(int hcount, int vcount, const EnumerateOptions& options) {
    std::vector<SquareComplex> out;
    for_each_csc(hcount, vcount, [&](const SquareComplex& c) { out.push_back(c); }, options);
    return out;
}

}  // namespace nofactor
