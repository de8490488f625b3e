#include <set>

#include "doctest.h"
#include "nofactor/antitorus.hpp"
#include "nofactor/enumerate.hpp"
#include "nofactor/errors.hpp"
#include "oracles.hpp"

using namespace nofactor;

namespace {

std::set<std::vector<Square>> oracle_forms(const std::vector<SquareComplex>& census, int h, int v) {
    std::set<std::vector<Square>> out;
    for (const auto& c : census) {
        out.insert(oracle::oracle_canonical({c.squares().begin(), c.squares().end()}, h, v));
    }
    return out;
}

}  // namespace

TEST_CASE("census agrees with brute force over square subsets") {
    for (auto [h, v] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
        CAPTURE(h);
        CAPTURE(v);
        const auto census = enumerate_csc(h, v);
        const auto brute = oracle::brute_census(h, v);
        CHECK(census.size() == brute.size());
        // no two census members are relabelings of each other
        CHECK(oracle_forms(census, h, v).size() == census.size());
        CHECK(oracle_forms(census, h, v) == brute);
        for (const auto& c : census) {
            CHECK(c.one_vertex());
            CHECK(c.is_csc());
            CHECK(c.squares().size() == static_cast<std::size_t>(h * v));
        }
    }
}

TEST_CASE("smallest census is the torus and two twisted squares") {
    const auto census = enumerate_csc(1, 1);
    REQUIRE(census.size() == 3);
    std::set<std::string> texts;
    for (const auto& c : census) {
        texts.insert(serialize_complex(c));
    }
    CHECK(texts.count("hedges: a\nvedges: x\nsquare: a x a x\n") == 1);
}

TEST_CASE("degenerate and oversized census requests") {
    CHECK(enumerate_csc(0, 1).empty());
    CHECK(enumerate_csc(1, 0).empty());
    CHECK_THROWS_AS(enumerate_csc(4, 1), InvalidParams);
    CHECK_THROWS_AS(enumerate_csc(-1, 1), InvalidParams);
    EnumerateOptions tiny;
    tiny.node_budget = 10;
    CHECK_THROWS_AS(enumerate_csc(2, 2, tiny), BudgetExceeded);
}

TEST_CASE("census is independent of the worker count") {
    EnumerateOptions one;
    EnumerateOptions four;
    four.jobs = 4;
    const auto a = enumerate_csc(2, 2, one);
    const auto b = enumerate_csc(2, 2, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
    }
    std::size_t streamed = 0;
    for_each_csc(2, 2, [&](const SquareComplex& c) { CHECK(c == a[streamed++]); }, four);
    CHECK(streamed == a.size());
}

TEST_CASE("canonical form is invariant under relabeling") {
    const SquareComplex c = parse_complex(
        "hedges: a b\nvedges: x y\n"
        "square: a x -a y\nsquare: a -x b x\nsquare: a y -b -y\nsquare: b -x -b y\n");
    // swap a and b, invert x
    const SquareComplex d = parse_complex(
        "hedges: a b\nvedges: x y\n"
        "square: b -x -b y\nsquare: b x a -x\nsquare: b y -a -y\nsquare: a x -a y\n");
    CHECK(canonical_form(c) == canonical_form(d));
    CHECK(canonical_form(c) == normalize_squares(canonical_form(c)));
}

TEST_CASE("two by two census contains anti-torus candidates") {
    int candidates = 0;
    for (const auto& c : enumerate_csc(2, 2)) {
        const PeriodicWord a(Word(EdgeClass::horizontal, {Letter(0, false)}));
        const PeriodicWord x(Word(EdgeClass::vertical, {Letter(0, false)}));
        candidates += !commuting_powers_search(AntiTorusQuery(c, a, x), 8, 8).has_value();
    }
    CHECK(candidates >= 1);
}
