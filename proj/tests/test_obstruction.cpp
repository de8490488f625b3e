#include "doctest.h"
#include "nofactor/errors.hpp"
#include "nofactor/json_io.hpp"
#include "nofactor/obstruction.hpp"

using namespace nofactor;

namespace {

AntiTorusQuery census78_query() {
    const SquareComplex c = parse_complex(
        "hedges: a b\nvedges: x y\n"
        "square: a x -a y\nsquare: a -x b x\nsquare: a y -b -y\nsquare: b -x -b y\n");
    return AntiTorusQuery(c, PeriodicWord(parse_word(c, "a")), PeriodicWord(parse_word(c, "x")));
}

AntiTorusQuery census69_query() {
    const SquareComplex c = parse_complex(
        "hedges: a b\nvedges: x y\n"
        "square: a x a y\nsquare: a y b -x\nsquare: a -y -b x\nsquare: b x -b -y\n");
    return AntiTorusQuery(c, PeriodicWord(parse_word(c, "a")), PeriodicWord(parse_word(c, "x y")));
}

AntiTorusQuery torus_query() {
    const SquareComplex c = parse_complex("hedges: a\nvedges: x\nsquare: a x a x\n");
    return AntiTorusQuery(c, PeriodicWord(parse_word(c, "a")), PeriodicWord(parse_word(c, "x")));
}

}  // namespace

TEST_CASE("projection diameter") {
    const auto q = census78_query();
    const ProjectionResult one = projection_diameter(q, 1);
    CHECK(one.diam >= 1);
    CHECK(one.contains_basepoint);
    // sides recomputed from the two one-sided scans
    const OverlapSides sides = overlap_at_height(q, one.gamma.j, 10'000);
    CHECK(one.diam == sides.left + sides.right);
    CHECK(projection_diameter(q, 5).diam >= 5);
    CHECK_THROWS_AS(projection_diameter(torus_query(), 1, SearchBounds{4, 4, 100, 20}), BudgetExceeded);
}

TEST_CASE("obstruction table") {
    const auto q = census78_query();
    const ObstructionTable single = obstruction_table(q, 1);
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].projection->diam >= 1);

    const ObstructionTable t = obstruction_table(q, 10, {}, 3);
    REQUIRE(t.rows.size() == 10);
    for (const auto& row : t.rows) {
        REQUIRE(row.ok());
        CHECK(*row.projection == projection_diameter(q, row.n));
        CHECK(row.projection->diam >= row.n);
    }
    CHECK(t.max_diam() >= 10);
    CHECK(t.all_contain_basepoint());
    CHECK(t.exceeds_every_threshold_up_to_max());
    CHECK(obstruction_table(q, 10, {}, 1) == t);
    CHECK_THROWS_AS(obstruction_table(q, 0), InvalidParams);
}

TEST_CASE("torus table is rejected before any row") {
    CHECK_THROWS_AS(obstruction_table(torus_query(), 3), HypothesisRejected);
}

TEST_CASE("rows over budget are flagged, not dropped") {
    SearchBounds small;
    small.max_tops = 500;
    const ObstructionTable t = obstruction_table(census69_query(), 7, small, 2);
    REQUIRE(t.rows.size() == 7);
    CHECK(t.rows[0].ok());
    CHECK_FALSE(t.rows[6].ok());
    CHECK(t.rows[6].failure.find("500") != std::string::npos);
    CHECK(t.bounds == small);
}

TEST_CASE("table json round trip and csv") {
    const ObstructionTable t = obstruction_table(census78_query(), 4);
    const json j = t;
    CHECK(j.at("schema") == kObstructionSchema);
    CHECK(j.at("boundsUsed").at("iMax") == 1'000'000);
    CHECK(j.get<ObstructionTable>() == t);
    CHECK(obstruction_csv(t) == "n,diam,L\n1,2,2\n2,6,6\n3,6,6\n4,18,18\n");

    SearchBounds small;
    small.max_tops = 500;
    const ObstructionTable flagged = obstruction_table(census69_query(), 7, small);
    const json jf = flagged;
    CHECK(jf.at("rows").at(6).at("status") == "budget");
    CHECK(jf.get<ObstructionTable>() == flagged);
}

TEST_CASE("well separation") {
    const auto q = census78_query();
    const WellSeparationResult r = well_separation(q, 1);
    CHECK(r.overlap >= 1);
    CHECK(r.crossing_set_size == r.overlap);
    CHECK(r.facing_triple_free);

    GammaResult unit;
    unit.n = 1;
    unit.right_len = 1;
    unit.total_len = 1;
    const WellSeparationResult u = separation_from_gamma(unit);
    CHECK(u.crossing_set_size == 1);
    CHECK(u.triples_checked == 0);
    CHECK(u.facing_triple_free);

    std::int64_t previous = 0;
    for (int n = 1; n <= 6; ++n) {
        const WellSeparationResult w = well_separation(q, n);
        const std::int64_t l = w.overlap;
        CHECK(w.triples_checked == l * (l - 1) * (l - 2) / 6);
        CHECK(l >= previous);
        previous = l;
    }
    CHECK(previous > well_separation(q, 1).overlap);

    GammaResult huge;
    huge.right_len = kMaxTripleScanLength + 1;
    huge.total_len = huge.right_len;
    CHECK_THROWS_AS(separation_from_gamma(huge), BudgetExceeded);
}
