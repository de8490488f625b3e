#include "nofactor/json_io.hpp"

#include <sstream>

namespace nofactor {

json to_json(const SquareComplex& complex, const ValidationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"vertex", complex.vertex_names().at(v.vertex)},
                              {"east", complex.letter_name(EdgeClass::horizontal, v.east)},
                              {"north", complex.letter_name(EdgeClass::vertical, v.north)},
                              {"count", v.count}});
    }
    return {{"schema", kValidationSchema},
            {"isCSC", report.is_csc},
            {"cornerCount", report.corner_count},
            {"violations", violations},
            {"vertices", complex.vertex_count()},
            {"hedges", complex.edge_count(EdgeClass::horizontal)},
            {"vedges", complex.edge_count(EdgeClass::vertical)},
            {"squares", complex.squares().size()}};
}

json rectangle_to_json(const SquareComplex& complex, const Rectangle& rect) {
    json j{{"schema", kRectangleSchema},
           {"width", rect.width()},
           {"height", rect.height()},
           {"bottom", format_word(complex, rect.bottom)},
           {"left", format_word(complex, rect.left)},
           {"top", format_word(complex, rect.top)},
           {"right", format_word(complex, rect.right)}};
    if (rect.cells) {
        // cells[row][col], row 0 along the bottom side
        json grid = json::array();
        for (std::size_t row = 0; row < rect.height(); ++row) {
            json line = json::array();
            for (std::size_t col = 0; col < rect.width(); ++col) {
                const Square& sq = rect.cell(col, row);
                line.push_back({complex.letter_name(EdgeClass::horizontal, sq.bottom),
                                complex.letter_name(EdgeClass::vertical, sq.right),
                                complex.letter_name(EdgeClass::horizontal, sq.top),
                                complex.letter_name(EdgeClass::vertical, sq.left)});
            }
            grid.push_back(std::move(line));
        }
        j["cells"] = std::move(grid);
    }
    return j;
}

void to_json(json& j, const SearchBounds& b) {
    j = {{"K", b.commuting_k}, {"J", b.commuting_j}, {"iMax", b.max_tops}, {"kMax", b.max_periods}};
}

void from_json(const json& j, SearchBounds& b) {
    j.at("K").get_to(b.commuting_k);
    j.at("J").get_to(b.commuting_j);
    j.at("iMax").get_to(b.max_tops);
    j.at("kMax").get_to(b.max_periods);
}

void to_json(json& j, const GammaResult& g) {
    j = {{"n", g.n},
         {"j", g.j},
         {"leftLen", g.left_len},
         {"rightLen", g.right_len},
         {"totalLen", g.total_len},
         {"yOffset", g.y_offset}};
}

void from_json(const json& j, GammaResult& g) {
    j.at("n").get_to(g.n);
    j.at("j").get_to(g.j);
    j.at("leftLen").get_to(g.left_len);
    j.at("rightLen").get_to(g.right_len);
    j.at("totalLen").get_to(g.total_len);
    j.at("yOffset").get_to(g.y_offset);
}

void to_json(json& j, const ObstructionTable& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r{{"n", row.n}, {"status", row.ok() ? "ok" : "budget"}};
        if (row.ok()) {
            r["gamma"] = row.projection->gamma;
            r["diam"] = row.projection->diam;
            r["containsBasepoint"] = row.projection->contains_basepoint;
        } else {
            r["failure"] = row.failure;
        }
        rows.push_back(std::move(r));
    }
    j = {{"schema", kObstructionSchema},
         {"boundsUsed", t.bounds},
         {"rows", rows},
         {"summary",
          {{"maxDiam", t.max_diam()},
           {"allContainBasepoint", t.all_contain_basepoint()},
           {"everyThresholdUpToMaxReached", t.exceeds_every_threshold_up_to_max()}}}};
}

void from_json(const json& j, ObstructionTable& t) {
    j.at("boundsUsed").get_to(t.bounds);
    t.rows.clear();
    for (const auto& r : j.at("rows")) {
        ObstructionRow row;
        r.at("n").get_to(row.n);
        if (r.at("status") == "ok") {
            ProjectionResult p;
            p.n = row.n;
            r.at("gamma").get_to(p.gamma);
            r.at("diam").get_to(p.diam);
            r.at("containsBasepoint").get_to(p.contains_basepoint);
            row.projection = p;
        } else {
            r.at("failure").get_to(row.failure);
        }
        t.rows.push_back(std::move(row));
    }
}

void to_json(json& j, const WellSeparationResult& w) {
    j = {{"n", w.n},
         {"L", w.overlap},
         {"crossingSetSize", w.crossing_set_size},
         {"facingTripleFree", w.facing_triple_free},
         {"triplesChecked", w.triples_checked}};
}

void from_json(const json& j, WellSeparationResult& w) {
    j.at("n").get_to(w.n);
    j.at("L").get_to(w.overlap);
    j.at("crossingSetSize").get_to(w.crossing_set_size);
    j.at("facingTripleFree").get_to(w.facing_triple_free);
    j.at("triplesChecked").get_to(w.triples_checked);
}

void to_json(json& j, const StairParams& p) {
    j = {{"L", p.overlap}, {"r", p.shift}, {"steps", p.steps}, {"margin", p.margin}};
}

void from_json(const json& j, StairParams& p) {
    j.at("L").get_to(p.overlap);
    j.at("r").get_to(p.shift);
    j.at("steps").get_to(p.steps);
    j.at("margin").get_to(p.margin);
}

void to_json(json& j, const NonAcylCertificate& c) {
    json distances = json::array();
    for (const auto& [i, d] : c.family_distances) {
        distances.push_back({{"i", i}, {"distance", d}});
    }
    json witnesses = json::array();
    for (const auto& [i, w] : c.witnesses) {
        witnesses.push_back({{"i", i}, {"wall", w}});
    }
    json counts = json::array();
    for (const auto& [w, n] : c.crossing_counts) {
        counts.push_back({{"wall", w}, {"count", n}});
    }
    json checks = json::array();
    for (const auto& ch : c.checks) {
        checks.push_back({{"name", ch.name}, {"passed", ch.passed}});
    }
    j = {{"schema", kCertificateSchema},
         {"params", c.params},
         {"p", c.p},
         {"M", c.family_bound},
         {"family", c.family},
         {"hvWall", c.hv_wall},
         {"familyDistances", distances},
         {"witnesses", witnesses},
         {"crossingCounts", counts},
         {"maxCrossing", c.max_crossing},
         {"lowerBound", {{"num", c.lower_bound.num}, {"den", c.lower_bound.den}}},
         {"bfsDistance", c.bfs_distance},
         {"window", {{"vertices", c.vertex_count}, {"edges", c.edge_count}, {"squares", c.square_count}, {"walls", c.wall_count}}},
         {"boundsNote", c.bounds_note},
         {"checks", checks},
         {"valid", c.valid()}};
}

void from_json(const json& j, NonAcylCertificate& c) {
    j.at("params").get_to(c.params);
    j.at("p").get_to(c.p);
    j.at("M").get_to(c.family_bound);
    j.at("family").get_to(c.family);
    j.at("hvWall").get_to(c.hv_wall);
    c.family_distances.clear();
    for (const auto& d : j.at("familyDistances")) {
        c.family_distances.emplace_back(d.at("i").get<int>(), d.at("distance").get<int>());
    }
    c.witnesses.clear();
    for (const auto& w : j.at("witnesses")) {
        c.witnesses.emplace_back(w.at("i").get<int>(), w.at("wall").get<WallId>());
    }
    c.crossing_counts.clear();
    for (const auto& n : j.at("crossingCounts")) {
        c.crossing_counts.emplace_back(n.at("wall").get<WallId>(), n.at("count").get<int>());
    }
    j.at("maxCrossing").get_to(c.max_crossing);
    j.at("lowerBound").at("num").get_to(c.lower_bound.num);
    j.at("lowerBound").at("den").get_to(c.lower_bound.den);
    j.at("bfsDistance").get_to(c.bfs_distance);
    const auto& w = j.at("window");
    w.at("vertices").get_to(c.vertex_count);
    w.at("edges").get_to(c.edge_count);
    w.at("squares").get_to(c.square_count);
    w.at("walls").get_to(c.wall_count);
    j.at("boundsNote").get_to(c.bounds_note);
    c.checks.clear();
    for (const auto& ch : j.at("checks")) {
        c.checks.push_back({ch.at("name").get<std::string>(), ch.at("passed").get<bool>()});
    }
}

std::string obstruction_csv(const ObstructionTable& table) {
    std::ostringstream out;
    out << "n,diam,L\n";
    for (const auto& row : table.rows) {
        if (row.ok()) {
            out << row.n << ',' << row.projection->diam << ',' << row.projection->gamma.total_len << '\n';
        } else {
            out << row.n << ",,\n";
        }
    }
    return out.str();
}

}  // namespace nofactor
