#include "nofactor/complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "nofactor/errors.hpp"

namespace nofactor {

std::string_view to_string(EdgeClass cls) {
    return cls == EdgeClass::horizontal ? "horizontal" : "vertical";
}

namespace {

void check_letter(const std::vector<EdgeLabel>& labels, Letter l, EdgeClass expected, const char* slot) {
    if (l.index() >= labels.size()) {
        throw ClassError(std::string("square ") + slot + " slot needs a " + std::string(to_string(expected)) +
                         " letter, index " + std::to_string(l.index()) + " is out of range");
    }
}

}  // namespace

SquareComplex::SquareComplex(std::vector<std::string> vertices, std::vector<EdgeLabel> hedges,
                             std::vector<EdgeLabel> vedges, std::vector<Square> squares)
    : vertices_(std::move(vertices)), hedges_(std::move(hedges)), vedges_(std::move(vedges)), squares_(std::move(squares)) {
    if (vertices_.empty()) {
        vertices_.push_back("v");
    }
    {
        std::unordered_set<std::string> seen;
        for (const auto& v : vertices_) {
            if (!seen.insert(v).second) {
                throw DuplicateLabel("duplicate vertex '" + v + "'");
            }
        }
    }
    std::unordered_set<std::string> names;
    for (auto* labels : {&hedges_, &vedges_}) {
        const EdgeClass cls = labels == &hedges_ ? EdgeClass::horizontal : EdgeClass::vertical;
        for (auto& e : *labels) {
            e.cls = cls;
            if (e.name.empty()) {
                throw Error("empty edge label");
            }
            if (!names.insert(e.name).second) {
                throw DuplicateLabel("duplicate edge label '" + e.name + "'");
            }
            if (e.tail >= vertices_.size() || e.head >= vertices_.size()) {
                throw Error("edge '" + e.name + "' has an endpoint outside the vertex set");
            }
        }
    }
    if (hedges_.size() > 0x7fff || vedges_.size() > 0x7fff) {
        throw Error("too many edge labels");
    }

    for (const Square& sq : squares_) {
        check_letter(hedges_, sq.bottom, EdgeClass::horizontal, "bottom");
        check_letter(vedges_, sq.right, EdgeClass::vertical, "right");
        check_letter(hedges_, sq.top, EdgeClass::horizontal, "top");
        check_letter(vedges_, sq.left, EdgeClass::vertical, "left");
        const bool fits = origin(EdgeClass::horizontal, sq.bottom) == origin(EdgeClass::vertical, sq.left) &&
                          terminus(EdgeClass::horizontal, sq.bottom) == origin(EdgeClass::vertical, sq.right) &&
                          terminus(EdgeClass::vertical, sq.left) == origin(EdgeClass::horizontal, sq.top) &&
                          terminus(EdgeClass::horizontal, sq.top) == terminus(EdgeClass::vertical, sq.right);
        if (!fits) {
            throw Error("square boundary does not close up at its corner vertices");
        }
    }

    const std::size_t slots = 4 * hedges_.size() * vedges_.size();
    corner_table_.assign(slots, -1);
    corner_counts_.assign(slots, 0);
    oriented_.reserve(4 * squares_.size());
    for (const Square& sq : squares_) {
        for (const Square& o : sq.orientations()) {
            const std::size_t slot = corner_slot(o.bottom, o.left);
            if (corner_counts_[slot]++ == 0) {
                corner_table_[slot] = static_cast<std::int32_t>(oriented_.size());
            }
            oriented_.push_back(o);
        }
    }
    csc_ = validate_csc(*this).is_csc;
}

std::size_t SquareComplex::origin(EdgeClass cls, Letter l) const {
    const EdgeLabel& e = labels(cls).at(l.index());
    return l.inverted() ? e.head : e.tail;
}

std::size_t SquareComplex::terminus(EdgeClass cls, Letter l) const {
    const EdgeLabel& e = labels(cls).at(l.index());
    return l.inverted() ? e.tail : e.head;
}

std::optional<std::pair<EdgeClass, std::uint16_t>> SquareComplex::find_label(std::string_view name) const {
    for (EdgeClass cls : {EdgeClass::horizontal, EdgeClass::vertical}) {
        const auto& ls = labels(cls);
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (ls[i].name == name) {
                return std::make_pair(cls, static_cast<std::uint16_t>(i));
            }
        }
    }
    return std::nullopt;
}

std::string SquareComplex::letter_name(EdgeClass cls, Letter l) const {
    const std::string& base = labels(cls).at(l.index()).name;
    return l.inverted() ? "-" + base : base;
}

ValidationReport validate_csc(const SquareComplex& complex) {
    ValidationReport report;
    const auto nh = static_cast<std::uint16_t>(complex.edge_count(EdgeClass::horizontal));
    const auto nv = static_cast<std::uint16_t>(complex.edge_count(EdgeClass::vertical));
    for (std::uint16_t hc = 0; hc < 2 * nh; ++hc) {
        const Letter h = Letter::from_code(hc);
        for (std::uint16_t vc = 0; vc < 2 * nv; ++vc) {
            const Letter v = Letter::from_code(vc);
            const std::size_t at = complex.origin(EdgeClass::horizontal, h);
            const int count = complex.corner_multiplicity(h, v);
            if (at != complex.origin(EdgeClass::vertical, v)) {
                continue;
            }
            report.corner_count += static_cast<std::size_t>(count);
            if (count != 1) {
                report.violations.push_back({at, h, v, count});
            }
        }
    }
    report.is_csc = report.violations.empty();
    return report;
}

namespace {

std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

struct RawSquare {
    std::size_t line;
    std::array<std::string, 4> tokens;
};

}  // namespace

SquareComplex parse_complex(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<EdgeLabel> hedges;
    std::vector<EdgeLabel> vedges;
    std::vector<RawSquare> raw_squares;
    std::map<std::string, std::pair<std::string, std::string>> ends;
    std::set<std::string> names;

    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const auto colon = stripped.find(':');
        if (colon == std::string::npos) {
            throw ParseError(lineno, "expected '<directive>: ...'");
        }
        const std::string key = trim(std::string_view(stripped).substr(0, colon));
        const auto args = split_tokens(std::string_view(stripped).substr(colon + 1));

        if (key == "hedges" || key == "vedges") {
            auto& target = key == "hedges" ? hedges : vedges;
            for (const auto& name : args) {
                if (name.empty() || name[0] == '-' || name.find_first_of("^,") != std::string::npos) {
                    throw ParseError(lineno, "invalid label '" + name + "'");
                }
                if (!names.insert(name).second) {
                    throw DuplicateLabel("line " + std::to_string(lineno) + ": duplicate edge label '" + name + "'");
                }
                target.push_back({name, key == "hedges" ? EdgeClass::horizontal : EdgeClass::vertical, 0, 0});
            }
        } else if (key == "square") {
            if (args.size() != 4) {
                throw ParseError(lineno, "square needs exactly 4 letters (bottom right top left)");
            }
            raw_squares.push_back({lineno, {args[0], args[1], args[2], args[3]}});
        } else if (key == "vertex") {
            if (args.empty()) {
                throw ParseError(lineno, "vertex directive without names");
            }
            for (const auto& v : args) {
                if (std::find(vertices.begin(), vertices.end(), v) != vertices.end()) {
                    throw DuplicateLabel("line " + std::to_string(lineno) + ": duplicate vertex '" + v + "'");
                }
                vertices.push_back(v);
            }
        } else if (key == "ends") {
            if (args.size() != 3) {
                throw ParseError(lineno, "ends needs '<edge> <tail> <head>'");
            }
            if (!ends.emplace(args[0], std::make_pair(args[1], args[2])).second) {
                throw ParseError(lineno, "endpoints of '" + args[0] + "' given twice");
            }
        } else {
            throw ParseError(lineno, "unknown directive '" + key + "'");
        }
    }

    auto vertex_index = [&](const std::string& name) -> std::size_t {
        const auto it = std::find(vertices.begin(), vertices.end(), name);
        if (it == vertices.end()) {
            throw ParseError(0, "unknown vertex '" + name + "'");
        }
        return static_cast<std::size_t>(it - vertices.begin());
    };
    if (!vertices.empty()) {
        for (auto* labels : {&hedges, &vedges}) {
            for (auto& e : *labels) {
                const auto it = ends.find(e.name);
                if (it == ends.end()) {
                    throw ParseError(0, "edge '" + e.name + "' has no ends directive");
                }
                e.tail = vertex_index(it->second.first);
                e.head = vertex_index(it->second.second);
            }
        }
    } else if (!ends.empty()) {
        throw ParseError(0, "ends directive without vertex directives");
    }
    for (const auto& [name, _] : ends) {
        if (!names.contains(name)) {
            throw ParseError(0, "ends directive for unknown edge '" + name + "'");
        }
    }

    auto letter = [&](const RawSquare& rs, std::size_t slot, EdgeClass expected) {
        std::string tok = rs.tokens[slot];
        bool inv = false;
        if (!tok.empty() && tok[0] == '-') {
            inv = true;
            tok.erase(0, 1);
        }
        const auto& same = expected == EdgeClass::horizontal ? hedges : vedges;
        const auto& other = expected == EdgeClass::horizontal ? vedges : hedges;
        for (std::size_t i = 0; i < same.size(); ++i) {
            if (same[i].name == tok) {
                return Letter(static_cast<std::uint16_t>(i), inv);
            }
        }
        static constexpr std::array<const char*, 4> slot_names{"bottom", "right", "top", "left"};
        for (const auto& e : other) {
            if (e.name == tok) {
                throw ClassError("line " + std::to_string(rs.line) + ": " + std::string(to_string(e.cls)) + " letter '" +
                                 tok + "' in " + slot_names[slot] + " slot");
            }
        }
        throw ParseError(rs.line, "unknown label '" + tok + "'");
    };

    std::vector<Square> squares;
    squares.reserve(raw_squares.size());
    for (const auto& rs : raw_squares) {
        squares.push_back({letter(rs, 0, EdgeClass::horizontal), letter(rs, 1, EdgeClass::vertical),
                           letter(rs, 2, EdgeClass::horizontal), letter(rs, 3, EdgeClass::vertical)});
    }
    return SquareComplex(std::move(vertices), std::move(hedges), std::move(vedges), std::move(squares));
}

SquareComplex load_complex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

std::string serialize_complex(const SquareComplex& complex) {
    std::ostringstream out;
    const bool multi = !complex.one_vertex() || complex.vertex_names().front() != "v";
    if (multi) {
        out << "vertex:";
        for (const auto& v : complex.vertex_names()) {
            out << ' ' << v;
        }
        out << '\n';
    }
    for (EdgeClass cls : {EdgeClass::horizontal, EdgeClass::vertical}) {
        out << (cls == EdgeClass::horizontal ? "hedges:" : "vedges:");
        for (const auto& e : complex.labels(cls)) {
            out << ' ' << e.name;
        }
        out << '\n';
    }
    if (multi) {
        for (EdgeClass cls : {EdgeClass::horizontal, EdgeClass::vertical}) {
            for (const auto& e : complex.labels(cls)) {
                out << "ends: " << e.name << ' ' << complex.vertex_names()[e.tail] << ' '
                    << complex.vertex_names()[e.head] << '\n';
            }
        }
    }
    for (const Square& sq : complex.squares()) {
        out << "square: " << complex.letter_name(EdgeClass::horizontal, sq.bottom) << ' '
            << complex.letter_name(EdgeClass::vertical, sq.right) << ' '
            << complex.letter_name(EdgeClass::horizontal, sq.top) << ' '
            << complex.letter_name(EdgeClass::vertical, sq.left) << '\n';
    }
    return out.str();
}

}  // namespace nofactor
