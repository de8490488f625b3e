#include "nofactor/develop.hpp"

#include "nofactor/errors.hpp"

namespace nofactor {

void require_developable(const SquareComplex& complex) {
    if (!complex.is_csc()) {
        throw NotCSC("development needs a complete square complex");
    }
    if (!complex.one_vertex()) {
        throw UnsupportedComplex("development is implemented for one-vertex complexes only");
    }
}

namespace {

void require_sides(const Word& bottom, const Word& left) {
    if (bottom.cls() != EdgeClass::horizontal && !bottom.empty()) {
        throw ClassError("bottom side must be a horizontal word");
    }
    if (left.cls() != EdgeClass::vertical && !left.empty()) {
        throw ClassError("left side must be a vertical word");
    }
}

const Square& corner_or_throw(const SquareComplex& complex, Letter east, Letter north) {
    const Square* sq = complex.corner(east, north);
    if (sq == nullptr) {
        throw NotCSC("missing corner in corner table");
    }
    return *sq;
}

}  // namespace

ColumnDeveloper::ColumnDeveloper(const SquareComplex& complex, const Word& left)
    : complex_(&complex), column_(left.letters().begin(), left.letters().end()) {
    require_developable(complex);
    require_sides(Word(EdgeClass::horizontal), left);
}

Letter ColumnDeveloper::push(Letter bottom) {
    Letter h = bottom;
    for (Letter& v : column_) {
        const Square& sq = corner_or_throw(*complex_, h, v);
        v = sq.right;
        h = sq.top;
    }
    return h;
}

Rectangle fill_rectangle(const SquareComplex& complex, const Word& bottom, const Word& left, CellMode mode) {
    require_developable(complex);
    require_sides(bottom, left);

    Rectangle rect;
    rect.bottom = Word(EdgeClass::horizontal, {bottom.letters().begin(), bottom.letters().end()});
    rect.left = Word(EdgeClass::vertical, {left.letters().begin(), left.letters().end()});
    if (mode == CellMode::keep_cells) {
        rect.cells.emplace();
        rect.cells->reserve(bottom.size() * left.size());
    }

    std::vector<Letter> column(left.letters().begin(), left.letters().end());
    std::vector<Letter> top;
    top.reserve(bottom.size());
    for (Letter b : bottom.letters()) {
        Letter h = b;
        for (Letter& v : column) {
            const Square& sq = corner_or_throw(complex, h, v);
            if (rect.cells) {
                rect.cells->push_back(sq);
            }
            v = sq.right;
            h = sq.top;
        }
        top.push_back(h);
    }
    rect.top = Word(EdgeClass::horizontal, std::move(top));
    rect.right = Word(EdgeClass::vertical, std::move(column));
    return rect;
}

Word develop_top(const SquareComplex& complex, const Word& bottom, const Word& left) {
    ColumnDeveloper dev(complex, left);
    require_sides(bottom, left);
    std::vector<Letter> top;
    top.reserve(bottom.size());
    for (Letter b : bottom.letters()) {
        top.push_back(dev.push(b));
    }
    return Word(EdgeClass::horizontal, std::move(top));
}

Word develop_right(const SquareComplex& complex, const Word& bottom, const Word& left) {
    require_developable(complex);
    require_sides(bottom, left);
    std::vector<Letter> row(bottom.letters().begin(), bottom.letters().end());
    std::vector<Letter> right;
    right.reserve(left.size());
    for (Letter l : left.letters()) {
        Letter v = l;
        for (Letter& h : row) {
            const Square& sq = corner_or_throw(complex, h, v);
            h = sq.top;
            v = sq.right;
        }
        right.push_back(v);
    }
    return Word(EdgeClass::vertical, std::move(right));
}

}  // namespace nofactor
