#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nofactor/complex.hpp"
#include "nofactor/word.hpp"

namespace nofactor {

enum class CellMode { boundary_only, keep_cells };

/// A developed rectangle in the universal cover. Cell (col, row) has its SW
/// corner at (col, row); row 0 sits on the bottom word, column 0 on the left.
struct Rectangle {
    Word bottom{EdgeClass::horizontal};
    Word left{EdgeClass::vertical};
    Word top{EdgeClass::horizontal};
    Word right{EdgeClass::vertical};
    std::optional<std::vector<Square>> cells;  // column-major, width * height

    std::size_t width() const noexcept { return bottom.size(); }
    std::size_t height() const noexcept { return left.size(); }

    const Square& cell(std::size_t col, std::size_t row) const { return cells->at(col * height() + row); }
};

/// Fills the unique rectangle with the given bottom and left sides, column by
/// column from the SW corner. Throws NotCSC, UnsupportedComplex (several
/// vertices) or ClassError.
Rectangle fill_rectangle(const SquareComplex& complex, const Word& bottom, const Word& left,
                         CellMode mode = CellMode::boundary_only);

/// Side opposite the bottom. Columns are final once computed, so this is the
/// streaming path for growing widths.
Word develop_top(const SquareComplex& complex, const Word& bottom, const Word& left);

/// Side opposite the left, computed row by row.
Word develop_right(const SquareComplex& complex, const Word& bottom, const Word& left);

/// Incremental column developer. Holds the current vertical boundary and
/// pushes one column at a time to the right, returning the letter on top.
class ColumnDeveloper {
public:
    ColumnDeveloper(const SquareComplex& complex, const Word& left);

    /// Develops one column whose bottom letter is `bottom`; returns its top letter.
    Letter push(Letter bottom);

    /// The vertical word on the right edge of the last developed column.
    Word boundary() const { return Word(EdgeClass::vertical, column_); }
    std::size_t height() const noexcept { return column_.size(); }

private:
    const SquareComplex* complex_;
    std::vector<Letter> column_;
};

void require_developable(const SquareComplex& complex);

}  // namespace nofactor
