#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nofactor {

enum class EdgeClass : std::uint8_t { horizontal, vertical };

std::string_view to_string(EdgeClass cls);

/// An oriented edge. Indices are local to the edge class, so a letter only has
/// meaning together with an EdgeClass (words and squares carry that context).
class Letter {
public:
    constexpr Letter() = default;
    constexpr Letter(std::uint16_t index, bool inverted) : code_(static_cast<std::uint16_t>(2 * index + (inverted ? 1 : 0))) {}

    static constexpr Letter from_code(std::uint16_t code) {
        Letter l;
        l.code_ = code;
        return l;
    }

    constexpr std::uint16_t code() const noexcept { return code_; }
    constexpr std::uint16_t index() const noexcept { return code_ >> 1; }
    constexpr bool inverted() const noexcept { return (code_ & 1u) != 0; }
    constexpr Letter inverse() const noexcept { return from_code(code_ ^ 1u); }

    friend constexpr auto operator<=>(Letter, Letter) = default;

private:
    std::uint16_t code_ = 0;
};

struct EdgeLabel {
    std::string name;
    EdgeClass cls = EdgeClass::horizontal;
    std::size_t tail = 0;
    std::size_t head = 0;

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// A square read from its SW corner: bottom and top run west to east, left and
/// right run south to north, so bottom.right and left.top are the two SW->NE paths.
struct Square {
    Letter bottom;
    Letter right;
    Letter top;
    Letter left;

    /// Mirror east-west; the SE corner becomes the SW corner.
    Square flipped_east_west() const { return {bottom.inverse(), left, top.inverse(), right}; }
    /// Mirror north-south; the NW corner becomes the SW corner.
    Square flipped_north_south() const { return {top, right.inverse(), bottom, left.inverse()}; }

    /// The four readings of this square, one per corner, SW first.
    std::array<Square, 4> orientations() const {
        const Square ew = flipped_east_west();
        return {*this, ew, flipped_north_south(), ew.flipped_north_south()};
    }

    friend auto operator<=>(const Square&, const Square&) = default;
};

struct CornerViolation {
    std::size_t vertex = 0;
    Letter east;   // horizontal germ
    Letter north;  // vertical germ
    int count = 0;

    friend bool operator==(const CornerViolation&, const CornerViolation&) = default;
};

struct ValidationReport {
    bool is_csc = false;
    std::vector<CornerViolation> violations;
    std::size_t corner_count = 0;
};

/// A VH square complex: labeled oriented edges in two classes and squares.
/// Immutable after construction.
class SquareComplex {
public:
    SquareComplex() = default;

    /// Throws DuplicateLabel, ClassError, or Error when the squares do not fit
    /// the edge data (unknown index, mismatched corner vertices).
    SquareComplex(std::vector<std::string> vertices, std::vector<EdgeLabel> hedges, std::vector<EdgeLabel> vedges,
                  std::vector<Square> squares);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    bool one_vertex() const noexcept { return vertices_.size() == 1; }
    const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }

    std::size_t edge_count(EdgeClass cls) const noexcept { return labels(cls).size(); }
    const std::vector<EdgeLabel>& labels(EdgeClass cls) const noexcept {
        return cls == EdgeClass::horizontal ? hedges_ : vedges_;
    }

    std::span<const Square> squares() const noexcept { return squares_; }

    /// Vertex a letter leaves from / arrives at.
    std::size_t origin(EdgeClass cls, Letter l) const;
    std::size_t terminus(EdgeClass cls, Letter l) const;

    /// Looks up a label by name across both classes.
    std::optional<std::pair<EdgeClass, std::uint16_t>> find_label(std::string_view name) const;

    std::string letter_name(EdgeClass cls, Letter l) const;

    /// The oriented square whose SW corner is (east, north), or nullptr.
    /// With duplicated corners the first square in input order wins.
    const Square* corner(Letter east, Letter north) const noexcept {
        const std::size_t slot = corner_slot(east, north);
        if (slot >= corner_table_.size() || corner_table_[slot] < 0) {
            return nullptr;
        }
        return &oriented_[static_cast<std::size_t>(corner_table_[slot])];
    }

    /// Corner multiplicity of (east, north) over all squares and orientations.
    int corner_multiplicity(Letter east, Letter north) const noexcept {
        const std::size_t slot = corner_slot(east, north);
        return slot < corner_counts_.size() ? corner_counts_[slot] : 0;
    }

    bool is_csc() const noexcept { return csc_; }

    friend bool operator==(const SquareComplex& a, const SquareComplex& b) {
        return a.vertices_ == b.vertices_ && a.hedges_ == b.hedges_ && a.vedges_ == b.vedges_ && a.squares_ == b.squares_;
    }

private:
    std::size_t corner_slot(Letter east, Letter north) const noexcept {
        return static_cast<std::size_t>(east.code()) * (2 * vedges_.size()) + north.code();
    }

    std::vector<std::string> vertices_;
    std::vector<EdgeLabel> hedges_;
    std::vector<EdgeLabel> vedges_;
    std::vector<Square> squares_;
    std::vector<Square> oriented_;
    std::vector<std::int32_t> corner_table_;
    std::vector<int> corner_counts_;
    bool csc_ = false;
};

/// Every (horizontal germ, vertical germ) pair sharing a vertex must be the
/// SW corner of exactly one oriented square.
ValidationReport validate_csc(const SquareComplex& complex);

/// Parses the line-oriented `.sqc` presentation format:
///
///     # comment
///     hedges: a b
///     vedges: x y
///     square: a x -b y          (bottom right top left)
///     vertex: p q               (optional; multi-vertex only)
///     ends: a p q               (tail and head of an edge, multi-vertex only)
SquareComplex parse_complex(std::string_view text);

SquareComplex load_complex(const std::string& path);

std::string serialize_complex(const SquareComplex& complex);

}  // namespace nofactor
