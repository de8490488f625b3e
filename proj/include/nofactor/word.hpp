#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nofactor/complex.hpp"

namespace nofactor {

/// A reduced word in the letters of one edge class.
class Word {
public:
    Word() = default;
    explicit Word(EdgeClass cls) : cls_(cls) {}
    /// Throws Error if a letter is followed by its inverse.
    Word(EdgeClass cls, std::vector<Letter> letters);

    EdgeClass cls() const noexcept { return cls_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::span<const Letter> letters() const noexcept { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    Word inverse() const;
    Word power(std::size_t k) const;
    Word prefix(std::size_t n) const;
    /// Throws ClassError on class mismatch and Error if the result is not reduced.
    Word concat(const Word& tail) const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    EdgeClass cls_ = EdgeClass::horizontal;
    std::vector<Letter> letters_;
};

/// The bi-infinite power of a primitive, cyclically reduced word.
class PeriodicWord {
public:
    /// Throws Error if the period is empty, not cyclically reduced, or a proper power.
    explicit PeriodicWord(Word period);

    const Word& period() const noexcept { return period_; }
    std::size_t length() const noexcept { return period_.size(); }
    EdgeClass cls() const noexcept { return period_.cls(); }

    /// Letter at an integer position; position 0 is the first letter of the period.
    Letter at(std::int64_t pos) const {
        const auto n = static_cast<std::int64_t>(period_.size());
        return period_[static_cast<std::size_t>(((pos % n) + n) % n)];
    }

    PeriodicWord inverse() const { return PeriodicWord(period_.inverse()); }

    friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;

private:
    Word period_;
};

bool is_cyclically_reduced(const Word& w);
bool is_proper_power(const Word& w);

/// Parses letters separated by whitespace, commas or dots. A letter is a label
/// with an optional leading '-' (inverse) and optional trailing "^k" (k-fold
/// repetition). Tokens that are not labels are split greedily into
/// single-character labels, so "ab-a" reads as a b -a when labels are one
/// character long. "" and "1" denote the empty word.
Word parse_word(const SquareComplex& complex, std::string_view text, std::optional<EdgeClass> expected = std::nullopt);

std::string format_word(const SquareComplex& complex, const Word& w);

}  // namespace nofactor
