#include "nofactor/word.hpp"

#include <algorithm>
#include <charconv>

#include "nofactor/errors.hpp"

namespace nofactor {

Word::Word(EdgeClass cls, std::vector<Letter> letters) : cls_(cls), letters_(std::move(letters)) {
    for (std::size_t i = 1; i < letters_.size(); ++i) {
        if (letters_[i] == letters_[i - 1].inverse()) {
            throw Error("word is not reduced at position " + std::to_string(i));
        }
    }
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back(it->inverse());
    }
    return Word(cls_, std::move(out));
}

Word Word::power(std::size_t k) const {
    if (k > 1 && !letters_.empty() && !is_cyclically_reduced(*this)) {
        throw Error("power of a word that is not cyclically reduced");
    }
    std::vector<Letter> out;
    out.reserve(letters_.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
        out.insert(out.end(), letters_.begin(), letters_.end());
    }
    Word w(cls_);
    w.letters_ = std::move(out);
    return w;
}

Word Word::prefix(std::size_t n) const {
    Word w(cls_);
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, letters_.size())));
    return w;
}

Word Word::concat(const Word& tail) const {
    if (tail.cls_ != cls_ && !tail.empty() && !empty()) {
        throw ClassError("cannot concatenate a " + std::string(to_string(cls_)) + " word with a " +
                         std::string(to_string(tail.cls_)) + " word");
    }
    std::vector<Letter> out = letters_;
    out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
    return Word(empty() ? tail.cls_ : cls_, std::move(out));
}

bool is_cyclically_reduced(const Word& w) {
    return w.size() < 2 || w[w.size() - 1] != w[0].inverse();
}

bool is_proper_power(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) {
            continue;
        }
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) {
            periodic = w[i] == w[i - d];
        }
        if (periodic) {
            return true;
        }
    }
    return false;
}

PeriodicWord::PeriodicWord(Word period) : period_(std::move(period)) {
    if (period_.empty()) {
        throw Error("periodic word needs a nonempty period");
    }
    if (!is_cyclically_reduced(period_)) {
        throw Error("period is not cyclically reduced");
    }
    if (is_proper_power(period_)) {
        throw Error("period is a proper power");
    }
}

namespace {

struct Token {
    EdgeClass cls;
    Letter letter;
    std::size_t repeat;
};

std::optional<Token> lookup(const SquareComplex& complex, std::string_view tok) {
    bool inv = false;
    if (!tok.empty() && tok.front() == '-') {
        inv = true;
        tok.remove_prefix(1);
    }
    std::size_t repeat = 1;
    if (const auto caret = tok.find('^'); caret != std::string_view::npos) {
        const auto digits = tok.substr(caret + 1);
        const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), repeat);
        if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size()) {
            return std::nullopt;
        }
        tok = tok.substr(0, caret);
    }
    const auto found = complex.find_label(tok);
    if (!found) {
        return std::nullopt;
    }
    return Token{found->first, Letter(found->second, inv), repeat};
}

}  // namespace

Word parse_word(const SquareComplex& complex, std::string_view text, std::optional<EdgeClass> expected) {
    std::vector<Token> tokens;
    std::string current;
    auto flush = [&] {
        if (current.empty() || current == "1") {
            current.clear();
            return;
        }
        if (auto t = lookup(complex, current)) {
            tokens.push_back(*t);
            current.clear();
            return;
        }
        // Greedy split into single-character labels.
        std::size_t i = 0;
        while (i < current.size()) {
            std::string piece;
            if (current[i] == '-') {
                piece.push_back('-');
                ++i;
            }
            if (i >= current.size()) {
                throw ParseError(1, "dangling '-' in word '" + std::string(text) + "'");
            }
            piece.push_back(current[i++]);
            auto t = lookup(complex, piece);
            if (!t) {
                throw ParseError(1, "unknown letter '" + piece + "' in word '" + std::string(text) + "'");
            }
            tokens.push_back(*t);
        }
        current.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == ',' || c == '.') {
            flush();
        } else {
            current.push_back(c);
        }
    }
    flush();

    EdgeClass cls = expected.value_or(tokens.empty() ? EdgeClass::horizontal : tokens.front().cls);
    std::vector<Letter> letters;
    for (const auto& t : tokens) {
        if (t.cls != cls) {
            throw ClassError("word '" + std::string(text) + "' mixes classes or is not " + std::string(to_string(cls)));
        }
        letters.insert(letters.end(), t.repeat, t.letter);
    }
    return Word(cls, std::move(letters));
}

std::string format_word(const SquareComplex& complex, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            out.push_back(' ');
        }
        out += complex.letter_name(w.cls(), w[i]);
    }
    return out;
}

}  // namespace nofactor
