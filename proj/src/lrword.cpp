#include "ccf/lrword.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ccf {

LRWord::LRWord(std::string_view letters) : letters_(letters) {
    for (char c : letters_)
        if (c != 'L' && c != 'R')
            throw std::invalid_argument("LR word may contain only L and R, got \"" +
                                        std::string(letters) + "\"");
}

LRWord LRWord::parse(std::string_view text) {
    if (text == "-" || text.empty())
        return LRWord();
    std::string flat;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != 'L' && c != 'R')
            throw std::invalid_argument("cannot parse LR word: \"" + std::string(text) + "\"");
        ++i;
        std::int64_t rep = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            auto res = std::from_chars(text.data() + start, text.data() + i, rep);
            if (start == i || res.ec != std::errc{} || rep < 1 || rep > 1'000'000)
                throw std::invalid_argument("bad exponent in LR word: \"" + std::string(text) + "\"");
        }
        flat.append(static_cast<std::size_t>(rep), c);
    }
    return LRWord(flat);
}

std::size_t LRWord::count_l() const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'L'));
}

std::size_t LRWord::count_r() const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'R'));
}

LRWord LRWord::prefixed(char letter) const {
    return LRWord(std::string(1, letter) + letters_);
}

LRWord LRWord::appended(char letter) const {
    return LRWord(letters_ + std::string(1, letter));
}

LRWord LRWord::without_first() const {
    if (letters_.empty())
        throw std::domain_error("empty word has no first letter");
    return LRWord(std::string_view(letters_).substr(1));
}

LRWord word_of(const Fraction& x) {
    if (!(Fraction(0, 1) < x && x < Fraction(1, 1)))
        throw std::domain_error("LR words address rationals in (0,1), got " + x.str());
    // Walk the subtree rooted at 1/2, recording turns; the word is the
    // reversed record.
    Fraction lo(0, 1), hi(1, 1), cur(1, 2);
    std::string walk;
    while (!(cur == x)) {
        if (x < cur) {
            walk += 'L';
            hi = cur;
        } else {
            walk += 'R';
            lo = cur;
        }
        cur = Fraction(checked::add(lo.num(), hi.num()), checked::add(lo.den(), hi.den()));
    }
    std::reverse(walk.begin(), walk.end());
    return LRWord(walk);
}

Fraction fraction_of(const LRWord& w) {
    std::int64_t p = 1, q = 2;
    for (char c : w.letters()) {
        if (c == 'L') {
            q = checked::add(p, q);
        } else {
            std::int64_t np = q;
            q = checked::sub(checked::mul(2, q), p);
            p = np;
        }
    }
    return Fraction(p, q);
}

LRWord i_word(const LRWord& w) {
    std::string s = w.letters();
    for (char& c : s)
        c = (c == 'L') ? 'R' : 'L';
    return LRWord(s);
}

LRWord r_word(const LRWord& w) {
    std::string s = w.letters();
    std::reverse(s.begin(), s.end());
    return LRWord(s);
}

LRWord ir_word(const LRWord& w) {
    return i_word(r_word(w));
}

LRWord join(const LRWord& w, const LRWord& w2) {
    Fraction a = fraction_of(w), b = fraction_of(w2);
    std::int64_t det = checked::sub(checked::mul(a.den(), b.num()), checked::mul(a.num(), b.den()));
    if (det != 1)
        throw std::domain_error("join requires ascending Farey-neighbor fractions, got " + a.str() +
                                " and " + b.str());
    if (w.length() == w2.length())
        throw std::domain_error("join of equal-length words " + w.str() + " and " + w2.str() +
                                " is not defined");
    return w.length() < w2.length() ? w2.prefixed('L') : w.prefixed('R');
}

} // namespace ccf
