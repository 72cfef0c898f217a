// Words over {L, R} and their bijection with the rationals in (0,1):
// a word addresses a descent from 1/2 in the Stern-Brocot tree (letters
// recorded in reverse), and the operations i (swap letters), r (reverse),
// ir, and the join moving along Farey sums.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ccf/rational.hpp"

namespace ccf {

class LRWord {
public:
    LRWord() = default;
    /// Accepts only 'L' and 'R'.
    explicit LRWord(std::string_view letters);

    /// Accepts exponent sugar ("RL^2RL" == "RLLRL") and "-" for the empty word.
    static LRWord parse(std::string_view text);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::string& letters() const { return letters_; }
    std::size_t count_l() const;
    std::size_t count_r() const;

    LRWord prefixed(char letter) const; // letter . w
    LRWord appended(char letter) const; // w . letter
    LRWord without_first() const;

    /// "-" for the empty word, plain letters otherwise.
    std::string str() const { return letters_.empty() ? "-" : letters_; }

    bool operator==(const LRWord& rhs) const = default;
    bool operator<(const LRWord& rhs) const { return letters_ < rhs.letters_; }

private:
    std::string letters_;
};

/// The word of x in (0,1): Stern-Brocot walk from 1/2, letters reversed.
LRWord word_of(const Fraction& x);

/// Inverse of word_of: left fold from 1/2 with L: p/q -> p/(p+q) and
/// R: p/q -> q/(2q-p).
Fraction fraction_of(const LRWord& w);

LRWord i_word(const LRWord& w);  // L <-> R
LRWord r_word(const LRWord& w);  // reversal
LRWord ir_word(const LRWord& w); // both

/// Word of the Farey sum of the fractions of w and w2, which must be
/// ascending Farey neighbors of distinct word lengths: L.w2 when
/// len(w) < len(w2), else R.w.
LRWord join(const LRWord& w, const LRWord& w2);

} // namespace ccf
