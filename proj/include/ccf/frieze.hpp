// Conway-Coxeter friezes of zigzag type.
//
// A frieze is built from an LR word by seeding the 1-zigzag spelled by the
// word between the two boundary rows of 1s and propagating the unimodular
// diamond rule until the pattern closes up periodically.  The bracket of a
// frieze, its Q/R decomposition, the determinant specialization and the
// four-fraction complete invariant all live here.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccf/laurent.hpp"
#include "ccf/lrword.hpp"
#include "ccf/rational.hpp"

namespace ccf {

class NotZigzagType : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidFrieze : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One frieze pattern, stored as a staggered grid: cell (r, c) exists when
/// r + c is even; rows 0 and interior_height()+1 are the all-1 boundary
/// rows.  A wide working band is kept so that diagonal reads stay inside
/// filled territory.
class Frieze {
public:
    /// Seeds the 1-zigzag of shape w and propagates.  Throws InvalidFrieze
    /// if propagation ever produces a non-positive or fractional entry.
    static Frieze from_word(const LRWord& w);

    /// Rebuilds a frieze from one period of its first interior row.  Throws
    /// InvalidFrieze when the row is not the quiddity row of a frieze.
    static Frieze from_quiddity(const std::vector<std::int64_t>& quiddity);

    int interior_height() const { return height_; }
    /// Entries of the first interior row per repeat (the minimal horizontal
    /// period of the pattern, measured, not assumed).
    int period() const { return period_; }
    const std::optional<LRWord>& source_word() const { return word_; }

    /// Quiddity row, one period, anchored at the working band.
    const std::vector<std::int64_t>& quiddity() const { return quiddity_; }
    /// Lexicographically smallest rotation of the quiddity; equal patterns
    /// share this key.
    const std::vector<std::int64_t>& canonical_quiddity() const { return canonical_; }

    /// Interior rows of one fundamental domain, top first; row i is offset
    /// half a cell right of row i-1.
    std::vector<std::vector<std::int64_t>> fundamental_rows() const;

    std::int64_t max_entry() const { return max_entry_; }
    /// Positions (row, column) of the maximum within one period of the band.
    std::vector<std::pair<int, int>> max_positions() const;

    // Raw band access for diagonal reads.
    bool has_cell(int r, int c) const;
    std::int64_t cell(int r, int c) const; // 0 when unknown/outside
    int band_first() const { return band_first_; }
    int band_last() const { return band_last_; }
    int anchor() const { return anchor_; }

    /// Full diamond-rule, positivity and periodicity check over the band.
    void validate() const;

private:
    friend Frieze vertical_reflection(const Frieze& f);
    friend Frieze horizontal_mirror(const Frieze& f);

    Frieze() = default;
    void propagate(); // worklist diamond fill from the seeded cells
    void finalize();  // band, period, quiddity, max entry

    int height_ = 0; // interior rows
    int period_ = 0;
    int anchor_ = 0;     // leftmost row-1 column of the canonical domain
    int band_first_ = 0; // first fully filled column
    int band_last_ = 0;  // last fully filled column
    std::int64_t max_entry_ = 0;
    std::vector<std::vector<std::int64_t>> grid_; // (height_+2) x width, 0 = unknown
    std::vector<std::int64_t> quiddity_;
    std::vector<std::int64_t> canonical_;
    std::optional<LRWord> word_;
};

/// Bi-infinite patterns agree up to horizontal translation.
bool equal_up_to_translation(const Frieze& f, const Frieze& g);

/// Diagnostic companion: f agrees with the vertical reflection of g up to
/// translation.  Every frieze carries a glide symmetry, so in practice this
/// coincides with translation equality; it is kept as a separate check.
bool equal_up_to_glide_reflection(const Frieze& f, const Frieze& g);

/// f agrees with the left-right mirror of g up to translation.  This is the
/// relation that identifies the friezes of w and i(w).
bool equal_up_to_mirror(const Frieze& f, const Frieze& g);

/// Rows reversed top to bottom.  Reading the flipped zigzag top-down
/// reverses and swaps the letters, so this is the frieze of ir(w) (the same
/// pattern up to translation, with the bar-image bracket).
Frieze vertical_reflection(const Frieze& f);

/// Columns reversed left to right; the frieze of the letter-swapped word.
Frieze horizontal_mirror(const Frieze& f);

/// Reads the word off the 1-zigzag connecting the boundary rows.  Throws
/// NotZigzagType when no such zigzag exists.
LRWord reconstruct_word(const Frieze& f);

/// <Gamma(w)> = v(phi(fraction of w)).
LaurentPoly frieze_bracket(const LRWord& w);

/// Same value computed purely on words by the letter-prefix recursions;
/// never touches fractions.
LaurentPoly frieze_bracket_recursive(const LRWord& w);

/// (Q_x, R_x) in t = A^4, stored as A-polynomials with exponents divisible
/// by 4; <Gamma(w(x))> = (-t - t^-1) Q_x + R_x.
std::pair<LaurentPoly, LaurentPoly> qr_polynomials(const Fraction& x);

/// (Q_x(-1), R_x(-1)); asserts the case split: for 2p > q the pair sums to p
/// with Q = q - p, mirrored for 2p < q.
std::pair<std::int64_t, std::int64_t> qr_at_minus1(const Fraction& x);

/// Substitutes A^4 = -1 into v(phi(p/q)) and checks the value is q.
std::int64_t determinant_eval(const Fraction& x);

/// The set {p/q, (q-p)/q, p'/q, (q-p')/q} attached to w and its reversal;
/// closed under complement, at most four elements.
struct CcfInvariant {
    std::vector<Fraction> fractions; // sorted, unique

    bool operator==(const CcfInvariant& rhs) const = default;
    std::string str() const;
};

/// Computed two independent ways (Q/R values at -1, and the word/fraction
/// maps) which are checked against each other.
CcfInvariant complete_invariant(const LRWord& w);

/// Staggered ASCII rendering with period annotation.
std::string render(const Frieze& f);

/// JSON export: {period, rows, word, bracket, invariant}.
std::string to_json(const Frieze& f);

} // namespace ccf
