// The trigonometric-curve recipe: locate the maximum entry of a zigzag
// frieze, read the curve through it, fold at the maximum into a signed
// children-sum triangle, and recover the bracket (and its numerator part)
// as a sum over decreasing paths.  Also the curve-deletion chain that
// shrinks a word one letter at a time.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccf/ancestor.hpp" // PathCapExceeded, kDefaultPathCap
#include "ccf/frieze.hpp"
#include "ccf/laurent.hpp"
#include "ccf/lrword.hpp"
#include "ccf/rational.hpp"

namespace ccf {

/// The eight entries around the maximum M: s/v above, t/u below, b/d beside,
/// a/c two rows away (absent when M sits against a boundary row).
struct DiamondNeighborhood {
    std::int64_t m = 0;
    std::int64_t s = 0, v = 0; // above-left, above-right
    std::int64_t t = 0, u = 0; // below-left, below-right
    std::int64_t b = 0, d = 0; // same row, left and right
    std::optional<std::int64_t> a, c;
    int row = 0, col = 0; // position of m in the working band
};

/// Locates the maximum (anchored to the source word: the occurrence whose
/// above-left neighbor over M gives the word's fraction) and returns its
/// neighborhood.  Throws InvalidFrieze when the maximum is ambiguous.
DiamondNeighborhood extract_diamond(const Frieze& f);

/// Node of the folded triangle: value = sum of the two children; the edge to
/// the left child is the minus edge, to the right child the plus edge.
struct FoldNode {
    std::int64_t value = 0;
    Fraction fraction;
    int left = -1, right = -1; // indices; -1 on the two terminal 1s
};

struct FoldedTriangle {
    std::int64_t apex_value = 0;
    Fraction apex_fraction;            // s/M read off the frieze
    std::vector<FoldNode> nodes;       // nodes[0] is the apex
    int floor_terminal = -1;           // the circled 1 (left flank end)
    int ceiling_terminal = -1;         // the boxed 1 (right flank end)
    std::vector<std::int64_t> left_flank;  // M, t, ..., 1 as read down-left
    std::vector<std::int64_t> right_flank; // M, v, ..., 1 as read up-right
};

/// Reads the curve through the maximum, folds there, completes the
/// children-sum triangle and checks it against both flanks of the frieze.
FoldedTriangle fold_triangle(const Frieze& f);

/// One decreasing path from the apex to a terminal 1.
struct SignedPath {
    std::vector<std::int64_t> values;
    int plus_count = 0;
    int minus_count = 0;
    bool to_floor = false; // ends at the circled 1
};

std::vector<SignedPath> signed_paths(const FoldedTriangle& fold,
                                     std::uint64_t step_cap = kDefaultPathCap);

/// Sum of (-1)^(p+q) A^(4(p-q)) over all decreasing paths; equals the
/// bracket of the frieze's word exactly.
LaurentPoly bracket_via_paths(const Frieze& f, std::uint64_t step_cap = kDefaultPathCap);

/// Same sum restricted to floor-terminating paths.
LaurentPoly bracket_num(const Frieze& f, std::uint64_t step_cap = kDefaultPathCap);

/// (-A^3)^(sum (-1)^(i+1) a_i) times the path bracket of the frieze of
/// word_of(x); equals the denominator closure of the tangle of x.
LaurentPoly denominator_link_bracket(const Fraction& x,
                                     std::uint64_t step_cap = kDefaultPathCap);

/// Drops the leading letter repeatedly; each step's fraction is a parent of
/// the previous step's (checked, mismatch throws).
std::vector<std::pair<LRWord, Fraction>> reduce_chain(const LRWord& w);

/// Children-sum relations with +/- edge marks and the two flank chains.
std::string render_fold(const FoldedTriangle& fold);

} // namespace ccf
