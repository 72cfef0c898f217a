#include "ccf/recipe.hpp"

#include <algorithm>
#include <unordered_map>

namespace ccf {

namespace {

// All positions of the maximum inside one period, shifted so that the full
// diagonals through them stay inside the band.
std::vector<std::pair<int, int>> anchored_max_positions(const Frieze& f) {
    std::vector<std::pair<int, int>> out;
    const int reach = f.interior_height() + 1;
    if (f.band_last() - f.band_first() < 2 * reach + 2 * f.period())
        throw InvalidFrieze("working band too narrow for diagonal reads");
    for (auto [r, c] : f.max_positions()) {
        while (c - reach < f.band_first())
            c += 2 * f.period();
        while (c + reach > f.band_last())
            c -= 2 * f.period();
        out.push_back({r, c});
    }
    // Leftmost first.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
    return out;
}

LRWord word_for(const Frieze& f) {
    if (f.source_word())
        return *f.source_word();
    return reconstruct_word(f);
}

} // namespace

DiamondNeighborhood extract_diamond(const Frieze& f) {
    Fraction target = fraction_of(word_for(f));
    auto positions = anchored_max_positions(f);

    // At most the two orientation copies of the maximum may occur per
    // period; more means the maximum is ambiguous.
    if (positions.empty() || positions.size() > 2)
        throw InvalidFrieze("maximum entry " + std::to_string(f.max_entry()) +
                            " is not unique per period (" + std::to_string(positions.size()) +
                            " occurrences)");

    if (f.max_entry() != target.den())
        throw InvalidFrieze("maximum entry " + std::to_string(f.max_entry()) +
                            " does not match the word's denominator " + target.str());

    for (auto [r, c] : positions) {
        if (f.cell(r - 1, c - 1) != target.num())
            continue;
        DiamondNeighborhood n;
        n.m = f.cell(r, c);
        n.row = r;
        n.col = c;
        n.s = f.cell(r - 1, c - 1);
        n.v = f.cell(r - 1, c + 1);
        n.t = f.cell(r + 1, c - 1);
        n.u = f.cell(r + 1, c + 1);
        n.b = f.cell(r, c - 2);
        n.d = f.cell(r, c + 2);
        if (r >= 2)
            n.a = f.cell(r - 2, c);
        if (r <= f.interior_height() - 1)
            n.c = f.cell(r + 2, c);
        return n;
    }
    throw InvalidFrieze("no occurrence of the maximum carries the word's numerator " +
                        std::to_string(target.num()) + " above-left");
}

FoldedTriangle fold_triangle(const Frieze& f) {
    DiamondNeighborhood dia = extract_diamond(f);
    Fraction apex(dia.s, dia.m);

    FoldedTriangle fold;
    fold.apex_value = dia.m;
    fold.apex_fraction = apex;

    // Decompose the apex fraction; nodes are shared through the index, and
    // the two terminal 1s are the 1/1 vertex (floor side) and 0/1 (ceiling).
    std::unordered_map<Fraction, int, FractionHash> index;
    auto node_of = [&](const Fraction& x, auto&& self) -> int {
        if (auto it = index.find(x); it != index.end())
            return it->second;
        int id = static_cast<int>(fold.nodes.size());
        index.emplace(x, id);
        fold.nodes.push_back({x.den(), x, -1, -1});
        if (x.den() > 1) {
            auto [lp, rp] = parents(x);
            // The fraction-right parent hangs on the floor-side (minus)
            // flank, the fraction-left parent on the ceiling side.
            int left = self(rp, self);
            int right = self(lp, self);
            fold.nodes[id].left = left;
            fold.nodes[id].right = right;
        }
        return id;
    };
    int apex_id = node_of(apex, node_of);
    if (apex_id != 0)
        throw std::logic_error("apex must be node 0");
    fold.floor_terminal = index.count(Fraction(1, 1)) ? index.at(Fraction(1, 1)) : -1;
    fold.ceiling_terminal = index.count(Fraction(0, 1)) ? index.at(Fraction(0, 1)) : -1;

    // Children-sum invariant.
    for (const FoldNode& n : fold.nodes)
        if (n.left >= 0 &&
            n.value != checked::add(fold.nodes[n.left].value, fold.nodes[n.right].value))
            throw InvalidFrieze("folded-triangle node is not the sum of its children");

    // Both flanks must reproduce the frieze's diagonals through M.
    auto flank = [&](bool left_side) {
        std::vector<std::int64_t> chain{fold.apex_value};
        for (int id = apex_id; id >= 0 && fold.nodes[id].value > 1;)
            chain.push_back(fold.nodes[id = (left_side ? fold.nodes[id].left : fold.nodes[id].right)].value);
        return chain;
    };
    fold.left_flank = flank(true);
    fold.right_flank = flank(false);
    for (std::size_t k = 0; k < fold.left_flank.size(); ++k)
        if (f.cell(dia.row + static_cast<int>(k), dia.col - static_cast<int>(k)) !=
            fold.left_flank[k])
            throw InvalidFrieze("floor-side curve disagrees with the fold at step " +
                                std::to_string(k));
    for (std::size_t k = 0; k < fold.right_flank.size(); ++k)
        if (f.cell(dia.row - static_cast<int>(k), dia.col + static_cast<int>(k)) !=
            fold.right_flank[k])
            throw InvalidFrieze("ceiling-side curve disagrees with the fold at step " +
                                std::to_string(k));
    // The flanks must span exactly the rows between M and the two boundary
    // rows, so the curve really joins floor to ceiling through M.
    if (static_cast<int>(fold.left_flank.size()) != f.interior_height() + 2 - dia.row ||
        static_cast<int>(fold.right_flank.size()) != dia.row + 1)
        throw InvalidFrieze("curve through the maximum does not reach the boundary rows");
    return fold;
}

std::vector<SignedPath> signed_paths(const FoldedTriangle& fold, std::uint64_t step_cap) {
    std::vector<SignedPath> paths;
    SignedPath cur;
    std::uint64_t steps = 0;
    auto walk = [&](int id, auto&& self) -> void {
        if (++steps > step_cap)
            throw PathCapExceeded("fold path enumeration exceeded " + std::to_string(step_cap) +
                                  " steps");
        const FoldNode& n = fold.nodes[id];
        cur.values.push_back(n.value);
        if (n.left < 0) {
            cur.to_floor = (id == fold.floor_terminal);
            paths.push_back(cur);
        } else {
            ++cur.minus_count;
            self(n.left, self);
            --cur.minus_count;
            ++cur.plus_count;
            self(n.right, self);
            --cur.plus_count;
        }
        cur.values.pop_back();
    };
    walk(0, walk);
    return paths;
}

namespace {

LaurentPoly path_sum(const FoldedTriangle& fold, bool floor_only, std::uint64_t step_cap) {
    LaurentPoly total;
    for (const SignedPath& p : signed_paths(fold, step_cap)) {
        if (floor_only && !p.to_floor)
            continue;
        int sign = (p.plus_count + p.minus_count) % 2 == 0 ? 1 : -1;
        total += LaurentPoly::monomial(sign, 4 * (p.plus_count - p.minus_count));
    }
    return total;
}

} // namespace

LaurentPoly bracket_via_paths(const Frieze& f, std::uint64_t step_cap) {
    FoldedTriangle fold = fold_triangle(f);
    LaurentPoly total = path_sum(fold, false, step_cap);
    // The fold fixes the orientation; the degree bounds confirm it.
    LRWord w = word_for(f);
    if (total.max_degree() != 4 * (static_cast<int>(w.count_r()) + 1) ||
        total.min_degree() != -4 * (static_cast<int>(w.count_l()) + 1))
        throw std::logic_error("fold orientation violates the degree bounds for word " + w.str());
    return total;
}

LaurentPoly bracket_num(const Frieze& f, std::uint64_t step_cap) {
    return path_sum(fold_triangle(f), true, step_cap);
}

LaurentPoly denominator_link_bracket(const Fraction& x, std::uint64_t step_cap) {
    if (!(Fraction(0, 1) < x && x < Fraction(1, 1)))
        throw std::domain_error("denominator link is taken for x in (0,1), got " + x.str());
    std::int64_t e = normalization_exponent(continued_fraction_even(x));
    Frieze f = Frieze::from_word(word_of(x));
    return neg_a3_pow(-e) * bracket_via_paths(f, step_cap);
}

std::vector<std::pair<LRWord, Fraction>> reduce_chain(const LRWord& w) {
    std::vector<std::pair<LRWord, Fraction>> chain;
    LRWord cur = w;
    while (!cur.empty()) {
        Fraction before = fraction_of(cur);
        auto [lp, rp] = parents(before);
        cur = cur.without_first();
        Fraction after = fraction_of(cur);
        if (!(after == lp) && !(after == rp))
            throw std::logic_error("deletion step " + cur.str() + " is not a parent of " +
                                   before.str());
        chain.push_back({cur, after});
    }
    return chain;
}

std::string render_fold(const FoldedTriangle& fold) {
    std::string out = "fold at M=" + std::to_string(fold.apex_value) + ", fraction " +
                      fold.apex_fraction.str() + "\n";
    auto chain_str = [](const std::vector<std::int64_t>& chain) {
        std::string s;
        for (std::size_t i = 0; i < chain.size(); ++i)
            s += (i ? " " : "") + std::to_string(chain[i]);
        return s;
    };
    out += "floor flank (-):   " + chain_str(fold.left_flank) + "\n";
    out += "ceiling flank (+): " + chain_str(fold.right_flank) + "\n";
    for (const FoldNode& n : fold.nodes) {
        if (n.left < 0)
            continue;
        const FoldNode& l = fold.nodes[n.left];
        const FoldNode& r = fold.nodes[n.right];
        auto mark = [&](const FoldNode& child) {
            if (child.left >= 0)
                return std::to_string(child.value);
            return std::to_string(child.value) +
                   (child.fraction == Fraction(1, 1) ? "(floor)" : "(ceiling)");
        };
        out += "  " + std::to_string(n.value) + " = " + mark(l) + "(-) + " + mark(r) + "(+)\n";
    }
    return out;
}

} // namespace ccf
