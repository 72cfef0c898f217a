#include "ccf/frieze.hpp"

#include <algorithm>
#include <unordered_map>

#include <json.hpp>

#include "ccf/ancestor.hpp"
#include "ccf/tangle.hpp"

namespace ccf {

namespace {

// The diamond rule reads left * right - top * bottom = 1; any three entries
// determine the fourth by an exact division.
std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
    if (den == 0 || num % den != 0 || num / den <= 0)
        throw InvalidFrieze(std::string("diamond rule produced a non-positive or fractional ") +
                            what);
    return num / den;
}

} // namespace

bool Frieze::has_cell(int r, int c) const {
    return r >= 0 && r < static_cast<int>(grid_.size()) && c >= 0 &&
           c < static_cast<int>(grid_[0].size()) && (r + c) % 2 == 0 && grid_[r][c] != 0;
}

std::int64_t Frieze::cell(int r, int c) const {
    return has_cell(r, c) ? grid_[r][c] : 0;
}

Frieze Frieze::from_word(const LRWord& w) {
    const int len = static_cast<int>(w.length());
    const int height = len + 1;
    const int expected_period = len + 4;
    const int width = 8 * expected_period + 4 * height + 16;

    Frieze f;
    f.height_ = height;
    f.word_ = w;
    f.grid_.assign(height + 2, std::vector<std::int64_t>(width, 0));

    for (int c = 0; c < width; ++c) {
        if (c % 2 == 0)
            f.grid_[0][c] = 1;
        if ((height + 1 + c) % 2 == 0)
            f.grid_[height + 1][c] = 1;
    }

    int c = width / 2;
    if ((1 + c) % 2 != 0)
        ++c;
    f.grid_[1][c] = 1;
    for (int k = 0; k < len; ++k) {
        c += (w.letters()[k] == 'L') ? -1 : 1;
        f.grid_[k + 2][c] = 1;
    }

    f.propagate();
    f.finalize();
    return f;
}

// Unimodular propagation: a diamond with three known entries determines the
// fourth.  Worklist of diamond tops, reseeded from every newly filled cell.
void Frieze::propagate() {
    const int width = static_cast<int>(grid_[0].size());
    std::vector<std::pair<int, int>> work;
    auto enqueue_around = [&](int r, int c) {
        // Diamonds having cell (r, c) as top, left, right or bottom.
        for (auto [tr, tc] : {std::pair{r, c}, {r - 1, c + 1}, {r - 1, c - 1}, {r - 2, c}})
            if (tr >= 0 && tr + 2 <= height_ + 1 && tc >= 1 && tc + 1 < width)
                work.push_back({tr, tc});
    };
    for (int r = 0; r <= height_ + 1; ++r)
        for (int c = 0; c < width; ++c)
            if ((r + c) % 2 == 0 && grid_[r][c] != 0)
                enqueue_around(r, c);

    while (!work.empty()) {
        auto [r, col] = work.back();
        work.pop_back();
        std::int64_t top = grid_[r][col];
        std::int64_t left = grid_[r + 1][col - 1];
        std::int64_t right = grid_[r + 1][col + 1];
        std::int64_t bottom = grid_[r + 2][col];
        if ((top != 0) + (left != 0) + (right != 0) + (bottom != 0) != 3)
            continue;
        int nr, nc;
        if (top == 0) {
            grid_[r][col] = exact_div(checked::sub(checked::mul(left, right), 1), bottom, "entry");
            nr = r, nc = col;
        } else if (left == 0) {
            grid_[r + 1][col - 1] =
                exact_div(checked::add(checked::mul(top, bottom), 1), right, "entry");
            nr = r + 1, nc = col - 1;
        } else if (right == 0) {
            grid_[r + 1][col + 1] =
                exact_div(checked::add(checked::mul(top, bottom), 1), left, "entry");
            nr = r + 1, nc = col + 1;
        } else {
            grid_[r + 2][col] = exact_div(checked::sub(checked::mul(left, right), 1), top, "entry");
            nr = r + 2, nc = col;
        }
        enqueue_around(nr, nc);
    }
}

Frieze Frieze::from_quiddity(const std::vector<std::int64_t>& quiddity) {
    const int n = static_cast<int>(quiddity.size());
    if (n < 1)
        throw InvalidFrieze("empty quiddity row");
    bool all_ones = true;
    for (std::int64_t q : quiddity) {
        if (q < 1)
            throw InvalidFrieze("quiddity entries must be positive");
        all_ones = all_ones && q == 1;
    }
    if (all_ones)
        throw InvalidFrieze("an all-1 row has no interior; no frieze to rebuild");

    const int width = 12 * n + 4 * (n + 6);
    std::vector<std::vector<std::int64_t>> grid;
    grid.emplace_back(width, 0);
    for (int c = 0; c < width; c += 2)
        grid[0][c] = 1;
    grid.emplace_back(width, 0);
    for (int c = 1; c < width; c += 2)
        grid[1][c] = quiddity[((c - 1) / 2) % n];

    // Fill downward; a valid quiddity closes with a row of 1s.
    int height = -1;
    for (int r = 2; r <= n + 2; ++r) {
        grid.emplace_back(width, 0);
        bool all_ones = true, any = false;
        for (int c = r - 1; c < width - (r - 1); ++c) {
            if ((r + c) % 2 != 0)
                continue;
            std::int64_t v = exact_div(
                checked::sub(checked::mul(grid[r - 1][c - 1], grid[r - 1][c + 1]), 1),
                grid[r - 2][c], "entry");
            grid[r][c] = v;
            any = true;
            all_ones = all_ones && v == 1;
        }
        if (any && all_ones) {
            height = r - 1;
            break;
        }
    }
    if (height < 0)
        throw InvalidFrieze("row is not the quiddity of a Conway-Coxeter frieze (no closing 1-row)");

    Frieze f;
    f.height_ = height;
    f.grid_ = std::move(grid);
    f.finalize();
    return f;
}

void Frieze::finalize() {
    const int rows = height_ + 2;
    const int width = static_cast<int>(grid_[0].size());

    // Largest contiguous block of fully filled columns around the middle.
    auto col_ok = [&](int c) {
        for (int r = 0; r < rows; ++r)
            if ((r + c) % 2 == 0 && grid_[r][c] == 0)
                return false;
        return true;
    };
    int mid = width / 2;
    if (!col_ok(mid))
        throw InvalidFrieze("propagation did not fill the working band");
    band_first_ = mid;
    while (band_first_ > 0 && col_ok(band_first_ - 1))
        --band_first_;
    band_last_ = mid;
    while (band_last_ + 1 < width && col_ok(band_last_ + 1))
        ++band_last_;

    // Minimal horizontal period (in column pairs).
    int band_width = band_last_ - band_first_ + 1;
    int found = 0;
    for (int s = 2; 2 * s + 2 <= band_width; s += 2) {
        bool ok = true;
        for (int c = band_first_; ok && c + s <= band_last_; ++c)
            for (int r = 0; r < rows; ++r)
                if ((r + c) % 2 == 0 && grid_[r][c] != grid_[r][c + s]) {
                    ok = false;
                    break;
                }
        if (ok) {
            found = s;
            break;
        }
    }
    if (found == 0)
        throw InvalidFrieze("no horizontal period inside the working band");
    period_ = found / 2;

    // Anchor the fundamental domain near the band center so that full
    // diagonals through any domain cell stay inside the band.
    anchor_ = band_first_ + (band_width - 2 * period_) / 2;
    if ((1 + anchor_) % 2 != 0)
        ++anchor_;

    quiddity_.clear();
    for (int k = 0; k < period_; ++k)
        quiddity_.push_back(grid_[1][anchor_ + 2 * k]);
    canonical_ = quiddity_;
    for (int shift = 1; shift < period_; ++shift) {
        std::vector<std::int64_t> rot(quiddity_.begin() + shift, quiddity_.end());
        rot.insert(rot.end(), quiddity_.begin(), quiddity_.begin() + shift);
        if (rot < canonical_)
            canonical_ = rot;
    }

    max_entry_ = 0;
    for (int r = 1; r <= height_; ++r)
        for (int c = anchor_; c < anchor_ + 2 * period_; ++c)
            if ((r + c) % 2 == 0)
                max_entry_ = std::max(max_entry_, grid_[r][c]);

    validate();
}

void Frieze::validate() const {
    const int rows = height_ + 2;
    for (int c = band_first_; c <= band_last_; ++c)
        for (int r = 0; r < rows; ++r)
            if ((r + c) % 2 == 0 && grid_[r][c] <= 0 && has_cell(r, c))
                throw InvalidFrieze("non-positive entry");
    for (int r = 0; r + 2 <= height_ + 1; ++r)
        for (int c = band_first_ + 1; c < band_last_; ++c) {
            if ((r + c) % 2 != 0)
                continue;
            std::int64_t top = grid_[r][c], left = grid_[r + 1][c - 1],
                         right = grid_[r + 1][c + 1], bottom = grid_[r + 2][c];
            if (top == 0 || left == 0 || right == 0 || bottom == 0)
                continue;
            if (checked::sub(checked::mul(left, right), checked::mul(top, bottom)) != 1)
                throw InvalidFrieze("diamond rule violated at row " + std::to_string(r) +
                                    ", column " + std::to_string(c));
        }
    for (int c = band_first_; c + 2 * period_ <= band_last_; ++c)
        for (int r = 0; r < rows; ++r)
            if ((r + c) % 2 == 0 && grid_[r][c] != grid_[r][c + 2 * period_])
                throw InvalidFrieze("pattern is not periodic inside the band");
}

std::vector<std::vector<std::int64_t>> Frieze::fundamental_rows() const {
    std::vector<std::vector<std::int64_t>> rows;
    for (int r = 1; r <= height_; ++r) {
        std::vector<std::int64_t> row;
        int c0 = anchor_ + ((r + anchor_) % 2 == 0 ? 0 : 1);
        for (int k = 0; k < period_; ++k)
            row.push_back(grid_[r][c0 + 2 * k]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::pair<int, int>> Frieze::max_positions() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= height_; ++r)
        for (int c = anchor_; c < anchor_ + 2 * period_; ++c)
            if ((r + c) % 2 == 0 && grid_[r][c] == max_entry_)
                out.push_back({r, c});
    return out;
}

bool equal_up_to_translation(const Frieze& f, const Frieze& g) {
    return f.interior_height() == g.interior_height() &&
           f.canonical_quiddity() == g.canonical_quiddity();
}

bool equal_up_to_glide_reflection(const Frieze& f, const Frieze& g) {
    return equal_up_to_translation(f, vertical_reflection(g));
}

bool equal_up_to_mirror(const Frieze& f, const Frieze& g) {
    return equal_up_to_translation(f, horizontal_mirror(g));
}

Frieze vertical_reflection(const Frieze& f) {
    const int rows = f.height_ + 2;
    const int width = static_cast<int>(f.grid_[0].size());
    const int shift = (f.height_ + 1) % 2; // keeps the cell parity convention

    Frieze out;
    out.height_ = f.height_;
    out.grid_.assign(rows, std::vector<std::int64_t>(width, 0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + shift < width; ++c)
            out.grid_[r][c] = f.grid_[rows - 1 - r][c + shift];
    if (f.word_)
        out.word_ = ir_word(*f.word_);
    out.finalize();
    return out;
}

Frieze horizontal_mirror(const Frieze& f) {
    const int rows = f.height_ + 2;
    const int width = static_cast<int>(f.grid_[0].size());
    const int last = width - 1 - (width - 1) % 2; // even, preserves cell parity

    Frieze out;
    out.height_ = f.height_;
    out.grid_.assign(rows, std::vector<std::int64_t>(width, 0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c <= last; ++c)
            out.grid_[r][c] = f.grid_[r][last - c];
    if (f.word_)
        out.word_ = i_word(*f.word_);
    out.finalize();
    return out;
}

LRWord reconstruct_word(const Frieze& f) {
    const int height = f.interior_height();
    struct Walker {
        const Frieze& f;
        int height;
        std::string letters;
        bool dfs(int r, int c) {
            if (r == height)
                return true;
            for (int dc : {-1, +1}) {
                if (f.cell(r + 1, c + dc) == 1) {
                    letters.push_back(dc < 0 ? 'L' : 'R');
                    if (dfs(r + 1, c + dc))
                        return true;
                    letters.pop_back();
                }
            }
            return false;
        }
    };
    for (int c = f.anchor(); c < f.anchor() + 2 * f.period(); ++c) {
        if ((1 + c) % 2 != 0 || f.cell(1, c) != 1)
            continue;
        Walker walker{f, height, {}};
        if (walker.dfs(1, c))
            return LRWord(walker.letters);
    }
    throw NotZigzagType("not zigzag-type: no 1-zigzag joins the boundary rows");
}

LaurentPoly frieze_bracket(const LRWord& w) {
    return v_map(phi_recursive(fraction_of(w)));
}

LaurentPoly frieze_bracket_recursive(const LRWord& w) {
    thread_local std::unordered_map<std::string, LaurentPoly> memo;
    if (auto it = memo.find(w.letters()); it != memo.end())
        return it->second;

    LaurentPoly result;
    const std::string& s = w.letters();
    if (s.empty()) {
        result = LaurentPoly::from_terms({{4, -1}, {-4, -1}});
    } else if (s == "L") {
        result = LaurentPoly::from_terms({{4, -1}, {0, 1}, {-8, 1}});
    } else if (s == "R") {
        result = LaurentPoly::from_terms({{8, 1}, {0, 1}, {-4, -1}});
    } else {
        const LaurentPoly cl = LaurentPoly::monomial(-1, 4);  // -A^4
        const LaurentPoly cr = LaurentPoly::monomial(-1, -4); // -A^-4
        std::size_t run = 1;
        while (run < s.size() && s[run] == s[0])
            ++run;
        if (run == s.size()) {
            // Pure power: peel one letter; the shorter parent is the 0- or
            // 1/1-side whose bracket value is 1.
            LaurentPoly prev = frieze_bracket_recursive(LRWord(s.substr(1)));
            result = (s[0] == 'L') ? cl + cr * prev : cl * prev + cr;
        } else {
            LRWord peeled(std::string_view(s).substr(1)); // drop one letter of the run
            LRWord rest(std::string_view(s).substr(run + 1)); // after the run and its break letter
            if (s[0] == 'R')
                result = cl * frieze_bracket_recursive(peeled) + cr * frieze_bracket_recursive(rest);
            else
                result = cl * frieze_bracket_recursive(rest) + cr * frieze_bracket_recursive(peeled);
        }
    }
    memo.emplace(w.letters(), result);
    return result;
}

std::pair<LaurentPoly, LaurentPoly> qr_polynomials(const Fraction& x) {
    if (!(Fraction(0, 1) < x && x < Fraction(1, 1)))
        throw std::domain_error("Q/R polynomials are defined on (0,1), got " + x.str());

    using Pair = std::pair<LaurentPoly, LaurentPoly>;
    thread_local std::unordered_map<Fraction, Pair, FractionHash> memo;
    if (memo.empty()) {
        memo.emplace(Fraction(0, 1), Pair{LaurentPoly(), LaurentPoly::constant(1)});
        memo.emplace(Fraction(1, 1), Pair{LaurentPoly(), LaurentPoly::constant(1)});
        memo.emplace(Fraction(1, 2), Pair{LaurentPoly::constant(1), LaurentPoly()});
    }
    const LaurentPoly cl = LaurentPoly::monomial(-1, 4);  // -t
    const LaurentPoly cr = LaurentPoly::monomial(-1, -4); // -t^-1

    std::vector<Fraction> work{x};
    while (!work.empty()) {
        Fraction cur = work.back();
        if (memo.count(cur)) {
            work.pop_back();
            continue;
        }
        auto [y, z] = parents(cur);
        auto iy = memo.find(y), iz = memo.find(z);
        if (iy != memo.end() && iz != memo.end()) {
            memo.emplace(cur, Pair{cl * iy->second.first + cr * iz->second.first,
                                   cl * iy->second.second + cr * iz->second.second});
            work.pop_back();
        } else {
            if (iy == memo.end())
                work.push_back(y);
            if (iz == memo.end())
                work.push_back(z);
        }
    }
    return memo.at(x);
}

std::pair<std::int64_t, std::int64_t> qr_at_minus1(const Fraction& x) {
    auto [qp, rp] = qr_polynomials(x);
    std::int64_t q = qp.eval_at_a4_minus1();
    std::int64_t r = rp.eval_at_a4_minus1();
    std::int64_t p = x.num(), den = x.den();
    bool ok;
    if (2 * p == den)
        ok = (q == 1 && r == 0);
    else if (2 * p > den)
        ok = (q + r == p && q == den - p);
    else
        ok = (q == p && q + r == den - p);
    if (!ok)
        throw std::logic_error("Q/R values at -1 break the case split at " + x.str());
    return {q, r};
}

std::int64_t determinant_eval(const Fraction& x) {
    if (x.num() < 1 || x.den() < x.num())
        throw std::domain_error("determinant_eval needs 1 <= p <= q, got " + x.str());
    std::int64_t value = v_map(phi_recursive(x)).eval_at_a4_minus1();
    if (value != x.den())
        throw std::logic_error("determinant specialization of " + x.str() + " gave " +
                               std::to_string(value));
    return value;
}

std::string CcfInvariant::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fractions.size(); ++i)
        out += (i ? ", " : "") + fractions[i].str();
    return out + "}";
}

CcfInvariant complete_invariant(const LRWord& w) {
    std::vector<Fraction> via_qr;
    for (const LRWord& word : {w, r_word(w)}) {
        Fraction f = fraction_of(word);
        auto [q, r] = qr_at_minus1(f);
        std::int64_t den = checked::add(checked::mul(2, q), r);
        via_qr.push_back(Fraction(q, den));
        via_qr.push_back(Fraction(checked::add(q, r), den));
    }
    std::vector<Fraction> via_words = {fraction_of(w), fraction_of(i_word(w)),
                                       fraction_of(r_word(w)), fraction_of(ir_word(w))};
    auto normalize = [](std::vector<Fraction>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    normalize(via_qr);
    normalize(via_words);
    if (via_qr != via_words)
        throw std::logic_error("the two invariant routes disagree for word " + w.str());
    return CcfInvariant{via_qr};
}

std::string render(const Frieze& f) {
    std::string out = "height: " + std::to_string(f.interior_height()) +
                      "  period: " + std::to_string(f.period()) +
                      "  max: " + std::to_string(f.max_entry()) + "\nquiddity:";
    for (std::int64_t q : f.canonical_quiddity())
        out += " " + std::to_string(q);
    out += "\n";

    int cellw = static_cast<int>(std::to_string(f.max_entry()).size());
    int slot = cellw + 1 + ((cellw + 1) % 2); // even, so half-steps land on characters
    int c0 = f.anchor() - 1;
    int c1 = c0 + 4 * f.period() + 1; // two periods
    for (int r = 0; r <= f.interior_height() + 1; ++r) {
        std::string line;
        for (int c = std::max(c0, 0); c <= c1; ++c) {
            if ((r + c) % 2 != 0 || !f.has_cell(r, c))
                continue;
            std::string v = std::to_string(f.cell(r, c));
            std::size_t x = static_cast<std::size_t>((c - c0) * slot / 2);
            if (line.size() < x + v.size())
                line.resize(x + v.size(), ' ');
            line.replace(x, v.size(), v);
        }
        out += line + "\n";
    }
    return out;
}

std::string to_json(const Frieze& f) {
    nlohmann::json j;
    j["period"] = f.period();
    j["rows"] = f.fundamental_rows();
    std::optional<LRWord> word = f.source_word();
    if (!word) {
        try {
            word = reconstruct_word(f);
        } catch (const NotZigzagType&) {
        }
    }
    if (word) {
        j["word"] = word->str();
        j["bracket"] = frieze_bracket(*word).str();
        j["invariant"] = nlohmann::json::array();
        for (const Fraction& x : complete_invariant(*word).fractions)
            j["invariant"].push_back(x.str());
    } else {
        j["word"] = nullptr;
        j["bracket"] = nullptr;
        j["invariant"] = nullptr;
    }
    return j.dump(2);
}

} // namespace ccf
