#include "ccf/ancestor.hpp"

#include <stdexcept>
#include <unordered_map>

namespace ccf {

AncestorTriangle build_triangle(const Fraction& x) {
    if (x.is_infinity() || x.is_zero() || x.num() < 0)
        throw std::domain_error("ancestor triangle needs a positive finite rational, got " + x.str());

    AncestorTriangle tri;
    tri.apex = x;
    tri.vertices = {Fraction(0, 1), Fraction::infinity()};

    // Stern-Brocot descent; every bracketing interval visited on the way is a
    // fundamental triangle, in creation order.
    Fraction lo(0, 1), hi = Fraction::infinity();
    while (true) {
        Fraction med(checked::add(lo.num(), hi.num()), checked::add(lo.den(), hi.den()));
        tri.triangles.push_back({lo, hi, med});
        tri.vertices.push_back(med);
        if (med == x)
            break;
        if (x < med)
            hi = med;
        else
            lo = med;
    }

    for (Fraction v = x; !(v == Fraction(0, 1)); v = parents(v).first)
        ++tri.left_edges;
    for (Fraction v = x; !v.is_infinity(); v = parents(v).second)
        ++tri.right_edges;
    return tri;
}

namespace {

enum class Side : unsigned char { left, right };

// Sides of the strip triangles relative to a complete path.  The final
// triangle's side is fixed by which parent the path used to enter the apex;
// walking back up the strip, the side flips exactly when the edge shared by
// consecutive triangles lies on the path.
void count_sides(const AncestorTriangle& tri,
                 const std::unordered_map<Fraction, Fraction, FractionHash>& pred,
                 int& w_left, int& w_right) {
    const auto& ts = tri.triangles;
    std::size_t n = ts.size();
    auto on_path_edge = [&](const Fraction& parent, const Fraction& mediant) {
        auto it = pred.find(mediant);
        return it != pred.end() && it->second == parent;
    };

    Side side = on_path_edge(ts[n - 1].left, ts[n - 1].mediant) ? Side::right : Side::left;
    w_left = w_right = 0;
    (side == Side::left ? w_left : w_right) += 1;
    for (std::size_t j = n - 1; j-- > 0;) {
        // Shared edge between triangle j and j+1: the parent pair of
        // mediant(j+1), whose deeper endpoint is mediant(j).
        const Fraction& med_j = ts[j].mediant;
        const Fraction& other = (ts[j + 1].left == med_j) ? ts[j + 1].right : ts[j + 1].left;
        if (on_path_edge(other, med_j))
            side = (side == Side::left) ? Side::right : Side::left;
        (side == Side::left ? w_left : w_right) += 1;
    }
}

} // namespace

std::vector<DescendingPath> descending_paths(const AncestorTriangle& tri, bool from_infinity,
                                             std::uint64_t step_cap) {
    // Parent -> mediant edges of the strip.
    std::unordered_map<Fraction, std::vector<Fraction>, FractionHash> out_edges;
    for (const auto& t : tri.triangles) {
        out_edges[t.left].push_back(t.mediant);
        out_edges[t.right].push_back(t.mediant);
    }

    Fraction start = from_infinity ? Fraction::infinity() : Fraction(0, 1);
    std::vector<DescendingPath> paths;
    std::unordered_map<Fraction, Fraction, FractionHash> pred;
    std::uint64_t steps = 0;

    // Iterative DFS over the acyclic parent->mediant graph.
    struct Frame {
        Fraction vertex;
        std::size_t next_edge = 0;
    };
    std::vector<Frame> frames{{start}};
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.vertex == tri.apex) {
            DescendingPath p;
            for (const Frame& g : frames)
                p.vertices.push_back(g.vertex);
            count_sides(tri, pred, p.left_triangles, p.right_triangles);
            paths.push_back(std::move(p));
            pred.erase(f.vertex);
            frames.pop_back();
            continue;
        }
        auto it = out_edges.find(f.vertex);
        if (it == out_edges.end() || f.next_edge >= it->second.size()) {
            if (frames.size() > 1)
                pred.erase(f.vertex);
            frames.pop_back();
            continue;
        }
        if (++steps > step_cap)
            throw PathCapExceeded("descending-path enumeration exceeded " +
                                  std::to_string(step_cap) + " steps");
        const Fraction& next = it->second[f.next_edge++];
        pred[next] = f.vertex;
        frames.push_back({next});
    }
    return paths;
}

namespace {

using PhiMemo = std::unordered_map<Fraction, BracketVector, FractionHash>;

const BracketVector& phi_impl(const Fraction& x, PhiMemo& memo, const BracketVector& base_zero,
                              const BracketVector& base_inf) {
    if (auto it = memo.find(x); it != memo.end())
        return it->second;
    // Explicit work stack: continued-fraction chains can be deep.
    std::vector<Fraction> work{x};
    const LaurentPoly cl = LaurentPoly::monomial(-1, 4);  // -A^4
    const LaurentPoly cr = LaurentPoly::monomial(-1, -4); // -A^-4
    while (!work.empty()) {
        Fraction cur = work.back();
        if (memo.count(cur)) {
            work.pop_back();
            continue;
        }
        if (cur.is_zero()) {
            memo.emplace(cur, base_zero);
            work.pop_back();
            continue;
        }
        if (cur.is_infinity()) {
            memo.emplace(cur, base_inf);
            work.pop_back();
            continue;
        }
        auto [y, z] = parents(cur);
        auto iy = memo.find(y);
        auto iz = memo.find(z);
        if (iy != memo.end() && iz != memo.end()) {
            memo.emplace(cur, add(scale(cl, iy->second), scale(cr, iz->second)));
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

} // namespace

BracketVector phi_recursive(const Fraction& x) {
    thread_local PhiMemo memo;
    if (x.num() < 0)
        throw std::domain_error("phi is defined on nonnegative rationals and inf, got " + x.str());
    return phi_impl(x, memo, {LaurentPoly(), LaurentPoly::constant(1)},
                    {LaurentPoly::monomial(1, 6), LaurentPoly()});
}

BracketVector phi_tilde(const Fraction& x) {
    thread_local PhiMemo memo;
    if (x.num() < 0)
        throw std::domain_error("phi~ is defined on nonnegative rationals and inf, got " + x.str());
    return phi_impl(x, memo, {LaurentPoly(), LaurentPoly::constant(1)},
                    {LaurentPoly::constant(1), LaurentPoly()});
}

BracketVector phi_direct(const Fraction& x, std::uint64_t step_cap) {
    AncestorTriangle tri = build_triangle(x);

    LaurentPoly inf_sum;
    for (const auto& p : descending_paths(tri, true, step_cap))
        inf_sum += neg_a4_pow(p.right_triangles);
    LaurentPoly zero_sum;
    for (const auto& p : descending_paths(tri, false, step_cap))
        zero_sum += neg_a4_pow(-p.left_triangles);

    LaurentPoly n = LaurentPoly::monomial(1, 6) * neg_a4_pow(-tri.right_edges) * inf_sum;
    LaurentPoly d = neg_a4_pow(tri.left_edges) * zero_sum;
    return {n, d};
}

LaurentPoly tr_map(const BracketVector& t) {
    // (-A^4)(A^4 + 1) = -A^8 - A^4
    return t.n * LaurentPoly::from_terms({{8, -1}, {4, -1}}) + t.d;
}

std::int64_t normalization_exponent(const ContinuedFraction& cf) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < cf.a.size(); ++i)
        e = checked::add(e, (i % 2 == 0) ? cf.a[i] : -cf.a[i]);
    if (cf.order() % 2 == 1)
        e = checked::add(e, 2);
    return e;
}

BracketVector bracket_via_phi(const Fraction& x) {
    if (x.is_infinity())
        return scale(neg_a3_pow(-2), phi_recursive(x)); // (-A^3)^-2 A^6 [inf] = [inf]
    std::int64_t e = normalization_exponent(continued_fraction_even(x));
    return scale(neg_a3_pow(-e), phi_recursive(x));
}

std::string render_triangle(const AncestorTriangle& tri) {
    std::string out = "ancestor triangle of " + tri.apex.str() + ": " +
                      std::to_string(tri.triangles.size()) + " fundamental triangles, l=" +
                      std::to_string(tri.left_edges) + " r=" + std::to_string(tri.right_edges) + "\n";
    for (const auto& t : tri.triangles)
        out += "  " + t.left.str() + " # " + t.right.str() + " = " + t.mediant.str() + "\n";
    return out;
}

} // namespace ccf
