// Ancestor triangles of positive rationals and the phi calculus on them.
//
// Tracing parents from a rational down to {0/1, 1/0} triangulates a disk
// into a strip of fundamental triangles.  phi is computed two independent
// ways: a memoized recursion over parents, and a direct sum over descending
// paths weighted by how many fundamental triangles lie on each side.  The
// two routes must agree; (-A^3)-normalizing phi gives the structural tangle
// bracket.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccf/laurent.hpp"
#include "ccf/rational.hpp"
#include "ccf/tangle.hpp"

namespace ccf {

struct FundamentalTriangle {
    Fraction left;    // smaller parent
    Fraction right;   // larger parent
    Fraction mediant; // left # right
};

struct AncestorTriangle {
    Fraction apex; // the rational the triangle was built for
    std::vector<FundamentalTriangle> triangles; // creation (strip) order; last has mediant == apex
    std::vector<Fraction> vertices;             // 0/1, 1/0, then mediants in creation order
    int left_edges = 0;  // edges on the left oblique side, l(apex)
    int right_edges = 0; // edges on the right oblique side, r(apex)
};

/// Builds the ancestor triangle of x > 0 by repeated parents().
AncestorTriangle build_triangle(const Fraction& x);

struct DescendingPath {
    std::vector<Fraction> vertices; // from 0/1 or 1/0 down to the apex
    int right_triangles = 0;        // w_R: fundamental triangles strictly right of the path
    int left_triangles = 0;         // w_L
};

/// Thrown when path enumeration exceeds its step cap.
class PathCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultPathCap = 10'000'000;

/// All descending paths from 1/0 (from_infinity) or 0/1 to the apex.
/// Each step goes from a parent to its mediant through a fundamental
/// triangle; a path splits the strip, and w_R/w_L count the two sides.
std::vector<DescendingPath> descending_paths(const AncestorTriangle& tri, bool from_infinity,
                                             std::uint64_t step_cap = kDefaultPathCap);

/// phi by the parents recursion phi(x) = -A^4 phi(y) - A^-4 phi(z), with
/// phi(0) = [0] and phi(inf) = A^6 [inf].  Memoized per thread.
BracketVector phi_recursive(const Fraction& x);

/// phi assembled directly from the descending-path sums; must equal
/// phi_recursive.  Requires x > 0 finite.
BracketVector phi_direct(const Fraction& x, std::uint64_t step_cap = kDefaultPathCap);

/// Same recursion started from phi~(inf) = [inf], phi~(0) = [0].
BracketVector phi_tilde(const Fraction& x);

/// tr(a [inf] + b [0]) = a (-A^4)(A^4 + 1) + b; closes phi~ to v(phi).
LaurentPoly tr_map(const BracketVector& t);

/// Alternating sum a0 - a1 + a2 - ... + an of an even-order expansion; for
/// odd order the value gains the +2 shift.
std::int64_t normalization_exponent(const ContinuedFraction& cf);

/// <T(x)> = (-A^3)^(-e) phi(x) where e is the normalization exponent of the
/// even expansion of x; equals tangle_of_fraction(x) component-wise.
BracketVector bracket_via_phi(const Fraction& x);

/// One line per fundamental triangle, strip order, plus the side counts.
std::string render_triangle(const AncestorTriangle& tri);

} // namespace ccf
