// Bracket vectors of rational tangles: <T> = n_T [inf] + d_T [0] in the free
// rank-2 module over the Laurent ring.  Twist-block constructors, the sum
// and product operations, mirror/rotation/inversion, the v specialization,
// closures, and the structural bracket of T(p/q).

#pragma once

#include "ccf/laurent.hpp"
#include "ccf/rational.hpp"

namespace ccf {

/// The pair (n, d) with <T> = n [inf] + d [0].
struct BracketVector {
    LaurentPoly n; // coefficient of [inf]
    LaurentPoly d; // coefficient of [0]

    bool operator==(const BracketVector& rhs) const = default;
    std::string str() const { return "(" + n.str() + ") [inf] + (" + d.str() + ") [0]"; }
};

/// Scales both components.
BracketVector scale(const LaurentPoly& c, const BracketVector& t);
BracketVector add(const BracketVector& t, const BracketVector& u);

/// Bracket of the horizontal twist block [n], n >= 0.  [0] is the 0-tangle.
BracketVector integer_tangle(std::int64_t n);

/// Bracket of the vertical twist block 1/[n], n >= 0.  1/[0] is [inf].
BracketVector vertical_tangle(std::int64_t n);

/// Tangle sum: d = d_t d_u, n = n_t d_u + d_t n_u + n_t n_u delta.
BracketVector tangle_sum(const BracketVector& t, const BracketVector& u);

/// Tangle product: n = n_t n_u, d = d_t n_u + n_t d_u + d_t d_u delta.
BracketVector tangle_product(const BracketVector& t, const BracketVector& u);

BracketVector mirror(const BracketVector& t); // bar both components
BracketVector rot(const BracketVector& t);    // swap components
BracketVector inv(const BracketVector& t);    // swap and bar

/// v(a [inf] + b [0]) = a delta + b.
LaurentPoly v_map(const BracketVector& t);

LaurentPoly numerator_closure(const BracketVector& t);   // v(rot(t))
LaurentPoly denominator_closure(const BracketVector& t); // v(t)

/// Assembles the tangle of an expansion [a0; a1, ..., an] from the innermost
/// block outward: odd positions are vertical blocks joined by the product,
/// even positions horizontal blocks joined by the sum.
BracketVector tangle_from_expansion(const ContinuedFraction& cf);

/// Structural bracket of the standard rational tangle of x >= 0 (inf allowed,
/// giving [inf]), via the even-length expansion.
BracketVector tangle_of_fraction(const Fraction& x);

} // namespace ccf
