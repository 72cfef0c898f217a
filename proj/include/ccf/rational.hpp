// Irreducible fractions with the Farey/Stern-Brocot conventions used
// throughout: denominators are never negative, and 1/0 stands for infinity.
// Also the even-length continued fraction expansion and its reversal.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccf/laurent.hpp" // checked arithmetic helpers

namespace ccf {

/// Irreducible p/q with q >= 0; q == 0 encodes infinity (then p == 1).
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    /// Normalizes sign and reduces.  0/0 is rejected.
    Fraction(std::int64_t p, std::int64_t q);

    static Fraction infinity() { return Fraction(1, 0); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_infinity() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0 && den_ != 0; }

    bool operator==(const Fraction& rhs) const = default;
    /// Numeric order; infinity compares greater than every finite value.
    bool operator<(const Fraction& rhs) const;

    std::string str() const; // "p/q", or "inf" for 1/0
    static Fraction parse(std::string_view text);

private:
    std::int64_t num_;
    std::int64_t den_;
};

struct FractionHash {
    std::size_t operator()(const Fraction& f) const {
        std::size_t h = std::hash<std::int64_t>{}(f.num());
        return h ^ (std::hash<std::int64_t>{}(f.den()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
};

/// |p_x q_y - q_x p_y| == 1.
bool is_farey_neighbor(const Fraction& x, const Fraction& y);

/// Mediant (p_x+p_y)/(q_x+q_y) of an ascending Farey-neighbor pair.
/// Rejects pairs that are not ascending neighbors.
Fraction farey_sum(const Fraction& x, const Fraction& y);

/// The unique ascending Farey-neighbor pair (y, z) with y # z = x, obtained
/// by the Stern-Brocot descent from (0/1, 1/0).  Requires x > 0, x != inf.
std::pair<Fraction, Fraction> parents(const Fraction& x);

/// Expansion [a0; a1, ..., an] with n even, a0 >= 0 and a1..an >= 1.
struct ContinuedFraction {
    std::vector<std::int64_t> a;

    std::size_t order() const { return a.size() - 1; } // the n of [a0; a1..an]
    Fraction evaluate() const;
    std::string str() const; // "[0;2,1,2,2]"
    bool operator==(const ContinuedFraction& rhs) const = default;
};

/// Deterministic even-length expansion of x >= 0 (finite): run the Euclidean
/// expansion; if its order n is odd, split a_n >= 2 into (a_n - 1, 1), or
/// merge a trailing 1 into a_{n-1}.
ContinuedFraction continued_fraction_even(const Fraction& x);

/// The fraction whose even-length expansion is the reverse of x's.
/// Requires x in (0,1).
Fraction ir_fraction(const Fraction& x);

} // namespace ccf
