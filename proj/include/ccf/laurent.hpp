// Exact sparse Laurent polynomials over Z in the single variable A.
//
// This is the value space for every bracket computed by the library: tangle
// brackets live in a rank-2 module over it, frieze brackets in the ring
// itself.  Coefficients are checked 64-bit integers; any overflow throws
// instead of wrapping.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccf {

/// Thrown when a coefficient computation would exceed 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

} // namespace checked

/// Integer-coefficient Laurent polynomial in A.  Immutable in practice: all
/// operations return new values, so sharing across threads is safe.
class LaurentPoly {
public:
    using Term = std::pair<int, std::int64_t>; // (exponent, coefficient)

    LaurentPoly() = default; // zero

    static LaurentPoly monomial(std::int64_t coeff, int exponent);
    static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }

    /// Builds from arbitrary (exponent, coefficient) pairs; merges duplicates
    /// and prunes zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    /// Terms in ascending exponent order, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    std::int64_t coeff(int exponent) const;
    int min_degree() const; // throws on zero polynomial
    int max_degree() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& rhs) const = default;

    /// The involution A -> A^-1 (every exponent negated).
    LaurentPoly bar() const;

    /// Substitutes A^4 = -1.  Every exponent must be a multiple of 4,
    /// otherwise std::domain_error.
    std::int64_t eval_at_a4_minus1() const;

    /// The smaller of {p, bar(p)} under a fixed total order: compare the
    /// (exponent, coefficient) sequences sorted by descending exponent,
    /// lexicographically.  Idempotent and bar-invariant.
    LaurentPoly canonical_up_to_bar() const;

    /// Renders with descending exponents and explicit signs, e.g.
    /// "-A^12+2A^8-3A^4+4-3A^-4".  Zero renders as "0".
    std::string str() const;

    /// Parses the str() grammar.  Throws std::invalid_argument on bad input.
    static LaurentPoly parse(std::string_view text);

private:
    std::vector<Term> terms_; // ascending exponents, nonzero coefficients
};

/// delta = -A^2 - A^-2, the loop value of the bracket calculus.
LaurentPoly delta();

/// (-A^3)^k for any integer k (negative allowed).
LaurentPoly neg_a3_pow(std::int64_t k);

/// (-A^4)^k for any integer k.
LaurentPoly neg_a4_pow(std::int64_t k);

} // namespace ccf
