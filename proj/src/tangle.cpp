#include "ccf/tangle.hpp"

#include <stdexcept>

namespace ccf {

BracketVector scale(const LaurentPoly& c, const BracketVector& t) {
    return {c * t.n, c * t.d};
}

BracketVector add(const BracketVector& t, const BracketVector& u) {
    return {t.n + u.n, t.d + u.d};
}

BracketVector integer_tangle(std::int64_t n) {
    if (n < 0)
        throw std::domain_error("integer_tangle takes n >= 0; negative twists go through mirror()");
    // <[n]> = A^(n-2) sum_{k=0}^{n-1} (-A^-4)^k [inf] + A^n [0]
    LaurentPoly geom;
    for (std::int64_t k = 0; k < n; ++k)
        geom += neg_a4_pow(-k);
    return {LaurentPoly::monomial(1, static_cast<int>(n - 2)) * geom,
            LaurentPoly::monomial(1, static_cast<int>(n))};
}

BracketVector vertical_tangle(std::int64_t n) {
    if (n < 0)
        throw std::domain_error("vertical_tangle takes n >= 0; negative twists go through mirror()");
    // <1/[n]> = A^-n [inf] + A^(-n+2) sum_{k=0}^{n-1} (-A^4)^k [0]
    LaurentPoly geom;
    for (std::int64_t k = 0; k < n; ++k)
        geom += neg_a4_pow(k);
    return {LaurentPoly::monomial(1, static_cast<int>(-n)),
            LaurentPoly::monomial(1, static_cast<int>(-n + 2)) * geom};
}

BracketVector tangle_sum(const BracketVector& t, const BracketVector& u) {
    return {t.n * u.d + t.d * u.n + t.n * u.n * delta(), t.d * u.d};
}

BracketVector tangle_product(const BracketVector& t, const BracketVector& u) {
    return {t.n * u.n, t.d * u.n + t.n * u.d + t.d * u.d * delta()};
}

BracketVector mirror(const BracketVector& t) {
    return {t.n.bar(), t.d.bar()};
}

BracketVector rot(const BracketVector& t) {
    return {t.d, t.n};
}

BracketVector inv(const BracketVector& t) {
    return {t.d.bar(), t.n.bar()};
}

LaurentPoly v_map(const BracketVector& t) {
    return t.n * delta() + t.d;
}

LaurentPoly numerator_closure(const BracketVector& t) {
    return v_map(rot(t));
}

LaurentPoly denominator_closure(const BracketVector& t) {
    return v_map(t);
}

BracketVector tangle_from_expansion(const ContinuedFraction& cf) {
    if (cf.a.empty())
        throw std::domain_error("empty expansion");
    std::size_t n = cf.order();
    BracketVector t = (n % 2 == 1) ? vertical_tangle(cf.a[n]) : integer_tangle(cf.a[n]);
    for (std::size_t k = n; k-- > 0;) {
        if (k % 2 == 1)
            t = tangle_product(t, vertical_tangle(cf.a[k]));
        else
            t = tangle_sum(t, integer_tangle(cf.a[k]));
    }
    return t;
}

BracketVector tangle_of_fraction(const Fraction& x) {
    if (x.is_infinity())
        return {LaurentPoly::constant(1), LaurentPoly()};
    if (x.num() < 0)
        throw std::domain_error("tangle_of_fraction takes x >= 0, got " + x.str());
    return tangle_from_expansion(continued_fraction_even(x));
}

} // namespace ccf
