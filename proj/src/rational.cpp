#include "ccf/rational.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ccf {

Fraction::Fraction(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0)
        throw std::domain_error("0/0 is not a fraction");
    if (q < 0) {
        p = checked::sub(0, p);
        q = checked::sub(0, q);
    }
    if (q == 0) {
        num_ = 1; // infinity, stored as 1/0 regardless of input numerator sign
        den_ = 0;
        return;
    }
    std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    num_ = p / g;
    den_ = q / g;
}

bool Fraction::operator<(const Fraction& rhs) const {
    if (is_infinity())
        return false;
    if (rhs.is_infinity())
        return true;
    // Denominators are nonnegative, so cross-multiplication preserves order.
    return checked::mul(num_, rhs.den_) < checked::mul(rhs.num_, den_);
}

std::string Fraction::str() const {
    if (is_infinity())
        return "inf";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction Fraction::parse(std::string_view text) {
    if (text == "inf")
        return infinity();
    auto slash = text.find('/');
    std::int64_t p = 0, q = 1;
    auto read = [&](std::string_view s, std::int64_t& out) {
        auto res = std::from_chars(s.data(), s.data() + s.size(), out);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw std::invalid_argument("cannot parse fraction: \"" + std::string(text) + "\"");
    };
    if (slash == std::string_view::npos) {
        read(text, p);
    } else {
        read(text.substr(0, slash), p);
        read(text.substr(slash + 1), q);
    }
    if (p == 0 && q == 0)
        throw std::invalid_argument("cannot parse fraction: \"" + std::string(text) + "\"");
    return Fraction(p, q);
}

bool is_farey_neighbor(const Fraction& x, const Fraction& y) {
    std::int64_t det = checked::sub(checked::mul(x.num(), y.den()), checked::mul(x.den(), y.num()));
    return det == 1 || det == -1;
}

Fraction farey_sum(const Fraction& x, const Fraction& y) {
    std::int64_t det = checked::sub(checked::mul(x.den(), y.num()), checked::mul(x.num(), y.den()));
    if (det != 1)
        throw std::domain_error("farey_sum requires ascending Farey neighbors, got " + x.str() +
                                " and " + y.str());
    return Fraction(checked::add(x.num(), y.num()), checked::add(x.den(), y.den()));
}

std::pair<Fraction, Fraction> parents(const Fraction& x) {
    if (x.is_infinity() || x.is_zero() || x.num() < 0)
        throw std::domain_error("parents are defined for positive finite rationals, got " + x.str());
    Fraction lo(0, 1), hi = Fraction::infinity();
    while (true) {
        Fraction med(checked::add(lo.num(), hi.num()), checked::add(lo.den(), hi.den()));
        if (med == x)
            return {lo, hi};
        if (x < med)
            hi = med;
        else
            lo = med;
    }
}

Fraction ContinuedFraction::evaluate() const {
    if (a.empty())
        throw std::domain_error("empty continued fraction");
    Fraction value(a.back(), 1);
    for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
        // value <- a_k + 1/value
        if (value.is_zero())
            throw std::domain_error("continued fraction with zero partial quotient tail");
        Fraction inv(value.den(), value.num());
        value = Fraction(checked::add(checked::mul(*it, inv.den()), inv.num()), inv.den());
    }
    return value;
}

std::string ContinuedFraction::str() const {
    std::string out = "[" + std::to_string(a[0]);
    for (std::size_t i = 1; i < a.size(); ++i)
        out += (i == 1 ? ";" : ",") + std::to_string(a[i]);
    return out + "]";
}

ContinuedFraction continued_fraction_even(const Fraction& x) {
    if (x.is_infinity() || x.num() < 0)
        throw std::domain_error("continued fraction needs a finite x >= 0, got " + x.str());
    ContinuedFraction cf;
    std::int64_t p = x.num(), q = x.den();
    while (true) {
        cf.a.push_back(p / q);
        std::int64_t r = p % q;
        if (r == 0)
            break;
        p = q;
        q = r;
    }
    if (cf.order() % 2 == 1) {
        if (cf.a.back() >= 2) {
            cf.a.back() -= 1;
            cf.a.push_back(1);
        } else {
            cf.a.pop_back();
            cf.a.back() += 1;
        }
    }
    return cf;
}

Fraction ir_fraction(const Fraction& x) {
    if (!(Fraction(0, 1) < x && x < Fraction(1, 1)))
        throw std::domain_error("ir is defined on (0,1), got " + x.str());
    ContinuedFraction cf = continued_fraction_even(x);
    ContinuedFraction rev;
    rev.a.push_back(0);
    rev.a.insert(rev.a.end(), cf.a.rbegin(), cf.a.rend() - 1);
    return rev.evaluate();
}

} // namespace ccf
