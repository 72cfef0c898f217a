#include "ccf/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace ccf {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
    LaurentPoly p;
    if (coeff != 0)
        p.terms_.push_back({exponent, coeff});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::map<int, std::int64_t> acc;
    for (const auto& [e, c] : terms)
        acc[e] = checked::add(acc.count(e) ? acc[e] : 0, c);
    LaurentPoly p;
    for (const auto& [e, c] : acc)
        if (c != 0)
            p.terms_.push_back({e, c});
    return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == exponent) ? it->second : 0;
}

int LaurentPoly::min_degree() const {
    if (terms_.empty())
        throw std::domain_error("degree of zero polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty())
        throw std::domain_error("degree of zero polynomial");
    return terms_.back().first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& [e, c] : p.terms_)
        c = checked::sub(0, c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    // Merge two sorted term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.cbegin();
    auto b = rhs.terms_.cbegin();
    while (a != terms_.cend() || b != rhs.terms_.cend()) {
        if (b == rhs.terms_.cend() || (a != terms_.cend() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.cend() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            std::int64_t c = checked::add(a->second, b->second);
            if (c != 0)
                out.push_back({a->first, c});
            ++a, ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    return *this += -rhs;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<int, std::int64_t> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto& slot = acc[ea + eb];
            slot = checked::add(slot, checked::mul(ca, cb));
        }
    LaurentPoly p;
    for (const auto& [e, c] : acc)
        if (c != 0)
            p.terms_.push_back({e, c});
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        p.terms_.push_back({-it->first, it->second});
    return p;
}

std::int64_t LaurentPoly::eval_at_a4_minus1() const {
    std::int64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e % 4 != 0)
            throw std::domain_error("exponent " + std::to_string(e) +
                                    " is not a multiple of 4; cannot substitute A^4 = -1");
        int k = e / 4;
        acc = checked::add(acc, (k % 2 == 0) ? c : checked::sub(0, c));
    }
    return acc;
}

LaurentPoly LaurentPoly::canonical_up_to_bar() const {
    LaurentPoly b = bar();
    // Descending-exponent term sequences, lexicographic.
    auto less = [](const LaurentPoly& x, const LaurentPoly& y) {
        auto xi = x.terms_.rbegin(), yi = y.terms_.rbegin();
        for (; xi != x.terms_.rend() && yi != y.terms_.rend(); ++xi, ++yi) {
            if (*xi != *yi)
                return *xi < *yi;
        }
        return x.terms_.size() < y.terms_.size();
    };
    return less(b, *this) ? b : *this;
}

std::string LaurentPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (c > 0 && !out.empty())
            out += '+';
        if (e == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c == -1)
            out += '-';
        else if (c != 1)
            out += std::to_string(c);
        out += 'A';
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text) {
    throw std::invalid_argument("cannot parse Laurent polynomial: \"" + std::string(text) + "\"");
}

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::vector<Term> terms;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto read_int = [&](std::int64_t& value) -> bool {
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
            ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == digits) {
            i = start;
            return false;
        }
        auto res = std::from_chars(text.data() + start, text.data() + i, value);
        if (res.ec != std::errc{})
            parse_fail(text);
        return true;
    };

    skip_space();
    if (i == text.size())
        parse_fail(text);
    bool first = true;
    while (true) {
        skip_space();
        if (i == text.size())
            break;
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_space();
        } else if (!first) {
            parse_fail(text);
        }
        std::int64_t mag = 1;
        bool have_coeff = read_int(mag);
        if (have_coeff && mag < 0)
            parse_fail(text); // sign already consumed separately
        bool have_var = i < text.size() && text[i] == 'A';
        if (!have_coeff && !have_var)
            parse_fail(text);
        std::int64_t exponent = 0;
        if (have_var) {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (!read_int(exponent))
                    parse_fail(text);
            }
        }
        if (exponent > 1'000'000 || exponent < -1'000'000)
            parse_fail(text);
        terms.push_back({static_cast<int>(exponent), checked::mul(sign, mag)});
        first = false;
    }
    if (terms.empty())
        parse_fail(text);
    // Accept a lone "0".
    if (terms.size() == 1 && terms[0].second == 0)
        return LaurentPoly();
    return from_terms(std::move(terms));
}

LaurentPoly delta() {
    return LaurentPoly::from_terms({{2, -1}, {-2, -1}});
}

LaurentPoly neg_a3_pow(std::int64_t k) {
    std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    return LaurentPoly::monomial(sign, static_cast<int>(3 * k));
}

LaurentPoly neg_a4_pow(std::int64_t k) {
    std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    return LaurentPoly::monomial(sign, static_cast<int>(4 * k));
}

} // namespace ccf
