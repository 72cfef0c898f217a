#include "ccf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "ccf/frieze.hpp"
#include "ccf/lrword.hpp"
#include "ccf/recipe.hpp"
#include "ccf/tangle.hpp"

namespace ccf {

namespace {

struct Checker {
    VerifyItem item;
    std::int64_t count = 0;
    std::string extra;

    explicit Checker(std::string name) {
        item.name = std::move(name);
        item.pass = true;
    }
    void require(bool ok, const std::string& what) {
        ++count;
        if (!ok && item.pass) {
            item.pass = false;
            item.detail = what;
        }
    }
    VerifyItem finish() {
        if (item.pass)
            item.detail = std::to_string(count) + " checks" + (extra.empty() ? "" : "; " + extra);
        return item;
    }
};

void run_item(VerifyReport& report, const std::string& name,
              const std::function<void(Checker&)>& body) {
    Checker c(name);
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.item.pass = false;
        c.item.detail = std::string("exception: ") + e.what();
    }
    VerifyItem item = c.finish();
    item.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
    report.items.push_back(item);
}

template <class Fn>
void for_each_fraction_01(std::int64_t max_q, Fn fn) {
    for (std::int64_t q = 2; q <= max_q; ++q)
        for (std::int64_t p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1)
                fn(Fraction(p, q));
}

// All irreducible p/q with 0 < p/q <= 2 and q <= max_q, plus small integers.
template <class Fn>
void for_each_positive_fraction(std::int64_t max_q, Fn fn) {
    for (std::int64_t q = 1; q <= max_q; ++q)
        for (std::int64_t p = 1; p <= 2 * q; ++p)
            if (std::gcd(p, q) == 1)
                fn(Fraction(p, q));
    for (std::int64_t n = 3; n <= 8; ++n)
        fn(Fraction(n, 1));
}

template <class Fn>
void for_each_word(int max_len, Fn fn) {
    for (int len = 0; len <= max_len; ++len)
        for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
            std::string s(static_cast<std::size_t>(len), 'L');
            for (int i = 0; i < len; ++i)
                if (mask & (1ull << i))
                    s[static_cast<std::size_t>(i)] = 'R';
            fn(LRWord(s));
        }
}

LaurentPoly random_poly(std::mt19937& rng, bool multiples_of_4) {
    std::uniform_int_distribution<int> n_terms(0, 6), exp(-12, 12);
    std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
    std::vector<LaurentPoly::Term> terms;
    int n = n_terms(rng);
    for (int i = 0; i < n; ++i)
        terms.push_back({multiples_of_4 ? 4 * exp(rng) : exp(rng), coeff(rng)});
    return LaurentPoly::from_terms(std::move(terms));
}

BracketVector random_vector(std::mt19937& rng) {
    return {random_poly(rng, false), random_poly(rng, false)};
}

const LaurentPoly kMinusT = LaurentPoly::monomial(-1, 4);
const LaurentPoly kMinusTInv = LaurentPoly::monomial(-1, -4);

// Evaluates a continued fraction that may contain interior zeros, collapsing
// [..., x, 0, y, ...] into [..., x+y, ...].
Fraction evaluate_with_zero_collapse(std::vector<std::int64_t> a) {
    for (std::size_t i = 1; i + 1 < a.size();) {
        if (a[i] == 0) {
            a[i - 1] += a[i + 1];
            a.erase(a.begin() + static_cast<std::ptrdiff_t>(i), a.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            i = 1;
        } else {
            ++i;
        }
    }
    return ContinuedFraction{std::move(a)}.evaluate();
}

} // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.pass; });
}

std::string VerifyReport::summary() const {
    std::string out;
    std::size_t passed = 0;
    for (const VerifyItem& i : items) {
        out += (i.pass ? "PASS " : "FAIL ") + i.name + " (" + i.detail + ")\n";
        passed += i.pass;
    }
    out += std::to_string(passed) + "/" + std::to_string(items.size()) + " suites passed\n";
    return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    const std::int64_t q_main = options.max_q;
    const std::int64_t q_det = std::max<std::int64_t>(2 * options.max_q, options.max_q); // 200 at defaults
    const std::int64_t q_half = options.max_q / 2;                                       // 50 at defaults
    const int len_main = options.max_len;
    const int len_pairs = options.max_len - 2; // 10 at defaults
    const int len_small = options.max_len - 4; // 8 at defaults

    run_item(report, "laurent/ring-axioms", [&](Checker& c) {
        std::mt19937 rng(0xC0FFEE);
        for (int i = 0; i < 200; ++i) {
            LaurentPoly p = random_poly(rng, false), q = random_poly(rng, false),
                        r = random_poly(rng, false);
            c.require((p + q) + r == p + (q + r), "addition associativity");
            c.require(p + q == q + p, "addition commutativity");
            c.require((p * q) * r == p * (q * r), "multiplication associativity");
            c.require(p * q == q * p, "multiplication commutativity");
            c.require(p * (q + r) == p * q + p * r, "distributivity");
        }
    });

    run_item(report, "laurent/bar-homomorphism", [&](Checker& c) {
        std::mt19937 rng(0xBA5EBA11);
        for (int i = 0; i < 200; ++i) {
            LaurentPoly p = random_poly(rng, false), q = random_poly(rng, false);
            c.require(p.bar().bar() == p, "bar involution");
            c.require((p + q).bar() == p.bar() + q.bar(), "bar additive");
            c.require((p * q).bar() == p.bar() * q.bar(), "bar multiplicative");
            c.require(p.canonical_up_to_bar() == p.bar().canonical_up_to_bar(),
                      "canonical form bar-invariant");
        }
    });

    run_item(report, "laurent/eval-homomorphism", [&](Checker& c) {
        std::mt19937 rng(0x5EED);
        for (int i = 0; i < 200; ++i) {
            LaurentPoly p = random_poly(rng, true), q = random_poly(rng, true);
            c.require((p + q).eval_at_a4_minus1() == p.eval_at_a4_minus1() + q.eval_at_a4_minus1(),
                      "eval additive");
            c.require((p * q).eval_at_a4_minus1() == p.eval_at_a4_minus1() * q.eval_at_a4_minus1(),
                      "eval multiplicative");
        }
    });

    run_item(report, "rational/parents-mediant", [&](Checker& c) {
        for_each_positive_fraction(q_main, [&](const Fraction& x) {
            auto [y, z] = parents(x);
            c.require(is_farey_neighbor(y, z), "parents of " + x.str() + " are not neighbors");
            c.require(farey_sum(y, z) == x, "parents of " + x.str() + " do not re-sum");
        });
    });

    run_item(report, "rational/mediant-minimality", [&](Checker& c) {
        std::int64_t bound = std::min<std::int64_t>(30, q_main);
        for (std::int64_t qd = 1; qd <= bound; ++qd)
            for (std::int64_t pn = 0; pn <= 2 * qd; ++pn) {
                if (std::gcd(pn, qd) != 1)
                    continue;
                // Ascending finite neighbors pn/qd < rn/sd with dens <= bound.
                for (std::int64_t sd = 1; sd <= bound; ++sd) {
                    if ((1 + pn * sd) % qd != 0)
                        continue;
                    std::int64_t rn = (1 + pn * sd) / qd;
                    Fraction med = farey_sum(Fraction(pn, qd), Fraction(rn, sd));
                    // No strictly-between fraction has a smaller denominator:
                    // for each candidate q2 there must be no integer p2 with
                    // pn/qd < p2/q2 < rn/sd.
                    for (std::int64_t q2 = 1; q2 < med.den(); ++q2) {
                        std::int64_t p2 = pn * q2 / qd + 1; // least with p2/q2 > pn/qd
                        c.require(p2 * sd >= rn * q2,
                                  "denominator of the mediant of " + Fraction(pn, qd).str() + "," +
                                      Fraction(rn, sd).str() + " not minimal");
                    }
                    // ... and none has a smaller numerator: for each p2 there
                    // must be no integer q2 with pn/qd < p2/q2 < rn/sd.
                    // (pn = 0 never reaches this loop: the mediant numerator
                    // is rn = 1 then.)
                    for (std::int64_t p2 = 1; p2 < med.num(); ++p2) {
                        std::int64_t q2 = p2 * sd / rn + 1; // least with p2/q2 < rn/sd
                        c.require(q2 * pn >= p2 * qd,
                                  "numerator of the mediant of " + Fraction(pn, qd).str() + "," +
                                      Fraction(rn, sd).str() + " not minimal");
                    }
                }
            }
    });

    run_item(report, "rational/ir-involution", [&](Checker& c) {
        for_each_fraction_01(q_main, [&](const Fraction& x) {
            Fraction ir = ir_fraction(x);
            c.require(ir.den() == x.den(), "ir changed the denominator of " + x.str());
            c.require(ir_fraction(ir) == x, "ir not an involution at " + x.str());
            // Independent route: the reversed expansion addresses s/y where
            // (p/q, r/s) are the parents of x/y.
            c.require(ir == Fraction(parents(x).second.den(), x.den()),
                      "ir disagrees with the parents route at " + x.str());
        });
    });

    run_item(report, "lrword/bijection", [&](Checker& c) {
        for_each_fraction_01(std::max<std::int64_t>(200, q_main), [&](const Fraction& x) {
            c.require(fraction_of(word_of(x)) == x, "word/fraction round trip at " + x.str());
        });
        for_each_word(std::min(len_main + 2, 14), [&](const LRWord& w) {
            c.require(word_of(fraction_of(w)) == w, "fraction/word round trip at " + w.str());
        });
    });

    run_item(report, "lrword/i-complement", [&](Checker& c) {
        for_each_word(len_main, [&](const LRWord& w) {
            Fraction x = fraction_of(w);
            c.require(fraction_of(i_word(w)) == Fraction(x.den() - x.num(), x.den()),
                      "i(w) fraction wrong at " + w.str());
        });
    });

    run_item(report, "lrword/join", [&](Checker& c) {
        for_each_fraction_01(std::min<std::int64_t>(60, q_main), [&](const Fraction& x) {
            auto [y, z] = parents(x);
            if (y.is_zero() || z == Fraction(1, 1) || z.is_infinity())
                return; // parents without words
            LRWord wy = word_of(y), wz = word_of(z);
            c.require(join(wy, wz) == word_of(x), "join wrong at " + x.str());
            c.require(fraction_of(join(wy, wz)) == farey_sum(y, z),
                      "join fraction wrong at " + x.str());
            c.require(i_word(join(wy, wz)) == join(i_word(wz), i_word(wy)),
                      "i of join wrong at " + x.str());
        });
    });

    run_item(report, "lrword/reversal-parents", [&](Checker& c) {
        for_each_word(len_main, [&](const LRWord& w) {
            Fraction x = fraction_of(w);
            auto [y, z] = parents(x);
            c.require(fraction_of(r_word(w)) == Fraction(y.den(), x.den()),
                      "r(w) fraction wrong at " + w.str());
            c.require(fraction_of(ir_word(w)) == Fraction(z.den(), x.den()),
                      "ir(w) fraction wrong at " + w.str());
            c.require(ir_word(ir_word(w)) == w, "ir not an involution at " + w.str());
            c.require(ir_word(w) == word_of(ir_fraction(x)),
                      "word and fraction reversals disagree at " + w.str());
            c.require(i_word(r_word(w)) == r_word(i_word(w)), "i and r do not commute at " + w.str());
        });
    });

    run_item(report, "lrword/letter-append", [&](Checker& c) {
        for_each_word(len_pairs, [&](const LRWord& w) {
            ContinuedFraction icf = continued_fraction_even(fraction_of(i_word(w)));
            std::vector<std::int64_t> tail(icf.a.begin() + 1, icf.a.end());
            std::vector<std::int64_t> r_exp{0, 1};
            r_exp.insert(r_exp.end(), tail.begin(), tail.end());
            c.require(fraction_of(w.appended('R')) == evaluate_with_zero_collapse(r_exp),
                      "wR expansion wrong at " + w.str());
            std::vector<std::int64_t> l_exp{0, 2};
            l_exp.push_back(tail[0] - 1);
            l_exp.insert(l_exp.end(), tail.begin() + 1, tail.end());
            c.require(fraction_of(w.appended('L')) == evaluate_with_zero_collapse(l_exp),
                      "wL expansion wrong at " + w.str());
        });
    });

    run_item(report, "lrword/length-monotonicity", [&](Checker& c) {
        std::mt19937 rng(0xD1CE);
        std::uniform_int_distribution<int> len(2, 7);
        std::uniform_int_distribution<std::int64_t> quot(1, 4);
        for (int i = 0; i < 300; ++i) {
            std::vector<std::int64_t> a{0};
            int m = len(rng);
            for (int k = 0; k < m; ++k)
                a.push_back(quot(rng));
            Fraction full = evaluate_with_zero_collapse(a);
            std::vector<std::int64_t> prefix(a.begin(), a.end() - 1);
            Fraction part = evaluate_with_zero_collapse(prefix);
            if (!(Fraction(0, 1) < part && part < Fraction(1, 1)))
                continue;
            if (!(Fraction(0, 1) < full && full < Fraction(1, 1)))
                continue;
            c.require(word_of(full).length() > word_of(part).length(),
                      "length not monotone at " + full.str());
        }
    });

    run_item(report, "tangle/coherence", [&](Checker& c) {
        std::mt19937 rng(0x7A5671E);
        for (int i = 0; i < 200; ++i) {
            BracketVector t = random_vector(rng);
            c.require(inv(inv(t)) == t, "inversion involution");
            c.require(rot(rot(t)) == t, "rotation involution");
            c.require(inv(t) == mirror(rot(t)) && inv(t) == rot(mirror(t)),
                      "inversion decomposition");
            c.require(v_map(rot(t)) == t.n + t.d * delta(), "v of rotation");
        }
    });

    run_item(report, "tangle/vertical-sum-identity", [&](Checker& c) {
        std::mt19937 rng(0x1DEA);
        for (int i = 0; i < 60; ++i) {
            BracketVector t = random_vector(rng);
            for (std::int64_t n = 0; n <= 8; ++n) {
                LaurentPoly d1n = vertical_tangle(n).d;
                BracketVector expect{LaurentPoly::monomial(1, static_cast<int>(-n)) * v_map(t) +
                                         d1n * t.n,
                                     d1n * t.d};
                c.require(tangle_sum(t, vertical_tangle(n)) == expect,
                          "vertical sum identity at n=" + std::to_string(n));
            }
        }
    });

    run_item(report, "tangle/twist-values", [&](Checker& c) {
        for (std::int64_t n = 0; n <= 8; ++n) {
            c.require(v_map(integer_tangle(n)) == neg_a3_pow(-n),
                      "v of integer twist at n=" + std::to_string(n));
            c.require(integer_tangle(n) == rot(mirror(vertical_tangle(n))),
                      "integer and vertical twists not related by inversion at n=" +
                          std::to_string(n));
        }
        for (std::int64_t m = 1; m <= 6; ++m)
            for (std::int64_t n = 1; n <= 6; ++n) {
                BracketVector lhs = tangle_sum(integer_tangle(m), vertical_tangle(n));
                BracketVector rhs{LaurentPoly::monomial(1, static_cast<int>(-n)) * neg_a3_pow(-m) +
                                      vertical_tangle(n).d * integer_tangle(m).n,
                                  vertical_tangle(n).d * integer_tangle(m).d};
                c.require(lhs == rhs, "m + 1/n bracket wrong at m=" + std::to_string(m) +
                                          ", n=" + std::to_string(n));
            }
    });

    run_item(report, "phi/linearity", [&](Checker& c) {
        const LaurentPoly cy = options.inject_phi_sign_bug ? LaurentPoly::monomial(1, 4) : kMinusT;
        for_each_positive_fraction(q_main, [&](const Fraction& x) {
            auto [y, z] = parents(x);
            c.require(v_map(phi_recursive(x)) ==
                          cy * v_map(phi_recursive(y)) + kMinusTInv * v_map(phi_recursive(z)),
                      "recursion linearity fails at " + x.str());
        });
    });

    run_item(report, "phi/direct-equals-recursive", [&](Checker& c) {
        for_each_positive_fraction(q_main, [&](const Fraction& x) {
            c.require(phi_direct(x, options.path_cap) == phi_recursive(x),
                      "direct path sum disagrees with the recursion at " + x.str());
        });
    });

    run_item(report, "phi/tilde-trace", [&](Checker& c) {
        c.require(phi_tilde(Fraction::infinity()) ==
                      BracketVector{LaurentPoly::constant(1), LaurentPoly()},
                  "phi~ at infinity");
        c.require(phi_tilde(Fraction(0, 1)) ==
                      BracketVector{LaurentPoly(), LaurentPoly::constant(1)},
                  "phi~ at zero");
        for_each_positive_fraction(q_main, [&](const Fraction& x) {
            c.require(v_map(phi_recursive(x)) == tr_map(phi_tilde(x)),
                      "trace identity fails at " + x.str());
        });
    });

    run_item(report, "phi/normalized-bracket-bridge", [&](Checker& c) {
        for_each_positive_fraction(q_half, [&](const Fraction& x) {
            c.require(bracket_via_phi(x) == tangle_of_fraction(x),
                      "normalized phi disagrees with the tangle bracket at " + x.str());
        });
        c.require(bracket_via_phi(Fraction(0, 1)) == tangle_of_fraction(Fraction(0, 1)),
                  "bridge at zero");
        c.require(bracket_via_phi(Fraction::infinity()) == tangle_of_fraction(Fraction::infinity()),
                  "bridge at infinity");
    });

    run_item(report, "phi/stepping-stone", [&](Checker& c) {
        for (std::int64_t l = 1; l <= 5; ++l)
            for (std::int64_t m = 1; m <= 5; ++m) {
                ContinuedFraction lm{{l, m}};
                c.require(phi_recursive(lm.evaluate()) ==
                              scale(neg_a3_pow(l - m + 2), tangle_from_expansion(lm)),
                          "odd-order normalization fails at [l;m]");
                for (std::int64_t n = 2; n <= 5; ++n) {
                    ContinuedFraction lmn{{l, m, n}};
                    ContinuedFraction lmn1{{l, m, n - 1}};
                    c.require(phi_recursive(lmn.evaluate()) ==
                                  add(scale(kMinusT, phi_recursive(lmn1.evaluate())),
                                      scale(kMinusTInv, phi_recursive(lm.evaluate()))),
                              "stepping-stone recursion fails at [l;m,n]");
                    c.require(phi_recursive(lmn.evaluate()) ==
                                  scale(neg_a3_pow(l - m + n), tangle_from_expansion(lmn)),
                              "even-order normalization fails at [l;m,n]");
                }
            }
    });

    run_item(report, "frieze/degree-bounds-and-signs", [&](Checker& c) {
        for_each_word(len_main, [&](const LRWord& w) {
            LaurentPoly g = frieze_bracket(w);
            c.require(g.max_degree() == 4 * (static_cast<int>(w.count_r()) + 1),
                      "max degree wrong at " + w.str());
            c.require(g.min_degree() == -4 * (static_cast<int>(w.count_l()) + 1),
                      "min degree wrong at " + w.str());
            for (auto [e, coeff] : g.terms()) {
                bool sign_ok = e % 4 == 0 && ((e / 4) % 2 == 0 ? coeff > 0 : coeff < 0);
                c.require(sign_ok, "coefficient sign wrong at " + w.str() + ", exponent " +
                                       std::to_string(e));
            }
        });
    });

    run_item(report, "frieze/bar-ir", [&](Checker& c) {
        for_each_fraction_01(q_main, [&](const Fraction& x) {
            c.require(v_map(phi_recursive(x)).bar() == v_map(phi_recursive(ir_fraction(x))),
                      "bar/ir symmetry fails at " + x.str());
        });
    });

    run_item(report, "frieze/complement", [&](Checker& c) {
        for_each_fraction_01(q_main, [&](const Fraction& x) {
            c.require(v_map(phi_recursive(x)).bar() ==
                          v_map(phi_recursive(Fraction(x.den() - x.num(), x.den()))),
                      "complement symmetry fails at " + x.str());
        });
    });

    run_item(report, "frieze/vertical-reflection", [&](Checker& c) {
        for_each_word(len_main, [&](const LRWord& w) {
            LaurentPoly canon = frieze_bracket(w).canonical_up_to_bar();
            c.require(frieze_bracket(i_word(w)).canonical_up_to_bar() == canon,
                      "mirror bracket not bar-equal at " + w.str());
            c.require(frieze_bracket(ir_word(w)).canonical_up_to_bar() == canon,
                      "reflected bracket not bar-equal at " + w.str());
            c.require(frieze_bracket(r_word(w)) == frieze_bracket(w),
                      "reversal changed the bracket at " + w.str());
        });
        for_each_word(len_small, [&](const LRWord& w) {
            Frieze f = Frieze::from_word(w);
            Frieze r = vertical_reflection(f);
            // Reading the flipped zigzag reverses and swaps the letters, so
            // the reflection is the frieze of ir(w); by the glide symmetry
            // that is the original pattern again.  The letter-swapped word
            // i(w) lives on the left-right mirror instead.
            c.require(equal_up_to_translation(r, Frieze::from_word(ir_word(w))),
                      "vertical reflection is not the reversed-swapped frieze at " + w.str());
            c.require(equal_up_to_translation(r, f),
                      "vertical reflection left the translation class at " + w.str());
            c.require(equal_up_to_glide_reflection(f, f),
                      "glide symmetry missing at " + w.str());
            c.require(equal_up_to_translation(vertical_reflection(r), f),
                      "double reflection changed the frieze at " + w.str());
            c.require(equal_up_to_translation(horizontal_mirror(f), Frieze::from_word(i_word(w))),
                      "mirror is not the letter-swapped frieze at " + w.str());
        });
    });

    run_item(report, "frieze/recursive-bracket", [&](Checker& c) {
        for_each_word(len_main, [&](const LRWord& w) {
            c.require(frieze_bracket_recursive(w) == frieze_bracket(w),
                      "word recursion disagrees with v(phi) at " + w.str());
        });
    });

    run_item(report, "frieze/qr-identity", [&](Checker& c) {
        const LaurentPoly loop = LaurentPoly::from_terms({{4, -1}, {-4, -1}}); // -t - t^-1
        for_each_fraction_01(q_main, [&](const Fraction& x) {
            auto [qp, rp] = qr_polynomials(x);
            c.require(loop * qp + rp == v_map(phi_recursive(x)),
                      "Q/R decomposition fails at " + x.str());
        });
    });

    run_item(report, "frieze/qr-case-split", [&](Checker& c) {
        for_each_fraction_01(q_det, [&](const Fraction& x) {
            auto [q, r] = qr_at_minus1(x); // throws if the case split fails
            c.require(2 * q + r == x.den(), "Q/R denominator wrong at " + x.str());
        });
    });

    run_item(report, "frieze/determinant", [&](Checker& c) {
        for (std::int64_t q = 1; q <= q_det; ++q)
            for (std::int64_t p = 1; p <= q; ++p)
                if (std::gcd(p, q) == 1)
                    c.require(determinant_eval(Fraction(p, q)) == q,
                              "determinant wrong at " + Fraction(p, q).str());
    });

    run_item(report, "frieze/wellformed", [&](Checker& c) {
        for_each_word(len_small, [&](const LRWord& w) {
            Frieze f = Frieze::from_word(w);
            f.validate(); // diamond rule, positivity, periodicity
            c.require(f.interior_height() == static_cast<int>(w.length()) + 1,
                      "interior height wrong at " + w.str());
            c.require((static_cast<int>(w.length()) + 4) % f.period() == 0,
                      "period does not divide the polygon period at " + w.str());
            c.require(equal_up_to_translation(Frieze::from_word(reconstruct_word(f)), f),
                      "reconstructed word regenerates a different frieze at " + w.str());
        });
    });

    run_item(report, "frieze/non-zigzag-reject", [&](Checker& c) {
        Frieze f = Frieze::from_quiddity({1, 4, 1, 2, 4, 1, 2, 3});
        f.validate();
        bool rejected = false;
        try {
            reconstruct_word(f);
        } catch (const NotZigzagType&) {
            rejected = true;
        }
        c.require(rejected, "non-zigzag frieze was not rejected");
        Frieze zig = Frieze::from_quiddity({2, 4, 2, 2, 1, 4, 2, 3, 1});
        c.require(equal_up_to_translation(zig, Frieze::from_word(LRWord::parse("L^2R^2L"))),
                  "quiddity round trip failed for the zigzag example");
    });

    run_item(report, "frieze/completeness", [&](Checker& c) {
        struct Entry {
            int inv_id;
            int key_id;
            int mirror_key_id;
        };
        std::vector<Entry> entries;
        std::map<std::vector<Fraction>, int> inv_ids;
        std::map<std::pair<int, std::vector<std::int64_t>>, int> key_ids;
        for_each_word(len_pairs, [&](const LRWord& w) {
            CcfInvariant inv = complete_invariant(w); // cross-checks its two routes
            Frieze f = Frieze::from_word(w);
            Frieze m = horizontal_mirror(f);
            auto inv_id = inv_ids.emplace(inv.fractions, static_cast<int>(inv_ids.size()));
            auto key_id = key_ids.emplace(
                std::pair{f.interior_height(), f.canonical_quiddity()},
                static_cast<int>(key_ids.size()));
            auto mirror_id = key_ids.emplace(
                std::pair{m.interior_height(), m.canonical_quiddity()},
                static_cast<int>(key_ids.size()));
            entries.push_back({inv_id.first->second, key_id.first->second,
                               mirror_id.first->second});
        });
        // The invariant cannot see the left-right mirror (it is closed under
        // the letter swap), so the empirical equality relation is
        // translation-or-mirror; the counts below record how the pairs
        // split.  Glide reflection never separates patterns.
        std::int64_t equal_pairs = 0, translation_pairs = 0, mirror_only_pairs = 0;
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                bool inv_eq = entries[i].inv_id == entries[j].inv_id;
                bool trans_eq = entries[i].key_id == entries[j].key_id;
                bool mirror_eq = entries[i].key_id == entries[j].mirror_key_id;
                c.require(inv_eq == (trans_eq || mirror_eq),
                          "invariant and frieze equality disagree");
                if (inv_eq) {
                    ++equal_pairs;
                    translation_pairs += trans_eq;
                    mirror_only_pairs += (!trans_eq && mirror_eq);
                }
            }
        c.extra = "observed relation: translation-or-mirror (" +
                  std::to_string(translation_pairs) + " translation, " +
                  std::to_string(mirror_only_pairs) + " mirror-only of " +
                  std::to_string(equal_pairs) + " equal-invariant pairs)";
    });

    run_item(report, "recipe/three-pipelines", [&](Checker& c) {
        const LaurentPoly loop = LaurentPoly::from_terms({{4, -1}, {-4, -1}});
        for_each_fraction_01(q_half, [&](const Fraction& x) {
            LaurentPoly via_phi = v_map(phi_recursive(x));
            auto [qp, rp] = qr_polynomials(x);
            c.require(loop * qp + rp == via_phi, "Q/R pipeline disagrees at " + x.str());
            Frieze f = Frieze::from_word(word_of(x));
            c.require(bracket_via_paths(f, options.path_cap) == via_phi,
                      "fold pipeline disagrees at " + x.str());
            c.require(denominator_link_bracket(x, options.path_cap) ==
                          denominator_closure(tangle_of_fraction(x)),
                      "denominator link disagrees with the tangle closure at " + x.str());
        });
    });

    run_item(report, "recipe/numerator-split", [&](Checker& c) {
        for_each_fraction_01(q_half, [&](const Fraction& x) {
            Frieze f = Frieze::from_word(word_of(x));
            LaurentPoly whole = bracket_via_paths(f, options.path_cap);
            LaurentPoly num = bracket_num(f, options.path_cap);
            c.require(num.eval_at_a4_minus1() == x.num(), "numerator eval wrong at " + x.str());
            c.require(whole.eval_at_a4_minus1() - num.eval_at_a4_minus1() == x.den() - x.num(),
                      "complement eval wrong at " + x.str());
        });
    });

    run_item(report, "recipe/fold-structure", [&](Checker& c) {
        for_each_word(len_pairs, [&](const LRWord& w) {
            Frieze f = Frieze::from_word(w);
            FoldedTriangle fold = fold_triangle(f); // checks flanks and child sums
            c.require(fold.apex_value == f.max_entry(), "apex is not the maximum at " + w.str());
            std::int64_t paths = 0, floor_paths = 0;
            for (const SignedPath& p : signed_paths(fold, options.path_cap)) {
                ++paths;
                floor_paths += p.to_floor;
                c.require(std::is_sorted(p.values.rbegin(), p.values.rend()) &&
                              std::adjacent_find(p.values.begin(), p.values.end()) ==
                                  p.values.end(),
                          "path values not strictly decreasing at " + w.str());
                c.require(p.values.back() == 1, "path does not end at 1 at " + w.str());
            }
            Fraction x = fraction_of(w);
            c.require(paths == x.den(), "path count is not the denominator at " + w.str());
            c.require(floor_paths == x.num(), "floor path count is not the numerator at " + w.str());
        });
    });

    run_item(report, "recipe/reduce-chains", [&](Checker& c) {
        for_each_word(len_pairs, [&](const LRWord& w) {
            auto chain = reduce_chain(w); // validates each step against parents()
            c.require(chain.size() == w.length(), "chain length wrong at " + w.str());
            if (!w.empty()) {
                c.require(chain.back().first == LRWord() && chain.back().second == Fraction(1, 2),
                          "chain does not end at the empty word at " + w.str());
            }
        });
    });

    return report;
}

} // namespace ccf
