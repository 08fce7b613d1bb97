#include "seqcert/log_behavior.hpp"

#include "seqcert/errors.hpp"

namespace seqcert {

namespace {

// Unnormalized fraction accumulator: comparisons cross-multiply integers, no
// division or gcd in the hot loop.
struct Frac {
    BigInt num{1};
    BigInt den{1};
    void mul(const BigRat& r) {
        num *= r.numerator();
        den *= r.denominator();
    }
    void mul_pow(const BigRat& r, unsigned long e) {
        BigInt t;
        mpz_pow_ui(t.get_mpz_t(), r.numerator().get_mpz_t(), e);
        num *= t;
        mpz_pow_ui(t.get_mpz_t(), r.denominator().get_mpz_t(), e);
        den *= t;
    }
};

// sign of (a - b), both denominators positive
int cmp_frac(const Frac& a, const Frac& b) {
    BigInt l = a.num * b.den;
    BigInt r = b.num * a.den;
    return cmp(l, r);
}

void require_positive(const std::vector<BigRat>& terms, long long first_index,
                      std::size_t from = 0) {
    for (std::size_t i = from; i < terms.size(); ++i)
        if (!terms[i].is_positive())
            throw NonPositiveTerm(first_index + static_cast<long long>(i));
}

CheckOutcome check_three_term(const std::vector<BigRat>& terms, long long first_index,
                              bool convex, bool strict) {
    if (terms.size() < 3) throw TooFewTerms("log-behavior check needs at least 3 terms");
    require_positive(terms, first_index);
    CheckOutcome out;
    out.strict = strict;
    out.checked_range = {first_index + 1, first_index + static_cast<long long>(terms.size()) - 2};
    for (std::size_t i = 1; i + 1 < terms.size(); ++i) {
        Frac l, r;
        l.mul(terms[i - 1]);
        l.mul(terms[i + 1]);
        r.mul_pow(terms[i], 2);
        int c = cmp_frac(l, r);  // sign of z_{n-1}z_{n+1} - z_n^2
        bool ok = convex ? (strict ? c > 0 : c >= 0) : (strict ? c < 0 : c <= 0);
        if (!ok) {
            out.holds = false;
            out.first_violation = Violation{first_index + static_cast<long long>(i),
                                            terms[i - 1] * terms[i + 1], terms[i] * terms[i]};
            return out;
        }
    }
    return out;
}

} // namespace

std::vector<BigRat> apply_R(const std::vector<BigRat>& terms, long long first_index) {
    require_positive(terms, first_index);
    if (terms.size() < 2) throw TooFewTerms("R needs at least 2 terms");
    std::vector<BigRat> out;
    out.reserve(terms.size() - 1);
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) out.push_back(terms[i + 1] / terms[i]);
    return out;
}

CheckOutcome check_log_convex(const std::vector<BigRat>& terms, long long first_index, bool strict) {
    return check_three_term(terms, first_index, /*convex=*/true, strict);
}

CheckOutcome check_log_concave(const std::vector<BigRat>& terms, long long first_index, bool strict) {
    return check_three_term(terms, first_index, /*convex=*/false, strict);
}

CheckOutcome check_ratio_log_convex(const std::vector<BigRat>& terms, long long first_index,
                                    long long start, bool strict) {
    long long last = first_index + static_cast<long long>(terms.size()) - 1;
    if (start - 2 < first_index || start + 2 > last)
        throw TooFewTerms("ratio log-convexity needs 5 consecutive terms from start-2");
    require_positive(terms, first_index, static_cast<std::size_t>(start - 2 - first_index));
    CheckOutcome out;
    out.strict = strict;
    out.checked_range = {start, last - 2};
    for (long long n = start; n + 2 <= last; ++n) {
        auto at = [&](long long j) -> const BigRat& {
            return terms[static_cast<std::size_t>(j - first_index)];
        };
        Frac l, r;
        l.mul(at(n + 2));
        l.mul(at(n - 2));
        l.mul_pow(at(n), 6);
        r.mul_pow(at(n + 1), 4);
        r.mul_pow(at(n - 1), 4);
        int c = cmp_frac(l, r);
        bool ok = strict ? c > 0 : c >= 0;
        if (!ok) {
            out.holds = false;
            out.first_violation =
                Violation{n, at(n + 2) * at(n - 2) * at(n).pow(6), at(n + 1).pow(4) * at(n - 1).pow(4)};
            return out;
        }
    }
    return out;
}

CheckOutcome check_ratio_log_concave(const std::vector<BigRat>& terms, long long first_index,
                                     long long start, bool strict) {
    long long last = first_index + static_cast<long long>(terms.size()) - 1;
    if (start - 1 < first_index || start + 2 > last)
        throw TooFewTerms("ratio log-concavity needs 4 consecutive terms from start-1");
    require_positive(terms, first_index, static_cast<std::size_t>(start - 1 - first_index));
    CheckOutcome out;
    out.strict = strict;
    out.checked_range = {start, last - 2};
    for (long long n = start; n + 2 <= last; ++n) {
        auto at = [&](long long j) -> const BigRat& {
            return terms[static_cast<std::size_t>(j - first_index)];
        };
        Frac l, r;
        l.mul_pow(at(n + 1), 3);
        l.mul(at(n - 1));
        r.mul_pow(at(n), 3);
        r.mul(at(n + 2));
        int c = cmp_frac(l, r);  // want z_{n+1}^3 z_{n-1} >= z_n^3 z_{n+2}
        bool ok = strict ? c > 0 : c >= 0;
        if (!ok) {
            out.holds = false;
            out.first_violation = Violation{n, at(n + 1).pow(3) * at(n - 1), at(n).pow(3) * at(n + 2)};
            return out;
        }
    }
    return out;
}

std::vector<CheckOutcome> log_monotonic_order(const std::vector<BigRat>& terms,
                                              long long first_index, int k, bool strict) {
    if (k < 1) throw Error("order k must be >= 1");
    std::vector<CheckOutcome> out;
    out.reserve(static_cast<std::size_t>(k));
    std::vector<BigRat> level = terms;
    long long idx = first_index;
    for (int r = 0; r < k; ++r) {
        if (level.size() < 3)
            throw TooFewTerms("not enough terms to check level " + std::to_string(r));
        out.push_back(r % 2 == 0 ? check_log_convex(level, idx, strict)
                                 : check_log_concave(level, idx, strict));
        if (r + 1 < k) level = apply_R(level, idx);
    }
    return out;
}

std::optional<long long> order_onset(const SequenceDef& def, int k, long long horizon) {
    long long first = def.first_index();
    if (horizon - first + 1 < k + 3) throw TooFewTerms("horizon leaves too few terms");
    auto terms = generate_terms(def, horizon - first + 1);
    for (long long N = first; N <= horizon - k - 2; ++N) {
        std::vector<BigRat> window(terms.begin() + static_cast<std::ptrdiff_t>(N - first),
                                   terms.end());
        bool positive = true;
        for (const auto& t : window)
            if (!t.is_positive()) { positive = false; break; }
        if (!positive) continue;
        bool all = true;
        auto levels = log_monotonic_order(window, N, k, /*strict=*/false);
        for (const auto& lv : levels)
            if (!lv.holds) { all = false; break; }
        if (all) return N;
    }
    return std::nullopt;
}

} // namespace seqcert
