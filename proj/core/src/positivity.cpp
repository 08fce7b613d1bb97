#include "seqcert/positivity.hpp"

#include "seqcert/errors.hpp"

#include <algorithm>
#include <set>

namespace seqcert {

SturmChain::SturmChain(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    // Work on the square-free part: same distinct roots, and chain endpoints
    // that happen to be roots stay simple, which keeps the sign-variation
    // count valid there (at a multiple root the whole raw chain vanishes).
    IntPoly base = p.primitive();
    if (base.degree() > 1) {
        IntPoly g = IntPoly::gcd(base, base.derivative());
        if (g.degree() > 0) {
            IntPoly quo;
            if (!base.divide_exact(g, &quo)) throw Error("internal: square-free division failed");
            base = quo.primitive();
        }
    }
    chain_.push_back(base);
    IntPoly d = base.derivative();
    if (d.is_zero()) return;
    chain_.push_back(d.primitive());
    while (chain_.back().degree() > 0) {
        IntPoly r = IntPoly::pseudo_rem(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
} // namespace

int SturmChain::variations_at(const BigRat& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(q.eval(x).sign());
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
    return count_variations(signs);
}

long SturmChain::count_in(const BigRat& a, const BigRat& b) const {
    if (a >= b) return 0;
    return variations_at(a) - variations_at(b);
}

long SturmChain::count_above(const BigRat& a) const {
    return variations_at(a) - variations_at_pos_inf();
}

long sturm_distinct_roots_geq(const IntPoly& p, const BigRat& x0) {
    if (p.is_zero()) throw ZeroPolynomial();
    IntPoly q = p.primitive();
    long at_x0 = 0;
    if (q.eval(x0).is_zero()) {
        at_x0 = 1;
        // Deflate the root at x0. The primitive factor (den*x - num) divides a
        // primitive polynomial exactly in Z[x] (Gauss).
        IntPoly lin(std::vector<BigInt>{-x0.numerator(), x0.denominator()});
        while (!q.is_zero() && q.eval(x0).is_zero()) {
            IntPoly quo;
            if (!q.divide_exact(lin, &quo)) throw Error("internal: root deflation failed");
            q = quo.primitive();
        }
        if (q.is_zero()) return at_x0;
    }
    if (q.degree() <= 0) return at_x0;
    SturmChain chain(q);
    return at_x0 + chain.count_above(x0);
}

std::vector<std::pair<BigRat, BigRat>> isolate_roots_above(const IntPoly& p, const BigRat& a) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() == 0) return {};
    SturmChain chain(p);
    BigRat bound = p.root_bound();
    if (bound <= a) return {};
    std::vector<std::pair<BigRat, BigRat>> out;
    std::vector<std::pair<BigRat, BigRat>> work{{a, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        long k = chain.count_in(lo, hi);
        if (k == 0) continue;
        if (k == 1 && hi - lo < BigRat(1)) {
            out.emplace_back(lo, hi);
            continue;
        }
        BigRat mid = (lo + hi) * BigRat(1, 2);
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::string to_string(PositivityStatus s) {
    switch (s) {
        case PositivityStatus::PositiveByShiftedCoefficients: return "PositiveByShiftedCoefficients";
        case PositivityStatus::PositiveBySturm: return "PositiveBySturm";
        case PositivityStatus::NotPositive: return "NotPositive";
    }
    return "?";
}

PositivityVerdict prove_positive_on_integers(const IntPoly& p, const BigInt& N, bool strict) {
    if (p.is_zero()) {
        if (!strict) {
            PositivityVerdict v;
            v.status = PositivityStatus::PositiveByShiftedCoefficients;
            v.transcript.push_back("zero polynomial; >= 0 holds trivially");
            return v;
        }
        throw ZeroPolynomial();
    }
    PositivityVerdict v;
    const char* rel = strict ? "> 0" : ">= 0";
    auto violates = [&](const BigInt& value) {
        return strict ? sgn(value) <= 0 : sgn(value) < 0;
    };

    BigInt pN = p.eval_int(N);
    if (violates(pN)) {
        v.status = PositivityStatus::NotPositive;
        v.witness = N;
        v.transcript.push_back("p(" + N.get_str() + ") = " + pN.get_str() + " violates p " + rel);
        return v;
    }

    // Fast path: p(m + N) with all coefficients nonnegative.
    IntPoly shifted = p.shifted(N);
    bool all_nonneg = true;
    for (const auto& c : shifted.coeffs())
        if (sgn(c) < 0) { all_nonneg = false; break; }
    if (all_nonneg) {
        v.status = PositivityStatus::PositiveByShiftedCoefficients;
        v.transcript.push_back("p(m+" + N.get_str() + ") = " + shifted.str("m") +
                               " has nonnegative coefficients and p(" + N.get_str() + ") = " +
                               pN.get_str());
        return v;
    }

    // Complete path: sign can change only at real roots. Isolate the roots in
    // (N, inf) and evaluate p at every integer inside or adjacent to each
    // isolating interval; between intervals the sign is constant and pinned by
    // the checked points.
    BigRat nq{N};
    auto intervals = isolate_roots_above(p, nq);
    std::set<BigInt> candidates;
    candidates.insert(N);
    candidates.insert(N + 1);  // pins the sign just right of N when p(N) = 0
    for (const auto& [lo, hi] : intervals) {
        BigInt first = lo.floor();
        BigInt last = hi.ceil() + 1;
        for (BigInt k = first; k <= last; ++k)
            if (k >= N) candidates.insert(k);
    }
    bool eventually_negative = sgn(p.leading()) < 0;
    if (eventually_negative) {
        BigInt beyond = intervals.empty() ? N + 1 : intervals.back().second.ceil() + 1;
        candidates.insert(beyond);
    }
    for (const auto& k : candidates) {
        BigInt val = p.eval_int(k);
        if (violates(val)) {
            v.status = PositivityStatus::NotPositive;
            v.witness = k;
            v.transcript.push_back("p(" + k.get_str() + ") = " + val.get_str() + " violates p " + rel);
            return v;
        }
    }
    if (eventually_negative) {
        // all candidates pass yet the polynomial tends to -inf: the witness is
        // the first integer beyond the last isolated root (checked above), so
        // reaching here means the isolation missed it -- cannot happen.
        throw Error("internal: negative leading coefficient with no integer witness");
    }
    v.status = PositivityStatus::PositiveBySturm;
    v.transcript.push_back("no sign change on integers >= " + N.get_str() + ": " +
                           std::to_string(intervals.size()) +
                           " isolating interval(s) checked, p(" + N.get_str() + ") = " +
                           pN.get_str() + ", leading coefficient positive");
    return v;
}

} // namespace seqcert
