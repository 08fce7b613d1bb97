#include "seqcert/gamma_mono.hpp"

#include "seqcert/catalog.hpp"
#include "seqcert/errors.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace seqcert {

EligibilityResult check_gamma_eligibility(const GammaQuotientDef& fam) {
    if (fam.a == 0 || fam.b == 0 || fam.bbar == 0)
        throw InvalidFamily("a, b, bbar must be positive");
    EligibilityResult res;
    res.u = BigRat(static_cast<long>(fam.k0)) -
            BigRat(static_cast<long>(fam.n0) + 1) * BigRat(static_cast<long>(fam.b)) /
                BigRat(static_cast<long>(fam.a));
    res.p = BigRat(static_cast<long>(fam.a), static_cast<long>(fam.b));
    res.q = BigRat(static_cast<long>(fam.a), static_cast<long>(fam.bbar));
    // 1/p + 1/q <= 1  <=>  a >= b + bbar
    if (fam.a < fam.b + fam.bbar) {
        res.failed_condition = "a >= b + bbar";
        return res;
    }
    if (res.u < BigRat(-1) || res.u > BigRat(0)) {
        res.failed_condition = "-1 <= k0 - (n0+1)b/a <= 0";
        return res;
    }
    res.eligible = true;
    return res;
}

EligibilityResult check_binomial_family(unsigned long n0, unsigned long k0, unsigned long Delta,
                                        unsigned long delta) {
    if (k0 > n0) throw InvalidFamily("binomial family needs k0 <= n0");
    if (delta == 0 || Delta <= delta) throw InvalidFamily("binomial family needs Delta > delta > 0");
    GammaQuotientDef g;
    g.n0 = n0;
    g.k0 = k0;
    g.k0bar = n0 - k0;
    g.a = Delta;
    g.b = delta;
    g.bbar = Delta - delta;
    return check_gamma_eligibility(g);
}

std::vector<CheckOutcome> verify_finite_log_monotonicity(const GammaQuotientDef& fam, int k,
                                                         long long count) {
    if (count < k + 3) throw TooFewTerms("count must be >= k + 3");
    SequenceDef def;
    def.name = "gamma-quotient";
    def.kind = fam;
    auto terms = generate_terms(def, count);
    return log_monotonic_order(terms, 0, k, /*strict=*/false);
}

EBoundResult derangement_e_bound(long long n_max) {
    if (n_max < 3) throw Error("n_max must be >= 3");
    EBoundResult res;
    res.outcome.strict = false;
    res.outcome.checked_range = {3, n_max};
    auto d = generate_terms(catalog_lookup("derangement"), n_max + 1);
    const BigRat half(1, 2);
    for (long long n = 2; n <= n_max; ++n) {
        // partial sums S_m, S_{m+1} of n! * sum (-1)^j / j! bracket n!/e
        unsigned long m = static_cast<unsigned long>(n) + 20;
        BigInt nf = factorial(static_cast<unsigned long>(n));
        BigRat sum;
        BigInt jf(1);
        for (unsigned long j = 0; j <= m; ++j) {
            if (j > 0) jf *= BigInt(static_cast<long>(j));
            BigRat t(nf, jf);
            sum += (j % 2 == 0) ? t : -t;
        }
        jf *= BigInt(static_cast<long>(m + 1));
        BigRat next = sum + ((m + 1) % 2 == 0 ? BigRat(nf, jf) : -BigRat(nf, jf));
        BigRat lo = sum < next ? sum : next;
        BigRat hi = sum < next ? next : sum;
        const BigRat& dn = d[static_cast<std::size_t>(n)];
        BigRat worst = (dn - lo).abs();
        BigRat other = (dn - hi).abs();
        if (other > worst) worst = other;
        bool ok = worst <= half;
        if (n == 2) {
            res.n2_informational = ok;
            continue;
        }
        res.rows.push_back(EBoundRow{n, ok, lo, hi, worst});
        if (!ok && res.outcome.holds) {
            res.outcome.holds = false;
            res.outcome.first_violation = Violation{n, worst, half};
        }
    }
    return res;
}

namespace {

using mpfr_float = boost::multiprecision::mpfr_float;

mpfr_float to_mpfr(const BigRat& r) {
    return mpfr_float(r.numerator().get_mpz_t()) / mpfr_float(r.denominator().get_mpz_t());
}

// 1/(1 - e^{-s}) computed via expm1: stable for small s.
mpfr_float inv_one_minus_exp_neg(const mpfr_float& s) {
    mpfr_float em;
    mpfr_expm1(em.backend().data(), mpfr_float(-s).backend().data(), MPFR_RNDN);
    return 1 / (-em);
}

mpfr_float h_eval_at(const std::string& t_text, const BigRat& u, const BigRat& p, const BigRat& q,
                     unsigned digits) {
    mpfr_float::default_precision(digits);
    mpfr_float t(t_text);
    mpfr_float up = to_mpfr(u), pp = to_mpfr(p), qq = to_mpfr(q);
    mpfr_float A = inv_one_minus_exp_neg(t);
    mpfr_float B = exp(-t * pp * (up + 1)) * inv_one_minus_exp_neg(pp * t);
    mpfr_float C = exp(up * qq * t) * inv_one_minus_exp_neg(qq * t);
    return A - B - C;
}

} // namespace

HKernelValue h_kernel_eval(const HKernelParams& params) {
    std::string t_text = params.t_text.empty() ? std::to_string(params.t) : params.t_text;
    {
        mpfr_float::default_precision(params.digits);
        if (!(mpfr_float(t_text) > 0)) throw Error("h-kernel needs t > 0");
    }
    if (params.u < BigRat(-1) || params.u > BigRat(0)) throw Error("h-kernel needs -1 <= u <= 0");
    unsigned digits = params.digits;
    for (int attempt = 0; attempt < 4; ++attempt) {
        mpfr_float lo_prec = h_eval_at(t_text, params.u, params.p, params.q, digits);
        mpfr_float hi_prec = h_eval_at(t_text, params.u, params.p, params.q, digits * 2);
        mpfr_float::default_precision(digits * 2);
        mpfr_float err = abs(mpfr_float(lo_prec) - hi_prec);
        if (err <= abs(hi_prec) / 2 || hi_prec == 0) {
            HKernelValue out;
            mpfr_float::default_precision(params.digits);
            out.value = mpfr_float(hi_prec).str(params.digits);
            out.error = err.str(3);
            out.positive = hi_prec > err;
            return out;
        }
        digits *= 2;
    }
    throw PrecisionLoss("h-kernel error estimate exceeds half the result magnitude");
}

HKernelGridReport h_kernel_grid_check(const BigRat& p, const BigRat& q,
                                      const std::vector<std::string>& grid_t,
                                      const std::vector<BigRat>& grid_u, unsigned digits) {
    if (grid_t.empty() || grid_u.empty()) throw Error("h-kernel grid must be nonempty");
    if (p.reciprocal() + q.reciprocal() > BigRat(1)) throw Error("h-kernel needs 1/p + 1/q <= 1");
    HKernelGridReport rep;
    rep.outcome.strict = true;
    rep.outcome.checked_range = {0,
                                 static_cast<long long>(grid_t.size() * grid_u.size()) - 1};
    long long idx = 0;
    for (const auto& t : grid_t) {
        for (const auto& u : grid_u) {
            HKernelParams params;
            params.t_text = t;
            params.u = u;
            params.p = p;
            params.q = q;
            params.digits = digits;
            HKernelValue v = h_kernel_eval(params);
            rep.rows.push_back("t=" + t + " u=" + u.str() + " h=" + v.value + " (err<=" + v.error +
                               ")");
            if (!v.positive && rep.outcome.holds) {
                rep.outcome.holds = false;
                rep.outcome.first_violation = Violation{idx, BigRat(0), BigRat(0)};
            }
            ++idx;
        }
    }
    return rep;
}

std::vector<OnsetRow> derangement_onset_table(int k_max, long long horizon) {
    if (horizon < k_max + 5) throw Error("horizon must be >= k_max + 5");
    SequenceDef der = catalog_lookup("derangement");
    // anchor at n = 2: d_0..d_1 contain a zero, everything from 2 is positive
    RecurrenceDef rec = der.recurrence();
    rec.offset = 2;
    rec.initial_terms = {BigRat(1), BigRat(2)};
    der.kind = rec;
    der.name = "derangement@2";
    std::vector<OnsetRow> rows;
    for (int k = 1; k <= k_max; ++k) rows.push_back(OnsetRow{k, order_onset(der, k, horizon)});
    return rows;
}

} // namespace seqcert
