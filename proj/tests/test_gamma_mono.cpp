#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqcert/catalog.hpp"
#include "seqcert/errors.hpp"
#include "seqcert/gamma_mono.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <random>

using namespace seqcert;

namespace {
using big_float = boost::multiprecision::mpfr_float;

big_float parse_mp(const std::string& s) {
    big_float::default_precision(60);
    return big_float(s);
}
} // namespace

TEST_CASE("gamma eligibility: the classical families") {
    auto cb = check_gamma_eligibility({0, 0, 0, 2, 1, 1});
    CHECK(cb.eligible);
    CHECK(cb.u == BigRat(-1, 2));
    CHECK(cb.p == BigRat(2));
    CHECK(cb.q == BigRat(2));

    auto cat = check_gamma_eligibility({0, 0, 1, 2, 1, 1});
    CHECK(cat.eligible);
    CHECK(cat.u == BigRat(-1, 2));

    for (unsigned long p = 2; p <= 8; ++p) {
        auto fc = check_gamma_eligibility({0, 0, 1, p, 1, p - 1});
        CAPTURE(p);
        CHECK(fc.eligible);
        CHECK(fc.u == BigRat(-1, static_cast<long>(p)));
    }

    auto bad = check_gamma_eligibility({0, 1, 0, 2, 1, 1});
    CHECK_FALSE(bad.eligible);
    CHECK(bad.u == BigRat(1, 2));
    REQUIRE(bad.failed_condition.has_value());
    CHECK(*bad.failed_condition == "-1 <= k0 - (n0+1)b/a <= 0");

    auto narrow = check_gamma_eligibility({0, 0, 0, 2, 2, 1});
    CHECK_FALSE(narrow.eligible);
    CHECK(*narrow.failed_condition == "a >= b + bbar");
}

TEST_CASE("binomial family corollary") {
    auto cb = check_binomial_family(0, 0, 2, 1);
    CHECK(cb.eligible);
    CHECK(cb.u == BigRat(-1, 2));
    auto e = check_binomial_family(1, 0, 3, 1);
    CHECK(e.eligible);
    CHECK(e.u == BigRat(-2, 3));
    CHECK_THROWS_AS(check_binomial_family(0, 0, 2, 3), InvalidFamily);  // Delta <= delta
    CHECK_THROWS_AS(check_binomial_family(1, 2, 3, 1), InvalidFamily);  // k0 > n0
}

TEST_CASE("finite log-monotonicity slices") {
    for (const auto& fam : {GammaQuotientDef{0, 0, 0, 2, 1, 1}, GammaQuotientDef{0, 0, 1, 2, 1, 1}})
        for (const auto& lv : verify_finite_log_monotonicity(fam, 6, 80)) CHECK(lv.holds);
    for (const auto& lv : verify_finite_log_monotonicity({0, 0, 1, 4, 1, 3}, 4, 60))
        CHECK(lv.holds);
    CHECK_THROWS_AS(verify_finite_log_monotonicity({0, 0, 0, 2, 1, 1}, 6, 8), TooFewTerms);
}

namespace {
// Offset of the second factorial, mirroring u for the first: the eligibility
// criterion leaves it unconstrained, yet the kernel argument needs
// ubar >= -(u+1) (the third exponential must not outgrow the leading term).
BigRat ubar_of(const GammaQuotientDef& g) {
    return BigRat(static_cast<long>(g.k0bar)) -
           BigRat(static_cast<long>(g.n0) + 1) * BigRat(static_cast<long>(g.bbar)) /
               BigRat(static_cast<long>(g.a));
}
} // namespace

TEST_CASE("eligible random families with ubar >= -(u+1) show no finite violation") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<unsigned long> small(0, 4), pos(1, 5);
    int eligible_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        GammaQuotientDef g{small(rng), small(rng), small(rng), pos(rng), pos(rng), pos(rng)};
        auto res = check_gamma_eligibility(g);
        if (!res.eligible) continue;
        if (ubar_of(g) < -(res.u + BigRat(1))) continue;
        ++eligible_count;
        for (const auto& lv : verify_finite_log_monotonicity(g, 4, 40)) {
            CAPTURE(g.n0); CAPTURE(g.k0); CAPTURE(g.k0bar);
            CAPTURE(g.a); CAPTURE(g.b); CAPTURE(g.bbar);
            CHECK(lv.holds);
        }
    }
    CHECK(eligible_count > 30);  // the sampler does hit such families
}

TEST_CASE("eligibility alone does not imply log-convexity: exact counterexamples") {
    // Both tuples satisfy the stated criterion (a >= b+bbar, -1 <= u <= 0)
    // but violate log-convexity immediately; in both, ubar < -(u+1).
    for (const auto& g : {GammaQuotientDef{1, 0, 0, 2, 1, 1},   // (2i+1)!/(i!)^2
                          GammaQuotientDef{3, 2, 0, 2, 1, 1}}) {  // (3+2i)!/((2+i)! i!)
        auto res = check_gamma_eligibility(g);
        CHECK(res.eligible);
        CHECK(ubar_of(g) < -(res.u + BigRat(1)));
        auto levels = verify_finite_log_monotonicity(g, 2, 12);
        CHECK_FALSE(levels[0].holds);  // level 0 log-convexity already fails
    }
    // (1,0,0,2,1,1): 1, 6, 30 -> 1*30 < 6^2
    SequenceDef def;
    def.name = "counterexample";
    def.kind = GammaQuotientDef{1, 0, 0, 2, 1, 1};
    auto t = generate_terms(def, 3);
    CHECK(t[0] == BigRat(1));
    CHECK(t[1] == BigRat(6));
    CHECK(t[2] == BigRat(30));
}

TEST_CASE("derangement e-bound via rational series enclosure") {
    EBoundResult res = derangement_e_bound(50);
    CHECK(res.outcome.holds);
    CHECK(res.rows.size() == 48);
    CHECK(res.n2_informational);  // |d_2 - 2/e| ~ 0.264 <= 1/2 as well
    for (const auto& row : res.rows) {
        CHECK(row.holds);
        CHECK(row.enclosure_hi - row.enclosure_lo < BigRat(1, 10000000000L));
        CHECK(row.diff_bound <= BigRat(1, 2));
    }
    // n = 3: enclosure of 3!/e is inside (2.207, 2.208)
    const auto& r3 = res.rows.front();
    CHECK(r3.n == 3);
    CHECK(r3.enclosure_lo > BigRat(2207, 1000));
    CHECK(r3.enclosure_hi < BigRat(2208, 1000));
}

TEST_CASE("series enclosure agrees with the float value of n!/e") {
    // The enclosure (width < 1e-10, in fact ~ n!/(n+21)!) is far tighter than
    // double precision, so bracketing is asserted at double's resolution.
    EBoundResult res = derangement_e_bound(30);
    double e = 2.718281828459045;
    double fact = 2.0;
    for (const auto& row : res.rows) {
        fact *= row.n;  // row.n starts at 3, fact = n!
        double approx = fact / e;
        double mid = (row.enclosure_lo.to_double() + row.enclosure_hi.to_double()) / 2;
        CHECK(std::abs(mid - approx) <= std::abs(approx) * 1e-12);
    }
}

TEST_CASE("h-kernel: closed-form reference point h(1,0;2,2) = 1/(1+e)") {
    HKernelParams params;
    params.t_text = "1";
    params.u = BigRat(0);
    params.p = BigRat(2);
    params.q = BigRat(2);
    HKernelValue v = h_kernel_eval(params);
    CHECK(v.positive);
    big_float::default_precision(60);
    big_float expect = 1 / (1 + exp(big_float(1)));
    CHECK(abs(parse_mp(v.value) - expect) < pow(big_float(10), -40));
}

TEST_CASE("h-kernel symmetry h(t,-1;p,q) = h(t,0;q,p)") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> pn(2, 9), pd(1, 3);
    std::uniform_int_distribution<int> ti(0, 3);
    const char* ts[] = {"0.13", "0.9", "3.5", "27"};
    for (int trial = 0; trial < 25; ++trial) {
        BigRat p(pn(rng), pd(rng));
        if (p <= BigRat(1)) continue;
        // pick q with 1/p + 1/q <= 1: q = p/(p-1) works with equality
        BigRat q = p / (p - BigRat(1));
        HKernelParams lhs{0, ts[ti(rng)], BigRat(-1), p, q, 50};
        HKernelParams rhs{0, lhs.t_text, BigRat(0), q, p, 50};
        HKernelValue a = h_kernel_eval(lhs);
        HKernelValue b = h_kernel_eval(rhs);
        big_float diff = abs(parse_mp(a.value) - parse_mp(b.value));
        big_float scale = abs(parse_mp(a.value));
        if (scale < 1) scale = 1;
        CHECK(diff < scale * pow(big_float(10), -30));
    }
}

TEST_CASE("h-kernel grid: acceptance grids all positive") {
    std::vector<std::string> ts{"0.01", "0.1", "1", "10", "50"};
    std::vector<BigRat> us{BigRat(-1), BigRat(-3, 4), BigRat(-1, 2), BigRat(-1, 4), BigRat(0)};
    auto r1 = h_kernel_grid_check(BigRat(2), BigRat(2), ts, us);
    CHECK(r1.outcome.holds);
    CHECK(r1.rows.size() == 25);
    CHECK(r1.label == "numeric evidence, not proof");
    auto r2 = h_kernel_grid_check(BigRat(3), BigRat(3, 2), ts, us);
    CHECK(r2.outcome.holds);
    CHECK_THROWS_AS(h_kernel_grid_check(BigRat(2), BigRat(3, 2), ts, us), Error);  // 1/p+1/q > 1
}

TEST_CASE("h-kernel survives extreme cancellation via precision retry") {
    // at t = 1e-52 each term is ~1e52 while h ~ 1/2: 50-digit arithmetic
    // cancels completely and the doubled-precision retry must kick in
    HKernelParams params;
    params.t_text = "1e-52";
    params.u = BigRat(-1, 2);
    params.p = BigRat(2);
    params.q = BigRat(2);
    params.digits = 50;
    HKernelValue v = h_kernel_eval(params);
    CHECK(v.positive);
    CHECK(abs(parse_mp(v.value) - big_float(0.5)) < pow(big_float(10), -20));
}

TEST_CASE("h-kernel near t = 0 stays accurate") {
    HKernelParams params;
    params.t_text = "0.0001";
    params.u = BigRat(-1, 2);
    params.p = BigRat(2);
    params.q = BigRat(2);
    HKernelValue v = h_kernel_eval(params);
    CHECK(v.positive);
    // h -> 1/2 + O(t) when 1/p + 1/q = 1
    CHECK(abs(parse_mp(v.value) - big_float(0.5)) < big_float(0.001));
}

TEST_CASE("derangement onset table") {
    auto rows = derangement_onset_table(3, 200);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].k == 1);
    CHECK(rows[0].onset == 2);
    CHECK(rows[1].onset == 4);  // <= 4, the published log-convexity bound
    CHECK(rows[2].onset == 6);  // <= 8, the published ratio-log-concavity bound
}
