#pragma once

#include "seqcert/log_behavior.hpp"
#include "seqcert/sequence.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seqcert {

struct EligibilityResult {
    bool eligible = false;
    BigRat u;        // k0 - (n0+1) b / a
    BigRat p;        // a / b
    BigRat q;        // a / bbar
    std::optional<std::string> failed_condition;
};

/// Gamma-quotient infinite-log-monotonicity criterion: eligible iff
/// a >= b + bbar (i.e. 1/p + 1/q <= 1) and -1 <= u <= 0. Exact arithmetic.
///
/// Caveat (found by this artifact's exact checks): the criterion leaves the
/// second factorial's offset ubar = k0bar - (n0+1)bbar/a unconstrained, and
/// eligible families with ubar < -(u+1) can fail log-convexity outright
/// (e.g. (n0,k0,k0bar,a,b,bbar) = (1,0,0,2,1,1), terms 1, 6, 30). All the
/// classical families (central binomial, Catalan, Fuss-Catalan, binomial
/// rays) satisfy ubar >= -(u+1). See the gamma-mono tests.
EligibilityResult check_gamma_eligibility(const GammaQuotientDef& fam);

/// Binomial family C_i = binom(n0 + i*Delta, k0 + i*delta): maps to a
/// Gamma-quotient (a = Delta, b = delta, bbar = Delta - delta,
/// k0bar = n0 - k0) and delegates. Throws InvalidFamily when k0 > n0 or the
/// mapped parameters are not positive (Delta <= delta or delta <= 0).
EligibilityResult check_binomial_family(unsigned long n0, unsigned long k0, unsigned long Delta,
                                        unsigned long delta);

/// Finite slice of the theorem's conclusion: generates `count` exact terms and
/// runs log_monotonic_order through level k-1.
std::vector<CheckOutcome> verify_finite_log_monotonicity(const GammaQuotientDef& fam, int k,
                                                         long long count);

struct EBoundRow {
    long long n = 0;
    bool holds = false;
    BigRat enclosure_lo;  // rational enclosure of n!/e
    BigRat enclosure_hi;
    BigRat diff_bound;    // max |d_n - v| over the enclosure
};

struct EBoundResult {
    CheckOutcome outcome;        // |d_n - n!/e| <= 1/2 for 3 <= n <= n_max
    std::vector<EBoundRow> rows;
    bool n2_informational = false;  // the bound happens to hold at n = 2 as well
};

/// Verifies |d_n - n!/e| <= 1/2 for 3 <= n <= n_max using the alternating
/// series n! sum_{j<=m} (-1)^j/j! with m = n + 20; consecutive partial sums
/// bracket n!/e. Entirely rational arithmetic.
EBoundResult derangement_e_bound(long long n_max);

struct HKernelParams {
    double t = 1.0;        // > 0 (parsed exactly by the CLI; stored as text too)
    std::string t_text;    // decimal text of t, used verbatim at full precision
    BigRat u;              // in [-1, 0]
    BigRat p;
    BigRat q;
    unsigned digits = 50;  // working precision in significant digits
};

struct HKernelValue {
    std::string value;        // decimal, `digits` significant digits
    std::string error;        // two-precision error estimate
    bool positive = false;    // value > error margin
};

/// h(t,u) = 1/(1-e^{-t}) - e^{-tp(u+1)}/(1-e^{-pt}) - e^{uqt}/(1-e^{-qt}),
/// evaluated in MPFR at the requested precision with an error estimate from a
/// second evaluation at doubled precision; retries (max 3) then throws
/// PrecisionLoss when the estimate exceeds half the magnitude.
HKernelValue h_kernel_eval(const HKernelParams& params);

struct HKernelGridReport {
    CheckOutcome outcome;  // holds iff every grid point is positive with margin
    std::vector<std::string> rows;  // "t=.. u=.. h=.. (+/- err)"
    std::string label = "numeric evidence, not proof";
};

HKernelGridReport h_kernel_grid_check(const BigRat& p, const BigRat& q,
                                      const std::vector<std::string>& grid_t,
                                      const std::vector<BigRat>& grid_u, unsigned digits = 50);

struct OnsetRow {
    int k = 0;
    std::optional<long long> onset;  // window-relative
};

/// Window-relative order-k onsets for the derangement numbers, scanned from
/// n = 2 (the first index from which all terms are positive).
std::vector<OnsetRow> derangement_onset_table(int k_max, long long horizon);

} // namespace seqcert
