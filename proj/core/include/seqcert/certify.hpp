#pragma once

#include "seqcert/log_behavior.hpp"
#include "seqcert/positivity.hpp"
#include "seqcert/rat_func.hpp"
#include "seqcert/sequence.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace seqcert {

/// f(x) = [(a_{n+1}a_n + b_{n+1})x + a_{n+1}b_n](x - a_{n-1})x^6
///        - b_{n-1}(a_n x + b_n)^4
/// stored as coefficients in x (ascending), each a rational function of n,
/// together with its first three formal x-derivatives.
struct CertPolySet {
    std::array<RatFunc, 9> f;   // degree 8
    std::array<RatFunc, 9> f1;  // degree 7
    std::array<RatFunc, 9> f2;  // degree 6
    std::array<RatFunc, 9> f3;  // degree 5
};

CertPolySet build_cert_polys(const RatFunc& a, const RatFunc& b);

enum class CertPolyWhich { f, f1, f2 };

/// Exact rational function of n obtained by substituting x := bound(n).
RatFunc substitute_bound(const CertPolySet& ps, CertPolyWhich which, const RatFunc& bound);

enum class BoundMode { symbolic, interval };

/// Exact interval propagation for consecutive-term ratios y_m = z_m/z_{m-1}:
/// given y_{m0} in [L, U] (0 < L <= U), returns enclosures for
/// y_{m0} .. y_{m1} under y_{m+1} = a_m + b_m / y_m. Sound for either sign
/// of b (the ratio map is monotone in y_m; endpoints are ordered after
/// mapping). Enclosures must stay positive or an Error is thrown.
std::vector<std::pair<BigRat, BigRat>> propagate_ratio_intervals(const RecurrenceDef& rec,
                                                                 const BigRat& L, const BigRat& U,
                                                                 long long m0, long long m1);

struct RatioBoundOptions {
    long long horizon = 400;  // interval mode: indices N .. N+horizon are checked
    int shift = 0;            // validate g(n) <= z_{n+shift}/z_{n+shift-1}
};

/// Lower ratio bound g(n) <= z_{n+shift}/z_{n+shift-1} for n >= N.
/// symbolic mode (shift 0 only): base sandwich at N plus the induction
/// inequality a_{n-1} + b_{n-1}/g_{n-1} < b_n/(g_{n+1} - a_n) proven as
/// rational-function positivity for all n >= N+1 (unbounded conclusion;
/// checked_range.second = -1). The induction denominator is the corrected
/// g_{n+1} - a_n; when `printed_form_agrees` is non-null it reports whether
/// the circulating misprinted variant (denominator g_{n+1} - b_n) would have
/// reached the same verdict. interval mode: exact propagation
/// L_{m+1} = a_m + b_m/U_m, U_{m+1} = a_m + b_m/L_m over a finite horizon.
/// Pre: b(n) > 0 for n >= min over checked recurrence indices.
CheckOutcome verify_ratio_lower_bound(const RecurrenceDef& rec, const RatFunc& g, long long N,
                                      BoundMode mode, const RatioBoundOptions& opts = {},
                                      bool* printed_form_agrees = nullptr);

/// Upper ratio bound z_n/z_{n-1} < h(n) for n >= N, where b(n) < 0:
/// exact base check at N, then h(n+1) - a_n - b_n/h(n) > 0 proven
/// symbolically for n >= N (unbounded; checked_range.second = -1).
CheckOutcome verify_ratio_upper_bound(const RecurrenceDef& rec, const RatFunc& h, long long N);

struct PlusCertificate {
    SequenceDef seq;  // recurrence kind
    RatFunc lambda;
    long long N = 1;
    long long base_window = 64;
};

struct MinusCertificate {
    SequenceDef seq;
    RatFunc r;
    RatFunc s;
    long long N = 1;
    long long base_window = 64;
};

enum class CertVerdict { Certified, Refuted, Inconclusive };
std::string to_string(CertVerdict v);

struct HypothesisResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct CertificateReport {
    CertVerdict verdict = CertVerdict::Inconclusive;
    std::vector<HypothesisResult> hypotheses;
    long long covered_from = 0;
    std::pair<long long, long long> base_checked{0, -1};
    /// 0 = statement form z_n/z_{n-1} >= lambda_n, 1 = the proof's
    /// z_{n+1}/z_n >= lambda_n, 2 = double shift; -1 = none held.
    int lambda_index_shift = 0;
    std::vector<std::string> notes;

    bool certified() const { return verdict == CertVerdict::Certified; }
};

/// Machine-check of the b_n > 0 criterion. Certified means every hypothesis
/// holds (H5 at the recorded index shift) and the product form
/// z_{n+2}z_{n-2}z_n^6 > z_{n+1}^4 z_{n-1}^4 was verified exactly on the
/// whole base window [offset+2, N+base_window].
CertificateReport verify_theorem_plus(const PlusCertificate& cert);

/// Machine-check of the b_n < 0 criterion (conditions (i)-(iii)).
CertificateReport verify_theorem_minus(const MinusCertificate& cert);

using Certificate = std::variant<PlusCertificate, MinusCertificate>;

/// Built-in certificates with the published bound data (derangement,
/// motzkin, fine, franel: plus; domb: minus). Throws UnknownSequence
/// for anything else.
Certificate builtin_certificate(const std::string& name);
std::vector<std::string> builtin_certificate_names();

CertificateReport verify_certificate(const Certificate& cert);

} // namespace seqcert
