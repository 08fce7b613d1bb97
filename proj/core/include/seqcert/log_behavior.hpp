#pragma once

#include "seqcert/rational.hpp"
#include "seqcert/sequence.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace seqcert {

struct Violation {
    long long index = 0;
    BigRat lhs;
    BigRat rhs;
};

struct CheckOutcome {
    bool holds = true;
    bool strict = false;
    std::optional<Violation> first_violation;
    std::pair<long long, long long> checked_range{0, -1};  // empty when from > to
};

/// R{z}: x_n = z_{n+1}/z_n. first_index labels terms[0]; the result's first
/// element has the same index. Throws NonPositiveTerm.
std::vector<BigRat> apply_R(const std::vector<BigRat>& terms, long long first_index);

/// z_{n-1} z_{n+1} >= z_n^2 (resp. <=) at every interior index; strict uses >.
/// Requires >= 3 positive terms.
CheckOutcome check_log_convex(const std::vector<BigRat>& terms, long long first_index, bool strict);
CheckOutcome check_log_concave(const std::vector<BigRat>& terms, long long first_index, bool strict);

/// Degree-2 product form z_{n+2} z_{n-2} z_n^6 > z_{n+1}^4 z_{n-1}^4 for
/// n = start .. last admissible (equivalent to log-convexity of R^2 z at n-1).
/// Requires positive terms from start-2 on.
CheckOutcome check_ratio_log_convex(const std::vector<BigRat>& terms, long long first_index,
                                    long long start, bool strict);

/// Degree-1 form z_{n+1}^3 z_{n-1} >= z_n^3 z_{n+2} (log-concavity of R z at n).
CheckOutcome check_ratio_log_concave(const std::vector<BigRat>& terms, long long first_index,
                                     long long start, bool strict);

/// Level r = 0..k-1: R^r terms checked log-convex (r even) / log-concave
/// (r odd). Order-k verdict is the conjunction of the returned outcomes.
std::vector<CheckOutcome> log_monotonic_order(const std::vector<BigRat>& terms,
                                              long long first_index, int k, bool strict = false);

/// Smallest N (window-relative: violations beyond the horizon are invisible)
/// such that the order-k conditions hold on terms [N, horizon]; nullopt when
/// no N <= horizon - k - 2 works.
std::optional<long long> order_onset(const SequenceDef& def, int k, long long horizon);

} // namespace seqcert
