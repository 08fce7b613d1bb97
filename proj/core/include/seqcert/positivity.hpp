#pragma once

#include "seqcert/int_poly.hpp"
#include "seqcert/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seqcert {

/// Sturm chain of a polynomial; counts distinct real roots by sign-variation
/// differences. Valid for non-square-free input (standard generalized chain).
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);

    /// Sign variations of the chain evaluated at x.
    int variations_at(const BigRat& x) const;
    /// Sign variations at +infinity (leading-coefficient signs).
    int variations_at_pos_inf() const;

    /// Number of distinct real roots in the half-open interval (a, b].
    long count_in(const BigRat& a, const BigRat& b) const;
    /// Number of distinct real roots in (a, +infinity).
    long count_above(const BigRat& a) const;

    const std::vector<IntPoly>& chain() const { return chain_; }

private:
    std::vector<IntPoly> chain_;
};

/// Distinct real roots of p in [x0, +infinity). Multiplicity ignored.
long sturm_distinct_roots_geq(const IntPoly& p, const BigRat& x0);

/// Disjoint intervals (lo, hi], each of width < 1 and containing exactly one
/// distinct real root of p, covering all roots in (a, +infinity).
std::vector<std::pair<BigRat, BigRat>> isolate_roots_above(const IntPoly& p, const BigRat& a);

enum class PositivityStatus {
    PositiveByShiftedCoefficients,
    PositiveBySturm,
    NotPositive,
};

std::string to_string(PositivityStatus s);

struct PositivityVerdict {
    PositivityStatus status = PositivityStatus::NotPositive;
    /// Populated when NotPositive: smallest integer n >= N violating the claim.
    std::optional<BigInt> witness;
    std::vector<std::string> transcript;

    bool positive() const { return status != PositivityStatus::NotPositive; }
};

/// Complete decision procedure for "p(n) > 0 for every integer n >= N"
/// (strict) or "p(n) >= 0 ..." (strict = false). Fast path: shifted
/// coefficients all nonnegative. Complete path: Sturm root isolation plus
/// integer-point evaluation inside/around each isolating interval, which is
/// exactly the integer half-line claim the certificates quantify over (a real
/// root inside an integer gap does not refute).
PositivityVerdict prove_positive_on_integers(const IntPoly& p, const BigInt& N, bool strict = true);

} // namespace seqcert
