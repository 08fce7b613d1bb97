#pragma once

#include "seqcert/int_poly.hpp"
#include "seqcert/positivity.hpp"
#include "seqcert/rational.hpp"

#include <string>

namespace seqcert {

/// Ratio of two integer polynomials in the index variable n, kept canonical:
/// gcd(num, den) = 1 in Z[x] and den has a positive leading coefficient.
/// Carries the recurrence coefficients a_n, b_n and certificate bounds
/// lambda_n, r(n), s(n) as functions of the index n.
class RatFunc {
public:
    RatFunc() : num_(), den_(IntPoly::constant(1)) {}
    RatFunc(IntPoly num, IntPoly den);
    RatFunc(const BigRat& c);                       // NOLINT(google-explicit-constructor)
    RatFunc(long c) : RatFunc(BigRat(c)) {}         // NOLINT(google-explicit-constructor)

    static RatFunc variable();  // n

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// r(n + offset), canonical.
    RatFunc shifted(long long offset) const;

    /// Exact value; throws PoleAtPoint when den(x) = 0.
    BigRat eval(const BigRat& x) const;

    /// Positivity of r(n) over integers n >= N. Requires (and checks) that the
    /// denominator does not vanish at any integer >= N.
    PositivityVerdict prove_sign_on_integers(const BigInt& N, bool strict, bool positive = true) const;

    std::string str(const std::string& var = "n") const;

private:
    void canonicalize();
    IntPoly num_, den_;
};

} // namespace seqcert
