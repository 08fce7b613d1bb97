#pragma once

#include "seqcert/rational.hpp"

#include <string>
#include <vector>

namespace seqcert {

/// Integer-coefficient univariate polynomial, coefficients ascending by
/// degree, canonical (no trailing zero coefficient; zero polynomial is the
/// empty list). Carrier for all positivity proofs.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const BigInt& c);
    /// c * x^k
    static IntPoly monomial(const BigInt& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const;
    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly scaled(const BigInt& k) const;

    IntPoly derivative() const;
    BigRat eval(const BigRat& x) const;
    BigInt eval_int(const BigInt& x) const;

    /// p(x + c) by exact Taylor shift.
    IntPoly shifted(const BigInt& c) const;

    /// gcd of |coefficients| (positive); 0 for the zero polynomial.
    BigInt content() const;
    /// p / content, sign normalized so the leading coefficient is positive.
    IntPoly primitive_positive() const;
    /// p / content, keeping the original sign.
    IntPoly primitive() const;

    /// true if q divides p exactly; quotient written to *out when non-null.
    bool divide_exact(const IntPoly& q, IntPoly* out) const;

    /// (p mod q) up to a strictly positive constant factor, content-stripped.
    /// Sign pattern equals that of the true remainder, which is all Sturm
    /// chains and gcds need.
    static IntPoly pseudo_rem(const IntPoly& p, const IntPoly& q);

    /// gcd in Z[x] including integer content, positive leading coefficient.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    /// Cauchy bound: all real roots have |x| <= bound.
    BigRat root_bound() const;

    /// Human-readable form in the given variable, e.g. "32n^2 - 4n".
    std::string str(const std::string& var = "n") const;

private:
    void trim();
    std::vector<BigInt> c_;
};

} // namespace seqcert
