#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace seqcert {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator; zero is 0/1. The universal scalar for sequence terms,
/// ratios and bound values.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    BigRat(const BigInt& n) : v_(n) {}        // NOLINT(google-explicit-constructor)
    BigRat(const BigInt& num, const BigInt& den);
    BigRat(long num, long den);

    /// Parses "num", "num/den" or a plain decimal integer string.
    static BigRat parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    BigInt numerator() const { return BigInt(v_.get_num()); }
    BigInt denominator() const { return BigInt(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }
    BigRat operator+(const BigRat& o) const { return BigRat(mpq_class(v_ + o.v_)); }
    BigRat operator-(const BigRat& o) const { return BigRat(mpq_class(v_ - o.v_)); }
    BigRat operator*(const BigRat& o) const { return BigRat(mpq_class(v_ * o.v_)); }
    BigRat operator/(const BigRat& o) const;
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) { *this = *this / o; return *this; }

    BigRat reciprocal() const;
    BigRat abs() const { return is_negative() ? -*this : *this; }
    BigRat pow(unsigned long e) const;

    /// Largest integer <= value / smallest integer >= value.
    BigInt floor() const;
    BigInt ceil() const;

    bool operator==(const BigRat& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const BigRat& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p/q" or "p" when q == 1.
    std::string str() const;
    double to_double() const { return v_.get_d(); }

private:
    explicit BigRat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    mpq_class v_;
};

inline BigRat abs(const BigRat& r) { return r.abs(); }

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

} // namespace seqcert
