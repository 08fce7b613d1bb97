#include "seqcert/rational.hpp"

#include "seqcert/errors.hpp"

namespace seqcert {

BigRat::BigRat(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (sgn(den) == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

BigRat::BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}

BigRat BigRat::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (n.set_str(text, 10) != 0) throw Error("cannot parse rational: '" + text + "'");
        return BigRat(BigInt(n));
    }
    mpz_class n, d;
    if (n.set_str(text.substr(0, slash), 10) != 0 || d.set_str(text.substr(slash + 1), 10) != 0)
        throw Error("cannot parse rational: '" + text + "'");
    if (sgn(d) == 0) throw Error("cannot parse rational (zero denominator): '" + text + "'");
    return BigRat(BigInt(n), BigInt(d));
}

BigRat BigRat::operator/(const BigRat& o) const {
    if (o.is_zero()) throw Error("rational division by zero");
    return BigRat(mpq_class(v_ / o.v_));
}

BigRat BigRat::reciprocal() const {
    if (is_zero()) throw Error("reciprocal of zero");
    return BigRat(denominator(), numerator());
}

BigRat BigRat::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return BigRat(BigInt(n), BigInt(d));  // already coprime, canonicalize is a no-op
}

BigInt BigRat::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

BigInt BigRat::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string BigRat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace seqcert
