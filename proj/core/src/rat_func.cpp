#include "seqcert/rat_func.hpp"

#include "seqcert/errors.hpp"

namespace seqcert {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroPolynomial();
    canonicalize();
}

RatFunc::RatFunc(const BigRat& c)
    : num_(IntPoly::constant(c.numerator())), den_(IntPoly::constant(c.denominator())) {}

RatFunc RatFunc::variable() { return RatFunc(IntPoly{0, 1}, IntPoly{1}); }

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        IntPoly qn, qd;
        if (!num_.divide_exact(g, &qn) || !den_.divide_exact(g, &qd))
            throw Error("internal: gcd does not divide");
        num_ = qn;
        den_ = qd;
    }
    if (sgn(den_.leading()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error("division by the zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::shifted(long long offset) const {
    BigInt c(static_cast<long>(offset));
    return RatFunc(num_.shifted(c), den_.shifted(c));
}

BigRat RatFunc::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d.is_zero()) throw PoleAtPoint(x.str());
    return num_.eval(x) / d;
}

PositivityVerdict RatFunc::prove_sign_on_integers(const BigInt& N, bool strict, bool positive) const {
    IntPoly signed_num = positive ? num_ : -num_;
    IntPoly prod = signed_num * den_;
    if (!strict && !num_.is_zero() && den_.degree() > 0) {
        // p*q >= 0 alone would tolerate integer poles (p*q = 0 there); reject them.
        auto intervals = isolate_roots_above(den_, BigRat(N) - BigRat(1));
        for (const auto& [lo, hi] : intervals) {
            for (BigInt k = lo.floor(); k <= hi.ceil(); ++k) {
                if (k >= N && sgn(den_.eval_int(k)) == 0) {
                    PositivityVerdict v;
                    v.status = PositivityStatus::NotPositive;
                    v.witness = k;
                    v.transcript.push_back("denominator vanishes at n = " + k.get_str());
                    return v;
                }
            }
        }
    }
    return prove_positive_on_integers(prod, N, strict);
}

std::string RatFunc::str(const std::string& var) const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

} // namespace seqcert
