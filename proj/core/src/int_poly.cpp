#include "seqcert/int_poly.hpp"

#include "seqcert/errors.hpp"

#include <algorithm>

namespace seqcert {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const BigInt& c) {
    IntPoly p;
    if (sgn(c) != 0) p.c_ = {c};
    return p;
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
    IntPoly p;
    if (sgn(c) != 0) {
        p.c_.assign(k + 1, BigInt(0));
        p.c_[k] = c;
    }
    return p;
}

const BigInt& IntPoly::leading() const {
    if (is_zero()) throw ZeroPolynomial();
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

IntPoly IntPoly::scaled(const BigInt& k) const {
    if (sgn(k) == 0) return {};
    IntPoly r(*this);
    for (auto& v : r.c_) v *= k;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    IntPoly r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    r.trim();
    return r;
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + BigRat(c_[i]);
    return acc;
}

BigInt IntPoly::eval_int(const BigInt& x) const {
    BigInt acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly IntPoly::shifted(const BigInt& c) const {
    if (is_zero() || sgn(c) == 0) return *this;
    // In-place Taylor shift by repeated synthetic division.
    std::vector<BigInt> a = c_;
    std::size_t d = a.size() - 1;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = d; i-- > k;) a[i] += c * a[i + 1];
    return IntPoly(std::move(a));
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return {};
    BigInt g = content();
    IntPoly r(*this);
    for (auto& v : r.c_) v /= g;
    return r;
}

IntPoly IntPoly::primitive_positive() const {
    IntPoly r = primitive();
    if (!r.is_zero() && sgn(r.leading()) < 0) r = -r;
    return r;
}

bool IntPoly::divide_exact(const IntPoly& q, IntPoly* out) const {
    if (q.is_zero()) throw ZeroPolynomial();
    if (is_zero()) {
        if (out) *out = {};
        return true;
    }
    if (degree() < q.degree()) return false;
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quo(static_cast<std::size_t>(degree() - q.degree()) + 1, BigInt(0));
    for (long d = degree(); d >= q.degree();) {
        BigInt lead = rem[static_cast<std::size_t>(d)];
        if (sgn(lead) != 0) {
            BigInt f, r;
            mpz_tdiv_qr(f.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), q.leading().get_mpz_t());
            if (sgn(r) != 0) return false;
            std::size_t off = static_cast<std::size_t>(d - q.degree());
            quo[off] = f;
            for (std::size_t i = 0; i < q.c_.size(); ++i) rem[off + i] -= f * q.c_[i];
        }
        --d;
    }
    for (const auto& v : rem)
        if (sgn(v) != 0) return false;
    if (out) *out = IntPoly(std::move(quo));
    return true;
}

IntPoly IntPoly::pseudo_rem(const IntPoly& p, const IntPoly& q) {
    // Returns a strictly positive constant multiple of p mod q: each elimination
    // step multiplies through by lc(q)^2 > 0, so signs at any point are those of
    // the true remainder. Content is stripped (sign kept) to limit growth.
    if (q.is_zero()) throw ZeroPolynomial();
    const BigInt& lq = q.leading();
    const BigInt lq2 = lq * lq;
    IntPoly r = p;
    while (!r.is_zero() && r.degree() >= q.degree()) {
        std::size_t off = static_cast<std::size_t>(r.degree() - q.degree());
        IntPoly step = r.scaled(lq2) - IntPoly::monomial(r.leading() * lq, off) * q;
        r = step.is_zero() ? IntPoly{} : step.primitive();
    }
    return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly{} : b.primitive_positive().scaled(b.content());
    if (b.is_zero()) return a.primitive_positive().scaled(a.content());
    BigInt cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPoly u = a.primitive_positive();
    IntPoly v = b.primitive_positive();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v).primitive_positive();
        u = v;
        v = r;
    }
    return u.primitive_positive().scaled(cg);
}

BigRat IntPoly::root_bound() const {
    if (is_zero()) throw ZeroPolynomial();
    if (degree() == 0) return BigRat(0);
    BigInt m(0);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        BigInt v = ::abs(c_[i]);
        if (v > m) m = v;
    }
    BigInt lead = ::abs(c_.back());
    return BigRat(1) + BigRat(m, lead);
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (sgn(c_[i]) == 0) continue;
        BigInt v = c_[i];
        bool first = s.empty();
        if (!first) s += sgn(v) < 0 ? " - " : " + ";
        else if (sgn(v) < 0) s += "-";
        BigInt av = ::abs(v);
        bool unit = (av == 1) && i > 0;
        if (!unit) s += av.get_str();
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace seqcert
