#include "ratsode/ratfunc.hpp"

#include <stdexcept>

namespace ratsode {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(Rational(1));
        return;
    }
    if (den_.is_constant()) {
        Rational inv = den_.constant_value().inverse();
        num_ *= inv;
        den_ = MultiPoly(Rational(1));
        return;
    }
    MultiPoly g = gcd_all(num_, den_);
    if (!g.is_constant()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    Rational lc = den_.leading_coeff_graded();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(Rational(1));
    if (is_zero()) {
        if (e < 0) throw std::domain_error("RatFunc: negative power of zero");
        return RatFunc();
    }
    unsigned m = static_cast<unsigned>(e < 0 ? -e : e);
    RatFunc out(num_.pow(m), den_.pow(m));
    return e < 0 ? out.inverse() : out;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative(Var v) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFunc RatFunc::subst(Var v, const RatFunc& value) const {
    RatFunc n = subst_ratfunc(num_, v, value);
    RatFunc d = subst_ratfunc(den_, v, value);
    if (d.is_zero()) throw std::domain_error("RatFunc: substitution makes denominator vanish");
    return n / d;
}

RatFunc subst_ratfunc(const MultiPoly& p, Var v, const RatFunc& value) {
    int d = p.degree(v);
    if (d <= 0) return RatFunc(p);
    RatFunc acc;
    for (int k = d; k >= 0; --k) {
        acc = acc * value + RatFunc(p.coeff_of(v, k));
    }
    return acc;
}

}  // namespace ratsode
