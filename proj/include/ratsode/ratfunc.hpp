#pragma once

#include "ratsode/multipoly.hpp"

namespace ratsode {

// Normalized rational function: gcd(num, den) = 1, den != 0, and den has
// leading coefficient 1 in the canonical term order. Equality of values is
// equality of representations.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    explicit RatFunc(MultiPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc variable(Var v) { return RatFunc(MultiPoly::variable(v)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(long e) const;
    RatFunc inverse() const;
    RatFunc derivative(Var v) const;
    RatFunc subst(Var v, const RatFunc& value) const;

private:
    void normalize();
    MultiPoly num_, den_;
};

// p with v replaced by the rational function value.
RatFunc subst_ratfunc(const MultiPoly& p, Var v, const RatFunc& value);

}  // namespace ratsode
