#pragma once

#include <utility>
#include <vector>

#include "ratsode/unipoly.hpp"

namespace ratsode {

// Simple algebraic extension Q[alpha]/(q), q monic irreducible over Q.
// Elements are polynomials in alpha of degree < deg(q). The trivial field Q
// itself is the degree-1 instance with q = alpha (so alpha = 0); all code
// paths treat it uniformly.
class NumberField {
public:
    using Elem = UPoly;  // reduced representative, deg < degree()

    NumberField();  // the trivial field Q
    explicit NumberField(UPoly monic_irreducible, bool check_irreducible = true);
    static NumberField rationals();

    int degree() const { return up::degree(q_); }
    const UPoly& min_poly() const { return q_; }
    bool is_trivial() const { return degree() == 1; }

    Elem from_rational(const Rational& c) const { return up::constant(c); }
    Elem generator() const;
    Elem reduce(const UPoly& p) const;

    bool is_zero(const Elem& a) const { return up::is_zero(a); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_rational(const Elem& a) const { return up::degree(a) <= 0; }
    Rational to_rational(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const { return up::add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return up::sub(a, b); }
    Elem neg(const Elem& a) const { return up::neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(up::mul(a, b)); }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, unsigned e) const;

    // Evaluate a rational-coefficient polynomial at an element of the field.
    Elem eval_at(const UPoly& rational_poly, const Elem& at) const;

private:
    UPoly q_;
};

// Univariate polynomials over a number field, coefficients ascending.
using KPoly = std::vector<NumberField::Elem>;

namespace kp {

void trim(const NumberField& K, KPoly& p);
int degree(const KPoly& p);
bool is_zero(const KPoly& p);
KPoly from_qpoly(const NumberField& K, const UPoly& p);
KPoly constant(const NumberField& K, const NumberField::Elem& c);
KPoly add(const NumberField& K, const KPoly& a, const KPoly& b);
KPoly sub(const NumberField& K, const KPoly& a, const KPoly& b);
KPoly mul(const NumberField& K, const KPoly& a, const KPoly& b);
KPoly scale(const NumberField& K, const KPoly& a, const NumberField::Elem& c);
KPoly monic(const NumberField& K, const KPoly& a);
void divrem(const NumberField& K, const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);
KPoly gcd(const NumberField& K, const KPoly& a, const KPoly& b);  // monic
KPoly derivative(const NumberField& K, const KPoly& a);
NumberField::Elem eval(const NumberField& K, const KPoly& a, const NumberField::Elem& at);
KPoly pow(const NumberField& K, const KPoly& a, unsigned e);

}  // namespace kp

// Squarefree part (radical) of p over K.
KPoly squarefree_part_over(const NumberField& K, const KPoly& p);

// Trager's algorithm: factor a squarefree polynomial over K into monic
// irreducible factors, by factoring a squarefree norm over Q.
std::vector<KPoly> factor_squarefree_over(const NumberField& K, const KPoly& p);

// Simple extension of K by a root theta of an irreducible tau in K[t],
// flattened to a single extension L of Q via a primitive element.
struct Extension {
    NumberField L;
    NumberField::Elem alpha;  // image in L of K's generator
    NumberField::Elem theta;  // root of tau in L
};
Extension extend_by_root(const NumberField& K, const KPoly& tau);

// Bivariate image of p in Q[main, gen]: coefficient i of p contributes
// rep_i(gen) * main^i. Used by norm computations.
MultiPoly kpoly_to_bivariate(const KPoly& p, Var main, Var gen);

}  // namespace ratsode
