#include "ratsode/reduction.hpp"

namespace ratsode {

LeadingCoeffCheck leading_coeff_check(const MultiPoly& F) {
    int m = F.degree(Var::wp);
    MultiPoly a0 = F.coeff_of(Var::wp, m);
    LeadingCoeffCheck out;
    out.A0 = a0;
    out.pass = a0.degree(Var::w) <= 0;
    return out;
}

TParamODE derive_param_ode(const Parametrization& p) {
    RatFunc dr1_dt = p.r1.derivative(Var::t);
    if (dr1_dt.is_zero()) throw std::domain_error("derive_param_ode: r1 constant in t");
    RatFunc rhs = (p.r2 - p.r1.derivative(Var::z)) / dr1_dt;
    return TParamODE{rhs};
}

RiccatiODE cast_to_riccati(const TParamODE& ode) {
    const MultiPoly& num = ode.rhs.num();
    const MultiPoly& den = ode.rhs.den();
    if (den.depends_on(Var::t)) {
        throw FuchsViolation("dt/dz has t in the denominator: not a Riccati equation");
    }
    if (num.degree(Var::t) > 2) {
        throw FuchsViolation("dt/dz has degree " + std::to_string(num.degree(Var::t)) +
                             " in t: not a Riccati equation");
    }
    RiccatiODE out;
    out.A = RatFunc(num.coeff_of(Var::t, 2), den);
    out.B = RatFunc(num.coeff_of(Var::t, 1), den);
    out.C = RatFunc(num.coeff_of(Var::t, 0), den);
    return out;
}

bool chain_is_sound(const RiccatiODE& rc, const NormalizeResult& nr) {
    if (nr.linear_case) return true;
    // t = -(v + beta)/A; replace v' by r - v^2 in t' and compare against
    // A t^2 + B t + C as rational functions in (z, v).
    RatFunc v = RatFunc::variable(Var::v);
    const RatFunc& beta = nr.chain.u_from_v->beta;
    const RatFunc& A = rc.A;
    RatFunc t = -(v + beta) / A;
    // t' = -(v' + beta')/A + (v + beta) A'/A^2 with v' = r - v^2.
    RatFunc vprime = nr.r - v * v;
    RatFunc tprime = -(vprime + beta.derivative(Var::z)) / A +
                     (v + beta) * A.derivative(Var::z) / (A * A);
    RatFunc rhs = A * t * t + rc.B * t + rc.C;
    return (tprime - rhs).is_zero();
}

NormalizeResult normalize_riccati(const RiccatiODE& rc) {
    NormalizeResult out;
    if (rc.A.is_zero()) {
        out.linear_case = true;
        out.B = rc.B;
        out.C = rc.C;
        return out;
    }
    RatFunc btilde = rc.B + rc.A.derivative(Var::z) / rc.A;
    RatFunc beta = btilde / RatFunc(Rational(2));
    RatFunc r = btilde * btilde / RatFunc(Rational(4)) -
                btilde.derivative(Var::z) / RatFunc(Rational(2)) - rc.A * rc.C;
    out.r = r;
    out.chain.u_from_v = SubstitutionChain::UFromV{beta};
    out.chain.t_from_u = SubstitutionChain::TFromU{rc.A};
    out.chain.normal_r = r;
    if (!chain_is_sound(rc, out)) {
        throw std::logic_error("normalize_riccati: substitution chain failed its identity check");
    }
    return out;
}

RatFunc back_substitute(const SubstitutionChain& chain, const RatFunc& inner_general) {
    RatFunc cur = inner_general;
    if (chain.u_from_v) {
        cur = cur + chain.u_from_v->beta;  // u = v + beta
    }
    if (chain.t_from_u) {
        if (chain.t_from_u->A.is_zero()) throw DegenerateSolution("back_substitute: A vanishes");
        cur = -cur / chain.t_from_u->A;  // t = -u/A
    }
    if (chain.w_from_t) {
        const RatFunc& r1 = chain.w_from_t->r1;
        RatFunc num = subst_ratfunc(r1.num(), Var::t, cur);
        RatFunc den = subst_ratfunc(r1.den(), Var::t, cur);
        if (den.is_zero()) {
            throw DegenerateSolution("back_substitute: parametrization denominator vanishes on the family");
        }
        cur = num / den;  // w = r1(t, z)
    }
    return cur;
}

}  // namespace ratsode
