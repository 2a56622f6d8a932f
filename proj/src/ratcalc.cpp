#include "ratsode/ratcalc.hpp"

#include <stdexcept>

namespace ratsode {

namespace {

void check_univariate(const RatFunc& r, Var var, const char* who) {
    for (Var v : r.num().vars()) {
        if (v != var) throw std::domain_error(std::string(who) + ": input is not univariate");
    }
    for (Var v : r.den().vars()) {
        if (v != var) throw std::domain_error(std::string(who) + ": input is not univariate");
    }
}

}  // namespace

PartialFractions partial_fractions(const RatFunc& r, Var var) {
    check_univariate(r, var, "partial_fractions");
    PartialFractions out;
    out.var = var;

    UPoly num = up::from_multipoly(r.num(), var);
    UPoly den = up::from_multipoly(r.den(), var);
    UPoly quo, rem;
    up::divrem(num, den, quo, rem);
    out.poly_part = up::to_multipoly(quo, var);
    if (up::is_zero(rem)) return out;

    auto fact = factor_univariate(r.den());
    // Fold the constant content into the numerator.
    UPoly p = up::scale(rem, fact.content.inverse());

    for (const auto& [qmp, mult] : fact.factors) {
        UPoly q = up::from_multipoly(qmp, var);
        UPoly qk = up::pow(q, static_cast<unsigned>(mult));
        UPoly cofactor, check;
        up::divrem(up::scale(den, fact.content.inverse()), qk, cofactor, check);
        if (!up::is_zero(check)) throw std::logic_error("partial_fractions: factorization mismatch");
        // B = p * cofactor^{-1} mod q^mult, then expand B in q-adic digits.
        UPoly g, s, t;
        up::ext_gcd(cofactor, qk, g, s, t);
        if (up::degree(g) != 0) throw std::logic_error("partial_fractions: factors not coprime");
        UPoly qq, b;
        up::divrem(up::mul(p, up::scale(s, g[0].inverse())), qk, qq, b);
        // q-adic digits of B: B = sum digit_i q^i, deg(digit) < deg(q).
        int i = 0;
        while (!up::is_zero(b)) {
            UPoly digit, next;
            up::divrem(b, q, next, digit);  // digit = b mod q, next continues
            b = std::move(next);
            if (!up::is_zero(digit)) {
                PFTerm term;
                term.q = qmp;
                term.k = mult - i;
                term.numer = up::to_multipoly(digit, var);
                out.terms.push_back(std::move(term));
            }
            ++i;
        }
    }
    return out;
}

RatFunc reassemble(const PartialFractions& pf) {
    RatFunc acc{pf.poly_part};
    for (const auto& term : pf.terms) {
        acc += RatFunc(term.numer, term.q.pow(static_cast<unsigned>(term.k)));
    }
    return acc;
}

HermiteResult hermite_integrate(const RatFunc& r, Var var) {
    check_univariate(r, var, "hermite_integrate");
    HermiteResult out;
    out.rational_part = RatFunc();
    out.log_free = true;
    if (r.is_zero()) return out;

    auto integrate_poly = [&](const UPoly& p) {
        UPoly anti(p.size() + 1, Rational(0));
        for (size_t i = 0; i < p.size(); ++i) {
            anti[i + 1] = p[i] / Rational(static_cast<long>(i + 1));
        }
        up::trim(anti);
        out.rational_part += RatFunc(up::to_multipoly(anti, var));
    };

    PartialFractions pf = partial_fractions(r, var);
    if (!pf.poly_part.is_zero()) integrate_poly(up::from_multipoly(pf.poly_part, var));

    // Group terms per irreducible factor, highest order first.
    // For A/q^k (k >= 2), with s q + t q' = 1:
    //   A/q^k = As/q^{k-1} + A t q'/q^k,
    //   int A t q' / q^k = -At/((k-1) q^{k-1}) + int (At)'/((k-1) q^{k-1}).
    std::map<std::vector<Rational>, std::pair<UPoly, std::vector<UPoly>>> groups;
    for (const auto& term : pf.terms) {
        UPoly q = up::from_multipoly(term.q, var);
        auto& slot = groups[q];
        slot.first = q;
        if (slot.second.size() < static_cast<size_t>(term.k) + 1) {
            slot.second.resize(static_cast<size_t>(term.k) + 1);
        }
        slot.second[static_cast<size_t>(term.k)] =
            up::add(slot.second[static_cast<size_t>(term.k)], up::from_multipoly(term.numer, var));
    }

    for (auto& [key, slot] : groups) {
        const UPoly& q = slot.first;
        auto& work = slot.second;  // work[k] = numerator over q^k
        UPoly qp = up::derivative(q);
        UPoly g, s, t;
        up::ext_gcd(q, qp, g, s, t);  // irreducible q: g = 1
        if (up::degree(g) != 0) throw std::logic_error("hermite_integrate: non-squarefree factor");
        Rational ginv = g[0].inverse();
        s = up::scale(s, ginv);
        t = up::scale(t, ginv);

        for (int k = static_cast<int>(work.size()) - 1; k >= 2; --k) {
            UPoly n = work[static_cast<size_t>(k)];
            if (up::is_zero(n)) continue;
            Rational km1(static_cast<long>(k - 1));
            UPoly nt = up::mul(n, t);
            out.rational_part += RatFunc(up::to_multipoly(up::scale(nt, -km1.inverse()), var),
                                         up::to_multipoly(up::pow(q, static_cast<unsigned>(k - 1)), var));
            UPoly carry = up::add(up::mul(n, s), up::scale(up::derivative(nt), km1.inverse()));
            work[static_cast<size_t>(k - 1)] = up::add(work[static_cast<size_t>(k - 1)], carry);
            work[static_cast<size_t>(k)].clear();
        }
        if (work.size() > 1) {
            UPoly b = work[1];
            if (!up::is_zero(b)) {
                // Split off any polynomial portion; the proper remainder is the
                // residue content of this factor.
                UPoly u, bhat;
                up::divrem(b, q, u, bhat);
                if (!up::is_zero(u)) integrate_poly(u);
                if (!up::is_zero(bhat)) out.log_free = false;
            }
        }
    }

    // Normalize the integration constant away: drop the constant term of the
    // polynomial portion, so proper-fraction inputs integrate to something
    // vanishing at infinity.
    if (!out.rational_part.is_zero()) {
        UPoly num = up::from_multipoly(out.rational_part.num(), var);
        UPoly den = up::from_multipoly(out.rational_part.den(), var);
        UPoly quo, rem;
        up::divrem(num, den, quo, rem);
        if (!quo.empty() && !quo[0].is_zero()) {
            out.rational_part -= RatFunc(quo[0]);
        }
    }
    return out;
}

ResidueResult extension_residue(const RatFunc& r, const MultiPoly& q, int order, Var var) {
    check_univariate(r, var, "extension_residue");
    if (order < 1) throw std::domain_error("extension_residue: order must be >= 1");
    UPoly qp = up::monic(up::from_multipoly(q, var));
    if (up::degree(qp) < 1) throw std::domain_error("extension_residue: constant q");

    // Multiplicity of q in den(r).
    UPoly den = up::from_multipoly(r.den(), var);
    int mu = 0;
    UPoly rest = den;
    while (true) {
        UPoly quo, rem;
        up::divrem(rest, qp, quo, rem);
        if (!up::is_zero(rem)) break;
        rest = quo;
        ++mu;
    }
    if (mu < order) throw std::domain_error("extension_residue: q does not divide den(r) to that order");

    NumberField K = up::degree(qp) == 1 ? NumberField::rationals() : NumberField(qp);
    NumberField::Elem alpha =
        up::degree(qp) == 1 ? K.from_rational(-qp[0]) : K.generator();

    // den = (z-alpha)^mu * D^mu * rest  with D = q/(z-alpha) over K.
    // G := num / (D^mu * rest); the order-k coefficient is G^(mu-k)(alpha)/(mu-k)!.
    KPoly zma = {K.neg(alpha), K.from_rational(Rational(1))};
    KPoly qK = kp::from_qpoly(K, qp);
    KPoly D, remK;
    kp::divrem(K, qK, zma, D, remK);
    if (!kp::is_zero(remK)) throw std::logic_error("extension_residue: alpha is not a root of q");

    KPoly numK = kp::from_qpoly(K, up::from_multipoly(r.num(), var));
    KPoly denK = kp::mul(K, kp::pow(K, D, static_cast<unsigned>(mu)), kp::from_qpoly(K, rest));

    int derivs = mu - order;
    Rational factorial(1);
    for (int i = 2; i <= derivs; ++i) factorial *= Rational(i);
    for (int i = 0; i < derivs; ++i) {
        KPoly n1 = kp::sub(K, kp::mul(K, kp::derivative(K, numK), denK),
                           kp::mul(K, numK, kp::derivative(K, denK)));
        denK = kp::mul(K, denK, denK);
        numK = n1;
    }
    NumberField::Elem nv = kp::eval(K, numK, alpha);
    NumberField::Elem dv = kp::eval(K, denK, alpha);
    NumberField::Elem value = K.mul(K.div(nv, dv), K.from_rational(factorial.inverse()));
    return ResidueResult{K, value};
}

}  // namespace ratsode
