#include "ratsode/numberfield.hpp"

#include <stdexcept>

namespace ratsode {

NumberField::NumberField() : q_(up::identity()) {}

NumberField::NumberField(UPoly monic_irreducible, bool check_irreducible) : q_(std::move(monic_irreducible)) {
    up::trim(q_);
    if (up::degree(q_) < 1) throw std::domain_error("NumberField: minimal polynomial must be non-constant");
    if (!q_.back().is_one()) q_ = up::monic(q_);
    if (check_irreducible && up::degree(q_) > 1) {
        auto fact = factor_univariate_q(q_);
        if (fact.factors.size() != 1 || fact.factors[0].second != 1) {
            throw std::domain_error("NumberField: minimal polynomial is reducible");
        }
    }
}

NumberField NumberField::rationals() {
    return NumberField(up::identity(), false);
}

NumberField::Elem NumberField::generator() const {
    return reduce(up::identity());
}

NumberField::Elem NumberField::reduce(const UPoly& p) const {
    if (up::degree(p) < degree()) {
        UPoly r = p;
        up::trim(r);
        return r;
    }
    UPoly q, r;
    up::divrem(p, q_, q, r);
    return r;
}

Rational NumberField::to_rational(const Elem& a) const {
    if (up::is_zero(a)) return Rational(0);
    if (up::degree(a) > 0) throw std::logic_error("NumberField: element is not rational");
    return a[0];
}

NumberField::Elem NumberField::inv(const Elem& a) const {
    if (up::is_zero(a)) throw std::domain_error("NumberField: inverse of zero");
    UPoly g, s, t;
    up::ext_gcd(a, q_, g, s, t);
    if (up::degree(g) != 0) throw std::logic_error("NumberField: non-invertible element (reducible modulus?)");
    return reduce(s);
}

NumberField::Elem NumberField::pow(const Elem& a, unsigned e) const {
    Elem result = from_rational(Rational(1));
    Elem base = a;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1u;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

NumberField::Elem NumberField::eval_at(const UPoly& rational_poly, const Elem& at) const {
    Elem acc;
    for (size_t i = rational_poly.size(); i-- > 0;) {
        acc = mul(acc, at);
        acc = add(acc, from_rational(rational_poly[i]));
    }
    return acc;
}

namespace kp {

void trim(const NumberField& K, KPoly& p) {
    while (!p.empty() && K.is_zero(p.back())) p.pop_back();
}

int degree(const KPoly& p) {
    return static_cast<int>(p.size()) - 1;
}

bool is_zero(const KPoly& p) {
    return p.empty();
}

KPoly from_qpoly(const NumberField& K, const UPoly& p) {
    KPoly out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = K.from_rational(p[i]);
    trim(K, out);
    return out;
}

KPoly constant(const NumberField& K, const NumberField::Elem& c) {
    if (K.is_zero(c)) return {};
    return {c};
}

KPoly add(const NumberField& K, const KPoly& a, const KPoly& b) {
    KPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] = K.add(out[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) out[i] = K.add(out[i], b[i]);
    trim(K, out);
    return out;
}

KPoly sub(const NumberField& K, const KPoly& a, const KPoly& b) {
    KPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] = K.add(out[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) out[i] = K.sub(out[i], b[i]);
    trim(K, out);
    return out;
}

KPoly mul(const NumberField& K, const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = K.add(out[i + j], K.mul(a[i], b[j]));
        }
    }
    trim(K, out);
    return out;
}

KPoly scale(const NumberField& K, const KPoly& a, const NumberField::Elem& c) {
    if (K.is_zero(c)) return {};
    KPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = K.mul(a[i], c);
    trim(K, out);
    return out;
}

KPoly monic(const NumberField& K, const KPoly& a) {
    if (a.empty()) return a;
    return scale(K, a, K.inv(a.back()));
}

void divrem(const NumberField& K, const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
    if (b.empty()) throw std::domain_error("KPoly: division by zero");
    r = a;
    trim(K, r);
    q.clear();
    int db = degree(b);
    if (degree(r) >= db) q.assign(static_cast<size_t>(degree(r) - db) + 1, NumberField::Elem{});
    NumberField::Elem lb = K.inv(b.back());
    while (degree(r) >= db) {
        int k = degree(r) - db;
        NumberField::Elem c = K.mul(r.back(), lb);
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) {
            r[static_cast<size_t>(k + i)] =
                K.sub(r[static_cast<size_t>(k + i)], K.mul(c, b[static_cast<size_t>(i)]));
        }
        trim(K, r);
    }
    trim(K, q);
}

KPoly gcd(const NumberField& K, const KPoly& a, const KPoly& b) {
    KPoly x = a, y = b;
    trim(K, x);
    trim(K, y);
    while (!y.empty()) {
        KPoly q, r;
        divrem(K, x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.empty() ? x : monic(K, x);
}

KPoly derivative(const NumberField& K, const KPoly& a) {
    if (a.size() <= 1) return {};
    KPoly out(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) {
        out[i - 1] = K.mul(a[i], K.from_rational(Rational(static_cast<long>(i))));
    }
    trim(K, out);
    return out;
}

NumberField::Elem eval(const NumberField& K, const KPoly& a, const NumberField::Elem& at) {
    NumberField::Elem acc;
    for (size_t i = a.size(); i-- > 0;) {
        acc = K.mul(acc, at);
        acc = K.add(acc, a[i]);
    }
    return acc;
}

KPoly pow(const NumberField& K, const KPoly& a, unsigned e) {
    KPoly result = constant(K, K.from_rational(Rational(1)));
    KPoly base = a;
    while (e > 0) {
        if (e & 1u) result = mul(K, result, base);
        e >>= 1u;
        if (e > 0) base = mul(K, base, base);
    }
    return result;
}

}  // namespace kp

KPoly squarefree_part_over(const NumberField& K, const KPoly& p) {
    if (kp::is_zero(p)) return p;
    KPoly d = kp::derivative(K, p);
    if (kp::is_zero(d)) return kp::constant(K, K.from_rational(Rational(1)));
    KPoly g = kp::gcd(K, p, d);
    KPoly q, r;
    kp::divrem(K, p, g, q, r);
    return kp::monic(K, q);
}

MultiPoly kpoly_to_bivariate(const KPoly& p, Var main, Var gen) {
    MultiPoly out;
    for (size_t i = 0; i < p.size(); ++i) {
        MultiPoly ci = up::to_multipoly(p[i], gen);
        out += ci * MultiPoly::variable(main).pow(static_cast<unsigned>(i));
    }
    return out;
}

std::vector<KPoly> factor_squarefree_over(const NumberField& K, const KPoly& p) {
    KPoly f = kp::monic(K, p);
    if (kp::degree(f) <= 0) return {};
    if (kp::degree(f) == 1) return {f};

    if (K.is_trivial()) {
        // Base field: coefficients are plain rationals.
        UPoly q(f.size());
        for (size_t i = 0; i < f.size(); ++i) q[i] = K.to_rational(f[i]);
        std::vector<KPoly> out;
        for (const auto& [fac, mult] : factor_univariate_q(q).factors) {
            (void)mult;  // squarefree input
            out.push_back(kp::from_qpoly(K, fac));
        }
        return out;
    }

    // Trager: find an integer shift s such that the norm
    //   N_s(y) = Res_x(q(x), f(y - s*x))  is squarefree over Q;
    // then the factors of f are gcd_K(f, N_i(y + s*alpha)) over the
    // irreducible Q-factors N_i of the norm.
    const Var xv = Var::u, yv = Var::v;
    MultiPoly qx = up::to_multipoly(K.min_poly(), xv);
    for (long s = 0;; s = (s > 0 ? -s : -s + 1)) {
        MultiPoly fb = kpoly_to_bivariate(f, yv, xv);
        if (s != 0) {
            MultiPoly shifted = MultiPoly::variable(yv) - Rational(s) * MultiPoly::variable(xv);
            fb = fb.subst(yv, shifted);
        }
        if (!fb.depends_on(xv)) continue;  // rational coefficients; the shift must mix in alpha
        MultiPoly norm_mp = resultant(qx, fb, xv);
        UPoly norm = up::from_multipoly(norm_mp, yv);
        if (up::degree(norm) != K.degree() * kp::degree(f)) continue;  // degenerate shift
        if (up::degree(up::gcd(norm, up::derivative(norm))) != 0) continue;

        auto norm_factors = factor_univariate_q(norm);
        std::vector<KPoly> out;
        for (const auto& [nf, mult] : norm_factors.factors) {
            (void)mult;
            // candidate = gcd_K(f, nf(y + s*alpha))
            KPoly shifted_nf;
            {
                KPoly ypluss = {K.mul(K.from_rational(Rational(s)), K.generator()),
                                K.from_rational(Rational(1))};
                kp::trim(K, ypluss);
                KPoly acc;
                for (size_t i = nf.size(); i-- > 0;) {
                    acc = kp::mul(K, acc, ypluss);
                    acc = kp::add(K, acc, kp::constant(K, K.from_rational(nf[i])));
                }
                shifted_nf = acc;
            }
            KPoly g = kp::gcd(K, f, shifted_nf);
            if (kp::degree(g) > 0) out.push_back(g);
        }
        // Sanity: the factors must multiply back to f.
        KPoly prod = kp::constant(K, K.from_rational(Rational(1)));
        for (const auto& g : out) prod = kp::mul(K, prod, g);
        if (kp::degree(prod) == kp::degree(f)) return out;
        // Unlucky shift (factors collided); try the next one.
    }
}

Extension extend_by_root(const NumberField& K, const KPoly& tau) {
    KPoly tm = kp::monic(K, tau);
    if (kp::degree(tm) < 1) throw std::domain_error("extend_by_root: constant polynomial");

    if (K.is_trivial()) {
        if (kp::degree(tm) == 1) {
            // Root already rational.
            Extension ext{NumberField::rationals(), {}, {}};
            ext.alpha = ext.L.from_rational(Rational(0));
            ext.theta = ext.L.neg(tm[0]);
            return ext;
        }
        UPoly q(tm.size());
        for (size_t i = 0; i < tm.size(); ++i) q[i] = K.to_rational(tm[i]);
        NumberField L(q, false);  // irreducible by caller contract
        Extension ext{L, {}, {}};
        ext.alpha = L.from_rational(Rational(0));
        ext.theta = L.generator();
        return ext;
    }
    if (kp::degree(tm) == 1) {
        Extension ext{K, {}, {}};
        ext.alpha = K.generator();
        ext.theta = K.neg(tm[0]);
        return ext;
    }

    // Primitive element gamma = theta + s*alpha; its minimal polynomial over Q
    // is the squarefree norm of tau under the shift s.
    const Var xv = Var::u, yv = Var::v;
    MultiPoly qx = up::to_multipoly(K.min_poly(), xv);
    for (long s = 1;; s = (s > 0 ? -s : -s + 1)) {
        MultiPoly taub = kpoly_to_bivariate(tm, yv, xv);
        MultiPoly shifted = MultiPoly::variable(yv) - Rational(s) * MultiPoly::variable(xv);
        taub = taub.subst(yv, shifted);
        if (!taub.depends_on(xv)) continue;
        MultiPoly norm_mp = resultant(qx, taub, xv);
        UPoly norm = up::from_multipoly(norm_mp, yv);
        if (up::degree(norm) != K.degree() * kp::degree(tm)) continue;
        if (up::degree(up::gcd(norm, up::derivative(norm))) != 0) continue;

        NumberField L(up::monic(norm), false);  // irreducible: norm of an irreducible
        // alpha in L: the unique common root of q(x) and tau~(gamma - s*x, x).
        KPoly qL = kp::from_qpoly(L, K.min_poly());
        // Build tau~(gamma - s*x, x) in L[x] from the bivariate image of tau.
        MultiPoly taub2 = kpoly_to_bivariate(tm, yv, xv);
        KPoly gx;  // gamma - s*x over L
        gx = {L.generator(), L.from_rational(Rational(-s))};
        KPoly other;
        {
            // Substitute yv -> gx, xv -> x into taub2 over L[x].
            KPoly acc;
            int dy = taub2.degree(yv);
            for (int j = dy; j >= 0; --j) {
                MultiPoly cj = taub2.coeff_of(yv, j);  // polynomial in xv over Q
                KPoly cjL = kp::from_qpoly(L, up::from_multipoly(cj, xv));
                acc = kp::mul(L, acc, gx);
                acc = kp::add(L, acc, cjL);
            }
            other = acc;
        }
        KPoly g = kp::gcd(L, qL, other);
        if (kp::degree(g) != 1) continue;  // non-separating shift
        NumberField::Elem alpha = L.neg(L.div(g[0], g[1]));
        NumberField::Elem theta = L.sub(L.generator(), L.mul(L.from_rational(Rational(s)), alpha));
        return Extension{L, alpha, theta};
    }
}

}  // namespace ratsode
