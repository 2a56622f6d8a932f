#include "ratsode/parametrize.hpp"

#include <set>

#include "ratsode/errors.hpp"
#include "ratsode/expr.hpp"
#include "ratsode/unipoly.hpp"

namespace ratsode {

namespace {

// Coefficients (as rational functions of t and z) of
// F(z, x0 + u, y0 + t*u) as a polynomial in u. Grading by u along the
// pencil of slope t measures the multiplicity of (x0, y0) on the curve.
std::vector<RatFunc> pencil_coeffs(const MultiPoly& f, const RatFunc& x0, const RatFunc& y0) {
    RatFunc xline = x0 + RatFunc::variable(Var::u);
    RatFunc yline = y0 + RatFunc::variable(Var::t) * RatFunc::variable(Var::u);
    RatFunc sub = subst_ratfunc(f, Var::x, xline).subst(Var::y, yline);
    const MultiPoly& num = sub.num();
    const MultiPoly& den = sub.den();
    if (den.depends_on(Var::u)) throw std::logic_error("pencil_coeffs: denominator involves u");
    int d = num.degree(Var::u);
    std::vector<RatFunc> out;
    for (int k = 0; k <= d; ++k) {
        out.emplace_back(RatFunc(num.coeff_of(Var::u, k), den));
    }
    return out;
}

// Exact square root of a univariate polynomial in z over Q, if any.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
    if (p.is_zero()) return MultiPoly();
    if (p.leading_coeff_graded().sign() < 0) return std::nullopt;
    Rational cont = p.content();
    auto csqrt_num = cont.numerator();
    auto csqrt_den = cont.denominator();
    if (mpz_perfect_square_p(csqrt_num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(csqrt_den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), csqrt_num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), csqrt_den.get_mpz_t());
    MultiPoly root{Rational(rn, rd)};
    MultiPoly prim = p.primitive_rational();
    if (prim.is_constant()) return prim.constant_value().is_one() ? std::optional(root) : std::nullopt;
    for (const auto& [fac, mult] : squarefree_factor(prim)) {
        if (mult % 2 != 0) return std::nullopt;
        root *= fac.pow(static_cast<unsigned>(mult / 2));
    }
    // Squarefree factors are monic; fix the constant.
    auto q = divide_exact(p, root * root);
    if (!q || !q->is_constant()) return std::nullopt;
    Rational c = q->constant_value();
    auto cn = c.numerator(), cd = c.denominator();
    if (mpz_perfect_square_p(cn.get_mpz_t()) == 0 || mpz_perfect_square_p(cd.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), cn.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), cd.get_mpz_t());
    return root * Rational(sn, sd);
}

// Roots in Q(z) of a quadratic (or linear) a2 v^2 + a1 v + a0 with Q[z]
// coefficients: needs the discriminant to be a square in Q(z).
std::vector<RatFunc> quadratic_roots(const MultiPoly& a2, const MultiPoly& a1, const MultiPoly& a0) {
    std::vector<RatFunc> out;
    if (a2.is_zero()) {
        if (!a1.is_zero()) out.push_back(RatFunc(-a0, a1));
        return out;
    }
    MultiPoly disc = a1 * a1 - Rational(4) * a2 * a0;
    auto sq = poly_sqrt(disc);
    if (!sq) return out;
    RatFunc two_a2{a2 * Rational(2)};
    out.push_back(RatFunc(-a1 + *sq) / two_a2);
    if (!sq->is_zero()) out.push_back(RatFunc(-a1 - *sq) / two_a2);
    return out;
}

bool is_z_only(const MultiPoly& p) {
    for (Var v : p.vars()) {
        if (v != Var::z) return false;
    }
    return true;
}

}  // namespace

bool verify_parametrization(const MultiPoly& F, const RatFunc& r1, const RatFunc& r2) {
    RatFunc value = subst_ratfunc(F, Var::w, r1).subst(Var::wp, r2);
    return value.is_zero();
}

Parametrization make_parametrization(const MultiPoly& F, const RatFunc& r1, const RatFunc& r2,
                                     Parametrization::Source source) {
    if (!r1.depends_on(Var::t)) {
        throw std::domain_error("parametrization: r1 must be non-constant in t");
    }
    if (!verify_parametrization(F, r1, r2)) {
        throw std::domain_error("parametrization: F(z, r1, r2) does not vanish");
    }
    return Parametrization{r1, r2, source};
}

std::vector<RatFunc> rational_roots_z(const MultiPoly& p, Var xvar) {
    std::vector<RatFunc> roots;
    int m = p.degree(xvar);
    if (m < 1) return roots;

    MultiPoly work = p;
    // x = 0 roots first.
    while (work.coeff_of(xvar, 0).is_zero() && work.degree(xvar) > 0) {
        auto q = divide_exact(work, MultiPoly::variable(xvar));
        work = *q;
        if (roots.empty()) roots.push_back(RatFunc());
    }
    m = work.degree(xvar);
    if (m < 1) return roots;

    MultiPoly a0 = work.coeff_of(xvar, 0);
    MultiPoly am = work.leading_coeff(xvar);
    if (!is_z_only(a0) || !is_z_only(am)) {
        throw std::domain_error("rational_roots_z: coefficients must lie in Q[z]");
    }

    // Divisor shapes N(z) | a0, D(z) | am from the irreducible factorizations.
    auto divisors = [](const MultiPoly& a) {
        std::vector<MultiPoly> out{MultiPoly(Rational(1))};
        if (a.is_constant()) return out;
        auto fact = factor_univariate(a);
        for (const auto& [q, mult] : fact.factors) {
            std::vector<MultiPoly> next;
            for (const auto& d : out) {
                MultiPoly power{Rational(1)};
                for (int e = 0; e <= mult; ++e) {
                    next.push_back(d * power);
                    if (e < mult) power *= q;
                }
            }
            out = std::move(next);
            if (out.size() > 512) throw ResourceCapError("rational_roots_z: divisor explosion");
        }
        return out;
    };
    std::vector<MultiPoly> Ns = divisors(a0), Ds = divisors(am);

    // Specialization point for the scalar multiplier.
    Rational zstar;
    {
        long v = 1;
        while (true) {
            zstar = Rational(v);
            if (!am.subst(Var::z, zstar).is_zero()) break;
            v = v > 0 ? -v : -v + 1;
        }
    }

    std::set<std::string> emitted;
    for (const auto& N : Ns) {
        for (const auto& D : Ds) {
            // Candidate x0 = kappa * N / D; kappa rational constant.
            // q(kappa) := p(kappa N / D) * D^m specialized at z = zstar.
            RatFunc shape = RatFunc(N, D);
            // Build the kappa-polynomial at z = zstar.
            UPoly kq(static_cast<size_t>(m) + 1, Rational(0));
            Rational Nv = N.subst(Var::z, zstar).constant_value();
            Rational Dv = D.subst(Var::z, zstar).constant_value();
            if (Nv.is_zero()) continue;
            for (int i = 0; i <= m; ++i) {
                Rational ai = work.coeff_of(xvar, i).subst(Var::z, zstar).constant_value();
                kq[static_cast<size_t>(i)] = ai * Nv.pow(i) * Dv.pow(m - i);
            }
            up::trim(kq);
            if (up::is_zero(kq)) continue;
            if (up::degree(kq) < 1) continue;
            for (const auto& [fac, mult] : factor_univariate_q(kq).factors) {
                (void)mult;
                if (up::degree(fac) != 1) continue;
                Rational kappa = -fac[0];
                if (kappa.is_zero()) continue;
                RatFunc cand = RatFunc(MultiPoly(kappa)) * shape;
                if (!subst_ratfunc(work, xvar, cand).is_zero()) continue;
                std::string key = render_expr(cand);
                if (emitted.insert(key).second) roots.push_back(cand);
            }
        }
    }
    return roots;
}

AutoParamOutcome auto_parametrize(const MultiPoly& F) {
    // Work in curve coordinates (x, y) over Q(z).
    MultiPoly f = rename_var(rename_var(F, Var::w, Var::x), Var::wp, Var::y);
    int d = f.total_degree({Var::x, Var::y});
    if (d < 1) return {std::nullopt, "curve has no (x, y) part"};

    RatFunc tvar = RatFunc::variable(Var::t);

    if (d == 1) {
        MultiPoly A = f.coeff_of(Var::x, 1), B = f.coeff_of(Var::y, 1);
        MultiPoly C = f.coeff_of(Var::x, 0).coeff_of(Var::y, 0);
        if (B.is_zero()) return {std::nullopt, "line is vertical: w is constant on the curve"};
        RatFunc r1 = tvar;
        RatFunc r2 = RatFunc(-(A * MultiPoly::variable(Var::t) + C), B);
        return {make_parametrization(F, r1, r2, Parametrization::Source::builtin_line), ""};
    }

    if (d == 2) {
        // A rational point, then the pencil of lines through it.
        std::optional<std::pair<RatFunc, RatFunc>> point;
        auto try_point = [&](const RatFunc& x0, const RatFunc& y0) {
            if (point) return;
            RatFunc v = subst_ratfunc(f, Var::x, x0).subst(Var::y, y0);
            if (v.is_zero()) point = std::make_pair(x0, y0);
        };
        // Axis intercepts.
        {
            MultiPoly g = f.subst(Var::y, Rational(0));  // f(x, 0)
            for (const auto& r : quadratic_roots(g.coeff_of(Var::x, 2), g.coeff_of(Var::x, 1),
                                                 g.coeff_of(Var::x, 0))) {
                try_point(r, RatFunc());
            }
            MultiPoly h = f.subst(Var::x, Rational(0));
            for (const auto& r : quadratic_roots(h.coeff_of(Var::y, 2), h.coeff_of(Var::y, 1),
                                                 h.coeff_of(Var::y, 0))) {
                try_point(RatFunc(), r);
            }
        }
        // Points above small rationals x0 = n/dd (bounded search).
        if (!point) {
            for (long dd = 1; dd <= 20 && !point; ++dd) {
                for (long n = -20; n <= 20 && !point; ++n) {
                    if (gcd(mpz_class(n), mpz_class(dd)) != 1) continue;
                    Rational x0(n, dd);
                    MultiPoly g = f.subst(Var::x, x0);
                    for (const auto& r : quadratic_roots(g.coeff_of(Var::y, 2), g.coeff_of(Var::y, 1),
                                                         g.coeff_of(Var::y, 0))) {
                        try_point(RatFunc(MultiPoly(x0)), r);
                        if (point) break;
                    }
                }
            }
        }
        if (point) {
            auto coeffs = pencil_coeffs(f, point->first, point->second);
            if (coeffs.size() >= 3 && !coeffs[0].is_zero()) {
                return {std::nullopt, "internal: point not on conic"};
            }
            if (coeffs.size() < 3 || coeffs[2].is_zero()) {
                return {std::nullopt, "conic pencil degenerates"};
            }
            if (coeffs[1].is_zero()) {
                return {std::nullopt, "rational point is singular: conic is a line pair"};
            }
            RatFunc s = -coeffs[1] / coeffs[2];
            RatFunc r1 = point->first + s;
            RatFunc r2 = point->second + tvar * s;
            if (!r1.depends_on(Var::t)) return {std::nullopt, "conic parametrization collapsed"};
            return {make_parametrization(F, r1, r2, Parametrization::Source::builtin_conic), ""};
        }
        // Rational point at infinity: direction y = m x with f2(1, m) = 0,
        // parametrized by the parallel pencil y = m x + t.
        MultiPoly f2x = f.coeff_of(Var::x, 2).coeff_of(Var::y, 0);
        MultiPoly fxy = f.coeff_of(Var::x, 1).coeff_of(Var::y, 1);
        MultiPoly f2y = f.coeff_of(Var::y, 2).coeff_of(Var::x, 0);
        for (const RatFunc& mdir : quadratic_roots(f2y, fxy, f2x)) {
            // substitute y = m x + t: linear in x when m kills the top form
            RatFunc mline = mdir * RatFunc::variable(Var::x) + tvar;
            RatFunc sub = subst_ratfunc(f, Var::y, mline);
            MultiPoly num = sub.num();
            if (num.degree(Var::x) != 1) continue;
            RatFunc x0 = RatFunc(-num.coeff_of(Var::x, 0), num.coeff_of(Var::x, 1));
            RatFunc r1 = x0;
            RatFunc r2 = mdir * x0 + tvar;
            if (!r1.depends_on(Var::t)) continue;
            return {make_parametrization(F, r1, r2, Parametrization::Source::builtin_conic), ""};
        }
        // Vertical direction: top form missing y^2, pencil x = t.
        if (f2y.is_zero()) {
            MultiPoly g = rename_var(f, Var::x, Var::t);  // f(t, y)
            if (g.degree(Var::y) == 1) {
                RatFunc r2 = RatFunc(-g.coeff_of(Var::y, 0), g.coeff_of(Var::y, 1));
                return {make_parametrization(F, tvar, r2, Parametrization::Source::builtin_conic), ""};
            }
        }
        return {std::nullopt, "no rational point found on the conic (bounded search)"};
    }

    // d >= 3: monoid route. The (d-1)-fold point is a common zero of all
    // order-(d-2) partial derivatives (conics over Q(z)).
    std::vector<MultiPoly> partials;
    {
        std::vector<MultiPoly> level{f};
        for (int step = 0; step < d - 2; ++step) {
            std::vector<MultiPoly> next;
            for (size_t i = 0; i < level.size(); ++i) {
                if (i == 0) next.push_back(level[i].derivative(Var::x));
                next.push_back(level[i].derivative(Var::y));
            }
            level = std::move(next);
        }
        partials = std::move(level);
    }
    // Two independent partials cut out finitely many candidates.
    std::vector<RatFunc> xs;
    bool found_pair = false;
    for (size_t i = 0; i < partials.size() && !found_pair; ++i) {
        for (size_t j = i + 1; j < partials.size() && !found_pair; ++j) {
            const MultiPoly &P = partials[i], &Q = partials[j];
            if (P.is_zero() || Q.is_zero()) continue;
            if (P.degree(Var::y) < 1 || Q.degree(Var::y) < 1) {
                // One of them is y-free: its x-roots are the candidates.
                const MultiPoly& yfree = P.degree(Var::y) < 1 ? P : Q;
                if (yfree.degree(Var::x) < 1) continue;
                xs = rational_roots_z(yfree, Var::x);
                found_pair = true;
                break;
            }
            MultiPoly R = resultant(P, Q, Var::y);
            if (R.is_zero()) continue;  // share a component; try another pair
            if (R.degree(Var::x) < 1) continue;
            xs = rational_roots_z(R, Var::x);
            found_pair = true;
        }
    }
    if (!found_pair) return {std::nullopt, "monoid point search found no usable partials"};

    for (const RatFunc& x0 : xs) {
        // y0: common rational root over Q(z) of the specialized partials.
        MultiPoly gy;  // gcd over Q(z)[y], cleared of denominators
        bool first = true;
        for (const MultiPoly& P : partials) {
            RatFunc sp = subst_ratfunc(P, Var::x, x0);
            if (sp.is_zero()) continue;
            MultiPoly cleared = sp.num();
            gy = first ? cleared : gcd_all(gy, cleared);
            first = false;
        }
        if (first) continue;
        std::vector<RatFunc> ys;
        if (gy.degree(Var::y) == 1) {
            ys.push_back(RatFunc(-gy.coeff_of(Var::y, 0), gy.coeff_of(Var::y, 1)));
        } else if (gy.degree(Var::y) > 1) {
            ys = rational_roots_z(gy, Var::y);
        }
        for (const RatFunc& y0 : ys) {
            auto coeffs = pencil_coeffs(f, x0, y0);
            if (static_cast<int>(coeffs.size()) != d + 1) continue;
            bool low_zero = true;
            for (int k = 0; k <= d - 2; ++k) {
                if (!coeffs[static_cast<size_t>(k)].is_zero()) {
                    low_zero = false;
                    break;
                }
            }
            if (!low_zero) continue;  // multiplicity below d-1
            const RatFunc& A = coeffs[static_cast<size_t>(d - 1)];
            const RatFunc& B = coeffs[static_cast<size_t>(d)];
            if (A.is_zero() || B.is_zero()) continue;
            RatFunc s = -A / B;
            RatFunc r1 = x0 + s;
            RatFunc r2 = y0 + tvar * s;
            if (!r1.depends_on(Var::t)) continue;
            return {make_parametrization(F, r1, r2, Parametrization::Source::builtin_monoid), ""};
        }
    }
    return {std::nullopt, "no (d-1)-fold point rational over Q(z): supply a parametrization"};
}

}  // namespace ratsode
