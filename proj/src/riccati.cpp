#include "ratsode/riccati.hpp"

#include <set>

#include "ratsode/errors.hpp"
#include "ratsode/expr.hpp"
#include "ratsode/ratcalc.hpp"

namespace ratsode {

namespace {

constexpr int kClusterCap = 16;

// Kernel basis of a homogeneous system (rows x cols) over Q, Gauss-Jordan.
std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> m, size_t cols) {
    size_t rows = m.size();
    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = m[rank][c].inverse();
        for (size_t j = 0; j < cols; ++j) m[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_of_col[c] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<std::vector<Rational>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[c] = Rational(1);
        for (size_t cc = 0; cc < cols; ++cc) {
            if (pivot_of_col[cc] >= 0) {
                v[cc] = -m[static_cast<size_t>(pivot_of_col[cc])][c];
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void check_z_only(const RatFunc& r, const char* who) {
    for (Var v : r.num().vars()) {
        if (v != Var::z) throw std::domain_error(std::string(who) + ": expected a function of z");
    }
    for (Var v : r.den().vars()) {
        if (v != Var::z) throw std::domain_error(std::string(who) + ": expected a function of z");
    }
}

RatFunc lambda_var() {
    return RatFunc::variable(Var::lambda);
}

}  // namespace

bool satisfies_normal_riccati(const RatFunc& v, const RatFunc& r) {
    return (v.derivative(Var::z) + v * v - r).is_zero();
}

PoleAnalysis analyze_poles(const RatFunc& r) {
    check_z_only(r, "analyze_poles");
    PoleAnalysis out;
    if (r.is_zero()) throw std::domain_error("analyze_poles: r must be nonzero");

    int deg_gap = r.num().degree(Var::z) - r.den().degree(Var::z);
    if (deg_gap > -2) {
        out.reason = "deg(num) - deg(den) = " + std::to_string(deg_gap) +
                     " violates clause (a): must be <= -2";
        return out;
    }
    auto fact = factor_univariate(r.den());
    if (fact.factors.size() > kClusterCap) {
        throw ResourceCapError("analyze_poles: more than 16 pole clusters");
    }
    for (const auto& [q, mult] : fact.factors) {
        if (mult > 2) {
            out.reason = "pole cluster " + render_expr(q) + " has order " + std::to_string(mult) +
                         ": violates clause (b): only double poles allowed";
            out.poles.clear();
            return out;
        }
        PoleDatum datum;
        datum.q = q;
        datum.mult = mult;
        auto res1 = extension_residue(r, q, 1);
        datum.field = res1.field;
        datum.gamma = res1.value;
        if (mult == 2) {
            auto res2 = extension_residue(r, q, 2);
            datum.beta = res2.value;
            if (!datum.field.is_rational(datum.beta)) {
                out.reason = "double pole at " + render_expr(q) +
                             " has non-rational beta: 4*beta = n^2 - 1 is impossible";
                out.poles.clear();
                return out;
            }
            datum.beta_rat = datum.field.to_rational(datum.beta);
            auto nsq = (Rational(4) * datum.beta_rat + Rational(1)).integer_sqrt_if_square();
            if (!nsq || *nsq < 2 || !mpz_class(*nsq).fits_slong_p()) {
                out.reason = "double pole at " + render_expr(q) + " has beta = " +
                             datum.beta_rat.str() + ": 4*beta = n^2 - 1 fails for integer n >= 2";
                out.poles.clear();
                return out;
            }
            datum.n = nsq->get_si();
        } else {
            datum.beta = datum.field.from_rational(Rational(0));
            datum.beta_rat = Rational(0);
        }
        out.poles.push_back(std::move(datum));
    }
    out.admissible = true;
    return out;
}

std::vector<MultiPoly> polynomial_solutions(const RatFunc& omega, const RatFunc& r, long d) {
    if (d < 0) throw std::domain_error("polynomial_solutions: d must be >= 0");
    RatFunc w = omega.derivative(Var::z) + omega * omega - r;
    RatFunc two_omega = omega * RatFunc(Rational(2));
    // Clear denominators: den * P'' + (2 omega den) P' + (W den) P = 0.
    MultiPoly den = two_omega.den() * w.den();
    RatFunc c1_rf = two_omega * RatFunc(den), c0_rf = w * RatFunc(den);
    if (!c1_rf.is_polynomial() || !c0_rf.is_polynomial()) {
        throw std::logic_error("polynomial_solutions: clearing denominators failed");
    }
    MultiPoly c2 = den;
    MultiPoly c1 = c1_rf.num();
    MultiPoly c0 = c0_rf.num();

    MultiPoly zv = MultiPoly::variable(Var::z);
    std::vector<MultiPoly> col_expr;
    int maxdeg = 0;
    for (long k = 0; k <= d; ++k) {
        MultiPoly e;
        if (k >= 2) {
            e += c2 * Rational(k * (k - 1)) * zv.pow(static_cast<unsigned>(k - 2));
        }
        if (k >= 1) {
            e += c1 * Rational(k) * zv.pow(static_cast<unsigned>(k - 1));
        }
        e += c0 * zv.pow(static_cast<unsigned>(k));
        maxdeg = std::max(maxdeg, e.degree(Var::z));
        col_expr.push_back(std::move(e));
    }
    size_t rows = static_cast<size_t>(maxdeg) + 1;
    size_t cols = static_cast<size_t>(d) + 1;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, Rational(0)));
    for (size_t k = 0; k < cols; ++k) {
        for (const auto& [mono, coef] : col_expr[k].terms()) {
            m[mono[static_cast<int>(Var::z)]][k] = coef;
        }
    }
    std::vector<MultiPoly> out;
    for (const auto& vec : kernel_basis(std::move(m), cols)) {
        MultiPoly p;
        for (size_t k = 0; k < vec.size(); ++k) {
            if (!vec[k].is_zero()) p += MultiPoly(vec[k]) * zv.pow(static_cast<unsigned>(k));
        }
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

std::vector<RatFunc> enumerate_particular_solutions(const RatFunc& r,
                                                    const std::vector<PoleDatum>& poles) {
    std::vector<RatFunc> found;
    std::set<std::string> seen;

    // Exponent choices at infinity.
    std::vector<Rational> alpha_inf;
    int deg_gap = r.num().degree(Var::z) - r.den().degree(Var::z);
    if (deg_gap == -2) {
        Rational beta_inf = r.num().leading_coeff(Var::z).constant_value();  // den is monic
        auto nsq = (Rational(4) * beta_inf + Rational(1)).integer_sqrt_if_square();
        if (!nsq) return found;  // no admissible exponent at infinity
        Rational n_inf(*nsq, mpz_class(1));
        alpha_inf.push_back((Rational(1) + n_inf) / Rational(2));
        if (!n_inf.is_zero()) alpha_inf.push_back((Rational(1) - n_inf) / Rational(2));
    } else {
        alpha_inf.push_back(Rational(1));
        alpha_inf.push_back(Rational(0));
    }

    // Residue choices per cluster.
    std::vector<std::pair<Rational, Rational>> choices;
    for (const auto& p : poles) {
        if (p.mult == 2) {
            Rational n(static_cast<long>(*p.n));
            choices.emplace_back((Rational(1) + n) / Rational(2), (Rational(1) - n) / Rational(2));
        } else {
            choices.emplace_back(Rational(1), Rational(0));
        }
    }
    size_t nclusters = poles.size();
    if (nclusters >= 63) throw ResourceCapError("too many clusters");

    for (uint64_t mask = 0; mask < (uint64_t(1) << nclusters); ++mask) {
        RatFunc omega;
        Rational weighted_sum(0);
        for (size_t j = 0; j < nclusters; ++j) {
            Rational a = (mask >> j) & 1 ? choices[j].second : choices[j].first;
            if (a.is_zero()) continue;
            omega += RatFunc(MultiPoly(a)) * RatFunc(poles[j].q.derivative(Var::z), poles[j].q);
            weighted_sum += a * Rational(poles[j].q.degree(Var::z));
        }
        for (const Rational& ainf : alpha_inf) {
            Rational dr = ainf - weighted_sum;
            auto d = dr.to_long();
            if (!d || *d < 0) continue;
            for (const MultiPoly& p : polynomial_solutions(omega, r, *d)) {
                RatFunc v0 = omega + RatFunc(p.derivative(Var::z), p);
                if (!satisfies_normal_riccati(v0, r)) continue;
                std::string key = render_expr(v0);
                if (seen.insert(key).second) found.push_back(v0);
            }
        }
    }
    return found;
}

std::optional<RatFunc> particular_rational_solution(const RatFunc& r,
                                                    const std::vector<PoleDatum>& poles) {
    auto all = enumerate_particular_solutions(r, poles);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::optional<RatFunc> rational_exp_integral(const RatFunc& f) {
    if (f.is_zero()) return RatFunc(Rational(1));
    check_z_only(f, "rational_exp_integral");
    PartialFractions pf = partial_fractions(f, Var::z);
    if (!pf.poly_part.is_zero()) return std::nullopt;  // exp of a polynomial
    MultiPoly num{Rational(1)}, den{Rational(1)};
    for (const auto& term : pf.terms) {
        if (term.k != 1) return std::nullopt;  // higher-order pole: essential singularity
        // Residue is an integer constant m iff numer == m * q'.
        MultiPoly qp = term.q.derivative(Var::z);
        Rational m = term.numer.leading_coeff_graded() / qp.leading_coeff_graded();
        if (!m.is_integer() || term.numer != MultiPoly(m) * qp) return std::nullopt;
        auto mi = m.to_long();
        if (!mi || *mi == 0) {
            if (!mi) return std::nullopt;
            continue;
        }
        if (*mi > 0) {
            num *= term.q.pow(static_cast<unsigned>(*mi));
        } else {
            den *= term.q.pow(static_cast<unsigned>(-*mi));
        }
    }
    return RatFunc(num, den);
}

std::optional<GeneralSolution> general_from_particular(const RatFunc& v0, const RatFunc& r) {
    if (!satisfies_normal_riccati(v0, r)) {
        throw std::domain_error("general_from_particular: v0 does not solve v' + v^2 = r");
    }
    auto E = rational_exp_integral(v0 * RatFunc(Rational(2)));
    if (!E) return std::nullopt;
    auto integral = hermite_integrate(E->inverse(), Var::z);
    if (!integral.log_free) return std::nullopt;
    RatFunc v = v0 + (*E * (lambda_var() + integral.rational_part)).inverse();
    GeneralSolution out{v, GeneralSolution::Stage::v, GeneralSolution::Provenance::case1};
    if (out.expr.derivative(Var::lambda).is_zero()) {
        throw std::logic_error("general_from_particular: family lost its parameter");
    }
    if (!satisfies_normal_riccati(out.expr, r)) {
        throw std::logic_error("general_from_particular: family fails the equation");
    }
    return out;
}

std::optional<GeneralSolution> solve_linear_riccati(const RatFunc& B, const RatFunc& C) {
    check_z_only(B, "solve_linear_riccati");
    check_z_only(C, "solve_linear_riccati");
    auto E = rational_exp_integral(B);
    if (!E) return std::nullopt;
    auto integral = hermite_integrate(C / *E, Var::z);
    if (!integral.log_free) return std::nullopt;
    RatFunc t = *E * (lambda_var() + integral.rational_part);
    if (!(t.derivative(Var::z) - (B * t + C)).is_zero()) {
        throw std::logic_error("solve_linear_riccati: family fails the equation");
    }
    return GeneralSolution{t, GeneralSolution::Stage::t, GeneralSolution::Provenance::case2};
}

ClassicalOutcome solve_classical_riccati(const RatFunc& r) {
    check_z_only(r, "solve_classical_riccati");
    ClassicalOutcome out;
    if (r.is_zero()) {
        RatFunc v = (RatFunc::variable(Var::z) + lambda_var()).inverse();
        out.solution = GeneralSolution{v, GeneralSolution::Stage::v, GeneralSolution::Provenance::case1};
        return out;
    }
    PoleAnalysis analysis = analyze_poles(r);
    if (!analysis.admissible) {
        out.reason = analysis.reason;
        return out;
    }
    auto candidates = enumerate_particular_solutions(r, analysis.poles);
    if (candidates.empty()) {
        out.reason = "Kovacic case-1 enumeration found no rational particular solution";
        return out;
    }
    for (const RatFunc& v0 : candidates) {
        if (auto family = general_from_particular(v0, r)) {
            out.solution = family;
            return out;
        }
    }
    out.reason = "particular solutions exist but no rational one-parameter family: "
                 "exp/integral stages are not rational";
    return out;
}

}  // namespace ratsode
