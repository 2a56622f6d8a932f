#include "ratsode/pipeline.hpp"

#include <json.hpp>

#include "ratsode/expr.hpp"

namespace ratsode {

namespace {

bool z_free(const MultiPoly& F) {
    return !F.depends_on(Var::z);
}

}  // namespace

ConstantCaseOutcome solve_constant_coeff(const MultiPoly& F, const Parametrization& param) {
    ConstantCaseOutcome out;
    if (F.depends_on(Var::z)) {
        out.kind = ConstantCaseOutcome::Kind::not_constant_case;
        out.reason = "z occurs in the equation";
        return out;
    }
    RiccatiODE rc = cast_to_riccati(derive_param_ode(param));
    SubstitutionChain chain;
    RatFunc inner;
    if (rc.A.is_zero()) {
        if (!rc.B.is_zero()) {
            out.kind = ConstantCaseOutcome::Kind::none;
            out.reason = "reduces to u' = b*u + c with b = " + render_expr(rc.B) +
                         " != 0, whose general solution lambda*e^(b*z) - c/b is not rational";
            return out;
        }
        // u' = c: u = c*z + lambda.
        inner = rc.C * RatFunc::variable(Var::z) + RatFunc::variable(Var::lambda);
    } else {
        NormalizeResult nr = normalize_riccati(rc);
        chain = nr.chain;
        if (!nr.r.is_zero()) {
            out.kind = ConstantCaseOutcome::Kind::none;
            out.reason = "reduces to v' + v^2 = " + render_expr(nr.r) +
                         " with a nonzero constant, which has no rational solution";
            return out;
        }
        inner = (RatFunc::variable(Var::z) + RatFunc::variable(Var::lambda)).inverse();
    }
    chain.w_from_t = SubstitutionChain::WFromT{param.r1};
    RatFunc w = back_substitute(chain, inner);
    out.kind = ConstantCaseOutcome::Kind::solved;
    out.solution = GeneralSolution{w, GeneralSolution::Stage::w,
                                   GeneralSolution::Provenance::constant_coeff};
    return out;
}

bool verify_general_solution(const MultiPoly& F, const RatFunc& w_family) {
    if (w_family.derivative(Var::lambda).is_zero()) return false;
    RatFunc wp_family = w_family.derivative(Var::z);
    RatFunc value = subst_ratfunc(F, Var::w, w_family).subst(Var::wp, wp_family);
    return value.is_zero();
}

PipelineResult solve_pipeline(const Problem& p, bool verify) {
    PipelineResult res;
    try {
        const MultiPoly& F = p.equation;

        // Step 1 surrogate: reject repeated components outright.
        {
            MultiPoly g = gcd_all(gcd_all(F, F.derivative(Var::w)), F.derivative(Var::wp));
            if (g.depends_on(Var::w) || g.depends_on(Var::wp)) {
                res.status = PipelineResult::Status::inconclusive;
                res.reason = "equation is not squarefree in (w, wp): repeated factor " +
                             render_expr(g) + "; factor the equation first";
                return res;
            }
        }

        // Step 2: algebraic genus by specialization.
        GenusReport genus = algebraic_genus(F, p.samples, p.seed);
        res.genus = genus;
        if (genus.kind == GenusReport::Kind::reducible_suspected) {
            res.status = PipelineResult::Status::inconclusive;
            res.reason = "specialized curve exceeds its singularity budget: the equation is "
                         "likely reducible; factor it first (" + genus.describe() + ")";
            return res;
        }
        if (genus.kind == GenusReport::Kind::inconsistent) {
            res.status = PipelineResult::Status::inconclusive;
            res.reason = "genus sampling found no strict majority: " + genus.describe();
            return res;
        }
        if (genus.genus != 0) {
            res.status = PipelineResult::Status::no_rational_general_solution;
            res.reason = "algebraic genus is " + std::to_string(genus.genus) +
                         " by sampled consensus; a rational general solution forces genus 0 (" +
                         genus.describe() + ")";
            return res;
        }

        // Step 3 surrogate: Fuchs condition (1).
        LeadingCoeffCheck lcc = leading_coeff_check(F);
        if (!lcc.pass) {
            res.status = PipelineResult::Status::no_rational_general_solution;
            res.reason = "leading coefficient of the highest wp-power depends on w (" +
                         render_expr(lcc.A0) +
                         "): Fuchs' first condition fails, so movable critical points exist";
            return res;
        }

        // Step 4: parametrization.
        Parametrization param;
        if (p.parametrization) {
            try {
                param = make_parametrization(F, p.parametrization->first, p.parametrization->second,
                                             Parametrization::Source::user_supplied);
            } catch (const std::domain_error& e) {
                res.status = PipelineResult::Status::error;
                res.reason = std::string("supplied parametrization rejected: ") + e.what();
                return res;
            }
        } else {
            AutoParamOutcome apo = auto_parametrize(F);
            if (!apo.param) {
                res.status = PipelineResult::Status::inconclusive;
                res.reason = "no built-in parametrization: " + apo.reason;
                return res;
            }
            param = *apo.param;
        }

        // Step 5: the t-equation and its Riccati shape.
        TParamODE ode = derive_param_ode(param);
        RiccatiODE rc;
        try {
            rc = cast_to_riccati(ode);
        } catch (const FuchsViolation& e) {
            res.status = PipelineResult::Status::no_rational_general_solution;
            res.reason = std::string(e.what()) +
                         ": movable critical points, no rational general solution";
            return res;
        }
        res.riccati = rc;

        // Step 6: solve and substitute back.
        if (z_free(F) && !rc.A.depends_on(Var::z) && !rc.B.depends_on(Var::z) &&
            !rc.C.depends_on(Var::z)) {
            ConstantCaseOutcome cc = solve_constant_coeff(F, param);
            if (cc.kind == ConstantCaseOutcome::Kind::solved) {
                if (!rc.A.is_zero()) res.normal_r = normalize_riccati(rc).r;
                res.solution = cc.solution;
                res.status = PipelineResult::Status::solved;
            } else {
                res.status = PipelineResult::Status::no_rational_general_solution;
                res.reason = "constant case: " + cc.reason;
                return res;
            }
        } else if (rc.A.is_zero()) {
            NormalizeResult nr = normalize_riccati(rc);
            auto t_family = solve_linear_riccati(nr.B, nr.C);
            if (!t_family) {
                res.status = PipelineResult::Status::no_rational_general_solution;
                res.reason = "linear case t' = B t + C: exp(int B) or int(C/exp(int B)) is not "
                             "rational, so no rational general solution";
                return res;
            }
            SubstitutionChain chain;
            chain.w_from_t = SubstitutionChain::WFromT{param.r1};
            RatFunc w = back_substitute(chain, t_family->expr);
            res.solution =
                GeneralSolution{w, GeneralSolution::Stage::w, GeneralSolution::Provenance::case2};
            res.status = PipelineResult::Status::solved;
        } else {
            NormalizeResult nr = normalize_riccati(rc);
            res.normal_r = nr.r;
            ClassicalOutcome oc = solve_classical_riccati(nr.r);
            if (!oc.solution) {
                res.status = PipelineResult::Status::no_rational_general_solution;
                res.reason = "classical Riccati v' + v^2 = " + render_expr(nr.r) + ": " + oc.reason;
                return res;
            }
            SubstitutionChain chain = nr.chain;
            chain.w_from_t = SubstitutionChain::WFromT{param.r1};
            RatFunc w = back_substitute(chain, oc.solution->expr);
            res.solution =
                GeneralSolution{w, GeneralSolution::Stage::w, GeneralSolution::Provenance::case1};
            res.status = PipelineResult::Status::solved;
        }

        if (res.status != PipelineResult::Status::solved) return res;

        // The family must genuinely carry its parameter; an improper
        // parametrization can collapse it.
        if (res.solution->expr.derivative(Var::lambda).is_zero()) {
            res.status = PipelineResult::Status::inconclusive;
            res.solution.reset();
            res.reason = "solution family lost its parameter through the parametrization "
                         "(parametrization may be improper)";
            return res;
        }
        if (verify) {
            if (!verify_general_solution(F, res.solution->expr)) {
                res.status = PipelineResult::Status::error;
                res.reason = "internal: final verification of the solution family failed";
                return res;
            }
            res.verified = true;
            res.reason = "verified rational general solution";
        } else {
            res.reason = "solved (verification skipped on request)";
        }
        return res;
    } catch (const DegenerateSolution& e) {
        res.status = PipelineResult::Status::inconclusive;
        res.reason = std::string("degenerate substitution: ") + e.what();
        return res;
    } catch (const BlowupDepthExceeded& e) {
        res.status = PipelineResult::Status::inconclusive;
        res.reason = e.what();
        return res;
    } catch (const ResourceCapError& e) {
        res.status = PipelineResult::Status::error;
        res.resource_cap = true;
        res.reason = e.what();
        return res;
    } catch (const std::exception& e) {
        res.status = PipelineResult::Status::error;
        res.reason = e.what();
        return res;
    }
}

namespace {

const char* status_name(PipelineResult::Status s) {
    switch (s) {
        case PipelineResult::Status::solved: return "solved";
        case PipelineResult::Status::no_rational_general_solution:
            return "no_rational_general_solution";
        case PipelineResult::Status::inconclusive: return "inconclusive";
        default: return "error";
    }
}

}  // namespace

std::string result_to_json(const PipelineResult& r) {
    nlohmann::json j;
    j["status"] = status_name(r.status);
    if (r.genus && r.genus->kind == GenusReport::Kind::value) {
        j["genus"] = r.genus->genus;
    } else {
        j["genus"] = nullptr;
    }
    if (r.riccati) {
        j["riccati"] = {{"A", render_expr(r.riccati->A)},
                        {"B", render_expr(r.riccati->B)},
                        {"C", render_expr(r.riccati->C)}};
    } else {
        j["riccati"] = nullptr;
    }
    j["normal_r"] = r.normal_r ? nlohmann::json(render_expr(*r.normal_r)) : nlohmann::json(nullptr);
    j["solution"] =
        r.solution ? nlohmann::json(render_expr(r.solution->expr)) : nlohmann::json(nullptr);
    j["verified"] = r.verified;
    j["reason"] = r.reason;
    return j.dump(2);
}

std::string result_to_text(const PipelineResult& r) {
    std::string out;
    out += "status:   " + std::string(status_name(r.status)) + "\n";
    if (r.genus) out += "genus:    " + r.genus->describe() + "\n";
    if (r.riccati) {
        out += "riccati:  t' = (" + render_expr(r.riccati->A) + ")*t^2 + (" +
               render_expr(r.riccati->B) + ")*t + (" + render_expr(r.riccati->C) + ")\n";
    }
    if (r.normal_r) out += "normal:   v' + v^2 = " + render_expr(*r.normal_r) + "\n";
    if (r.solution) out += "solution: w(z, lambda) = " + render_expr(r.solution->expr) + "\n";
    out += "verified: " + std::string(r.verified ? "true" : "false") + "\n";
    out += "reason:   " + r.reason + "\n";
    return out;
}

int exit_code_for(const PipelineResult& r) {
    if (r.resource_cap) return 4;
    switch (r.status) {
        case PipelineResult::Status::solved: return 0;
        case PipelineResult::Status::no_rational_general_solution: return 1;
        case PipelineResult::Status::inconclusive: return 2;
        default: return 3;
    }
}

}  // namespace ratsode
