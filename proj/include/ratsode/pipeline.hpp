#pragma once

#include <optional>
#include <string>

#include "ratsode/curve.hpp"
#include "ratsode/problem.hpp"
#include "ratsode/reduction.hpp"
#include "ratsode/riccati.hpp"

namespace ratsode {

struct PipelineResult {
    enum class Status { solved, no_rational_general_solution, inconclusive, error } status =
        Status::error;
    std::optional<GenusReport> genus;
    std::optional<RiccatiODE> riccati;
    std::optional<RatFunc> normal_r;
    std::optional<GeneralSolution> solution;  // stage w, in (z, lambda)
    bool verified = false;
    bool resource_cap = false;
    std::string reason;
};

// The full decision pipeline: squarefree screen, genus by specialization,
// leading-coefficient check, parametrization (user else builtin), reduction
// to a classical Riccati equation, rational solving, back-substitution and
// exact verification. Never throws on well-formed problems; failures are
// reported in the status/reason fields.
PipelineResult solve_pipeline(const Problem& p, bool verify = true);

// F(z, w_family, d/dz w_family) == 0 identically and the family genuinely
// depends on lambda.
bool verify_general_solution(const MultiPoly& F, const RatFunc& w_family);

struct ConstantCaseOutcome {
    enum class Kind { solved, none, not_constant_case } kind = Kind::none;
    std::optional<GeneralSolution> solution;  // stage w
    std::string reason;
};

// Constant-coefficient fast path: with z absent from F the reduced Riccati
// data are constants, and a rational general solution exists iff the
// reduction lands on u' + u^2 = 0 or u' = c. Returns not_constant_case when
// z occurs in F.
ConstantCaseOutcome solve_constant_coeff(const MultiPoly& F, const Parametrization& param);

std::string result_to_json(const PipelineResult& r);
std::string result_to_text(const PipelineResult& r);
int exit_code_for(const PipelineResult& r);

}  // namespace ratsode
