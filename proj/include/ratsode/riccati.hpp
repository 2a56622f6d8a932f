#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratsode/numberfield.hpp"
#include "ratsode/ratfunc.hpp"

namespace ratsode {

// One conjugate cluster of poles of r (an irreducible factor of den(r)).
struct PoleDatum {
    MultiPoly q;               // monic irreducible, in z
    int mult = 1;              // pole order (1 or 2 when admissible)
    NumberField field;         // Q[alpha]/(q)
    NumberField::Elem beta;    // coefficient of (z - alpha)^-2
    NumberField::Elem gamma;   // coefficient of (z - alpha)^-1
    std::optional<long> n;     // integer >= 2 with 4*beta = n^2 - 1 (double poles)
    Rational beta_rat;         // beta as a rational (when it is one)
};

struct PoleAnalysis {
    bool admissible = false;
    std::string reason;  // violated clause when !admissible
    std::vector<PoleDatum> poles;
};

// Necessary pole structure for v' + v^2 = r to admit a rational general
// solution: deg num - deg den <= -2, only simple and double poles, and
// 4*beta = n^2 - 1 with an integer n >= 2 at every double pole.
// (r == 0 is handled upstream.)
PoleAnalysis analyze_poles(const RatFunc& r);

// Basis of polynomial solutions of P'' + 2 omega P' + (omega' + omega^2 - r) P = 0
// within degree <= d, by exact linear algebra.
std::vector<MultiPoly> polynomial_solutions(const RatFunc& omega, const RatFunc& r, long d);

// First rational particular solution found over the Kovacic case-1 branches
// (residue choices folded per conjugate cluster so omega stays in Q(z)).
std::optional<RatFunc> particular_rational_solution(const RatFunc& r,
                                                    const std::vector<PoleDatum>& poles);

// All particular solutions the branch enumeration yields (deduplicated).
std::vector<RatFunc> enumerate_particular_solutions(const RatFunc& r,
                                                    const std::vector<PoleDatum>& poles);

struct GeneralSolution {
    RatFunc expr;  // rational in (z, lambda), d/dlambda not identically zero
    enum class Stage { v, t, u, w } stage = Stage::v;
    enum class Provenance { constant_coeff, case1, case2 } provenance = Provenance::case1;
};

// exp(integral of f) as a rational function: requires the partial fractions
// of f to have zero polynomial part, only simple poles, integer residues;
// the result is the product of the denominator factors to those residues.
std::optional<RatFunc> rational_exp_integral(const RatFunc& f);

// One-parameter family from a particular solution via v = v0 + 1/u,
// u' = 2 v0 u + 1: v = v0 + 1/(E (lambda + int(1/E))), E = exp(int 2 v0).
// Returns nullopt when E or the integral is not rational.
std::optional<GeneralSolution> general_from_particular(const RatFunc& v0, const RatFunc& r);

// Case 2: t' = B t + C; t = E (lambda + int(C/E)) with E = exp(int B),
// both required rational.
std::optional<GeneralSolution> solve_linear_riccati(const RatFunc& B, const RatFunc& C);

struct ClassicalOutcome {
    std::optional<GeneralSolution> solution;
    std::string reason;  // deciding clause when empty
};

// Full decision for v' + v^2 = r: r == 0 short-circuits to 1/(z + lambda);
// otherwise pole analysis, branch enumeration, family construction.
ClassicalOutcome solve_classical_riccati(const RatFunc& r);

// v' + v^2 - r == 0 identically in (z, lambda).
bool satisfies_normal_riccati(const RatFunc& v, const RatFunc& r);

}  // namespace ratsode
