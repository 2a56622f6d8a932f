#pragma once

#include <optional>
#include <string>

#include "ratsode/ratfunc.hpp"

namespace ratsode {

// A verified rational parametrization w = r1(t, z), wp = r2(t, z) of the
// curve F(z, x, y) = 0.
struct Parametrization {
    RatFunc r1, r2;
    enum class Source { user_supplied, builtin_line, builtin_conic, builtin_monoid } source =
        Source::user_supplied;
};

// True iff F(z, r1, r2) collapses to the zero rational function.
bool verify_parametrization(const MultiPoly& F, const RatFunc& r1, const RatFunc& r2);

// Validates the substitution identity and non-constancy of r1 in t.
// Throws std::domain_error when the pair is not a parametrization of F.
Parametrization make_parametrization(const MultiPoly& F, const RatFunc& r1, const RatFunc& r2,
                                     Parametrization::Source source);

struct AutoParamOutcome {
    std::optional<Parametrization> param;
    std::string reason;  // set when param is empty
};

// Built-in parametrization of the curve F(z, w, wp) = 0 viewed in (w, wp)
// over Q(z): lines, conics with a findable rational point, and monoid curves
// (degree d with a (d-1)-fold point rational over Q(z)). Anything else is
// NotSupported and needs a user-supplied parametrization.
AutoParamOutcome auto_parametrize(const MultiPoly& F);

// Rational roots in Q(z) of a polynomial in xvar with Q[z] coefficients.
std::vector<RatFunc> rational_roots_z(const MultiPoly& p, Var xvar);

}  // namespace ratsode
