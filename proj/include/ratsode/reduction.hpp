#pragma once

#include <optional>
#include <vector>

#include "ratsode/errors.hpp"
#include "ratsode/parametrize.hpp"

namespace ratsode {

// dt/dz along the parametrized curve.
struct TParamODE {
    RatFunc rhs;  // rational in (t, z)
};

// t' = A t^2 + B t + C with coefficients in Q(z).
struct RiccatiODE {
    RatFunc A, B, C;
};

// Invertible record of the reduction, replayed on the normal-form solution.
// Steps applied in order when substituting back:
//   UFromV:  u = v + beta
//   TFromU:  t = -u / A
//   WFromT:  w = r1(t, z)
struct SubstitutionChain {
    struct UFromV {
        RatFunc beta;
    };
    struct TFromU {
        RatFunc A;
    };
    struct WFromT {
        RatFunc r1;
    };
    std::optional<UFromV> u_from_v;
    std::optional<TFromU> t_from_u;
    std::optional<WFromT> w_from_t;
    RatFunc normal_r;  // target classical form v' + v^2 = r
};

struct LeadingCoeffCheck {
    bool pass = false;
    MultiPoly A0;  // the offending coefficient when pass is false
};

// Fuchs condition (1): the coefficient of wp^m must not involve w.
LeadingCoeffCheck leading_coeff_check(const MultiPoly& F);

// Eq. for t along the curve: dt/dz = (r2 - dr1/dz) / (dr1/dt).
TParamODE derive_param_ode(const Parametrization& p);

// Casts the t-equation into Riccati shape; throws FuchsViolation when the
// right-hand side is not a polynomial of degree <= 2 in t over Q(z).
RiccatiODE cast_to_riccati(const TParamODE& ode);

struct NormalizeResult {
    bool linear_case = false;  // A == 0: handled by the linear solver
    RatFunc r;                 // classical form v' + v^2 = r (when !linear_case)
    SubstitutionChain chain;   // without the w-stage (caller appends it)
    RatFunc B, C;              // the linear-case data (when linear_case)
};

// Reduce t' = At^2 + Bt + C to v' + v^2 = r via t = -u/A, u = v + beta with
// beta = (B + A'/A)/2. The chain identity is re-derived symbolically at
// construction; an inconsistency throws logic_error.
NormalizeResult normalize_riccati(const RiccatiODE& rc);

// Replays the chain on a general solution (of the innermost stage) and
// returns w(z, lambda). Throws DegenerateSolution when an intermediate
// denominator vanishes identically.
RatFunc back_substitute(const SubstitutionChain& chain, const RatFunc& inner_general);

// The chain-soundness identity as a reusable predicate (also property-tested):
// substituting t = -(v + beta)/A and eliminating v' via v' = r - v^2 turns
// t' - (A t^2 + B t + C) into zero identically in (z, v).
bool chain_is_sound(const RiccatiODE& rc, const NormalizeResult& nr);

}  // namespace ratsode
