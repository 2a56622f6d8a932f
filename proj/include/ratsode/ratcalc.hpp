#pragma once

#include <vector>

#include "ratsode/numberfield.hpp"
#include "ratsode/ratfunc.hpp"

namespace ratsode {

// One block of a partial fraction decomposition: numer / q^k with q monic
// irreducible and deg(numer) < deg(q).
struct PFTerm {
    MultiPoly q;
    int k = 1;
    MultiPoly numer;
};

struct PartialFractions {
    Var var = Var::z;
    MultiPoly poly_part;
    std::vector<PFTerm> terms;
};

// Exact decomposition over the irreducible factorization of den(r).
PartialFractions partial_fractions(const RatFunc& r, Var var = Var::z);

// Recombines a decomposition; used to state the reassembly identity.
RatFunc reassemble(const PartialFractions& pf);

struct HermiteResult {
    RatFunc rational_part;
    bool log_free = true;
};

// Rational part of the integral of r. log_free is true iff all residues
// vanish, i.e. the integral is itself a rational function; in that case
// d/dvar(rational_part) == r exactly.
HermiteResult hermite_integrate(const RatFunc& r, Var var = Var::z);

struct ResidueResult {
    NumberField field;          // Q[alpha]/(q)
    NumberField::Elem value;    // order-k Laurent coefficient at the root alpha
};

// Order-k coefficient of the Laurent expansion of r at the root alpha of the
// irreducible q. Requires q^k | den(r).
ResidueResult extension_residue(const RatFunc& r, const MultiPoly& q, int order, Var var = Var::z);

}  // namespace ratsode
