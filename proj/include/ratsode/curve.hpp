#pragma once

#include <string>
#include <vector>

#include "ratsode/errors.hpp"
#include "ratsode/numberfield.hpp"
#include "ratsode/ratfunc.hpp"

namespace ratsode {

// A squarefree plane curve f(x, y) = 0 over Q.
struct PlaneCurve {
    MultiPoly f;
    int degree = 0;  // total degree
};

// Validates: nonzero, variables within {x, y}, squarefree.
PlaneCurve make_plane_curve(const MultiPoly& f);

// One Galois orbit of singular points, represented by one member with
// coordinates in Q[alpha]/(defining_poly). Affine clusters may live in a
// sheared frame x -> x + shear*y (the stored coordinates x0, y0 are always
// in the original chart coordinates).
struct SingularCluster {
    NumberField field;
    NumberField::Elem x0, y0;   // representative point, original chart coordinates
    MultiPoly defining_poly;    // irreducible over Q (in Var::x) cutting out the orbit
    int size = 1;               // e = orbit size
    int multiplicity = 0;       // m >= 2
    long delta = 0;             // delta invariant per point of the orbit
    bool at_infinity = false;
    int chart = 0;              // 0: affine; 1: X=1 chart at infinity; 2: Y=1 chart
    Rational shear;             // the frame used for affine cluster discovery
};

// All singular clusters, affine and at infinity.
std::vector<SingularCluster> singular_points(const PlaneCurve& c);

// Delta invariant per point of the cluster, by blowup recursion
// (depth-capped; throws BlowupDepthExceeded).
long delta_invariant(const PlaneCurve& c, const SingularCluster& s);

// Geometric genus: (d-1)(d-2)/2 - sum(e * delta). Throws ReducibleSuspected
// when the singularity budget is exceeded (negative result).
int genus_plane(const PlaneCurve& c);

// Specialize F(z, w, wp) at z = z0, mapping w -> x, wp -> y. Throws
// DegenerateSample on degree drop or squarefree failure.
PlaneCurve specialize(const MultiPoly& F, const Rational& z0);

struct GenusSample {
    Rational z0;
    bool degenerate = false;
    int genus = 0;
};

struct GenusReport {
    enum class Kind { value, inconsistent, reducible_suspected };
    std::vector<GenusSample> samples;
    Kind kind = Kind::inconsistent;
    int genus = -1;  // consensus value when kind == value
    std::string describe() const;
};

// Probabilistic genus of the ODE's curve by specialization of z: n
// non-degenerate samples at seeded pseudo-random integers, strict-majority
// consensus (widening the sample pool up to 3n before giving up).
GenusReport algebraic_genus(const MultiPoly& F, int samples, unsigned long seed);

}  // namespace ratsode
