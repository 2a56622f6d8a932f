#pragma once

#include <utility>
#include <vector>

#include "ratsode/multipoly.hpp"
#include "ratsode/rational.hpp"

namespace ratsode {

// Dense univariate polynomial over Q, coefficients in ascending order.
// The empty vector is the zero polynomial.
using UPoly = std::vector<Rational>;

namespace up {

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
bool is_zero(const UPoly& p);
bool is_one(const UPoly& p);
UPoly constant(const Rational& c);
UPoly identity();  // x

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rational& c);
UPoly neg(const UPoly& a);
UPoly monic(const UPoly& a);
UPoly pow(const UPoly& a, unsigned e);

void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0) = 0
// g = s*a + t*b with g monic.
void ext_gcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t);

UPoly derivative(const UPoly& a);
Rational eval(const UPoly& a, const Rational& at);
UPoly compose(const UPoly& a, const UPoly& b);  // a(b(x))
UPoly shift(const UPoly& a, const Rational& c);  // a(x + c)

UPoly from_multipoly(const MultiPoly& p, Var v);
MultiPoly to_multipoly(const UPoly& p, Var v);

bool equal(const UPoly& a, const UPoly& b);

}  // namespace up

// Yun's squarefree decomposition: p = content * prod factor^multiplicity with
// monic, pairwise-coprime, squarefree factors.
std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& p);

struct UFactorization {
    Rational content;
    std::vector<std::pair<UPoly, int>> factors;  // monic irreducible over Q
};

// Complete factorization over Q (squarefree split + Zassenhaus per part).
UFactorization factor_univariate_q(const UPoly& p);

// MultiPoly-facing wrappers; input must involve at most one symbol.
std::vector<std::pair<MultiPoly, int>> squarefree_factor(const MultiPoly& p);

struct Factorization {
    Rational content;
    std::vector<std::pair<MultiPoly, int>> factors;
};
Factorization factor_univariate(const MultiPoly& p);

}  // namespace ratsode
