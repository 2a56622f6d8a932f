#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratsode/rational.hpp"

namespace ratsode {

// The fixed symbol universe. Every polynomial lives in Q[z,w,wp,t,lambda,x,y,u,v];
// which symbols actually occur is a per-value property. The enum order is also
// the precedence used by the canonical term order.
enum class Var : int { z = 0, w, wp, t, lambda, x, y, u, v };
inline constexpr int kNumVars = 9;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

using Mono = std::array<uint32_t, kNumVars>;

inline int mono_total_degree(const Mono& m) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    return d;
}

// Graded lexicographic order, z > w > wp > ... > v.
struct GradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = mono_total_degree(a), db = mono_total_degree(b);
        if (da != db) return da < db;
        for (int i = 0; i < kNumVars; ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

// Sparse multivariate polynomial over Q. Canonical representation: no zero
// coefficients stored, terms ordered by GradedLexLess (so equality of values
// is equality of representations).
class MultiPoly {
public:
    using TermMap = std::map<Mono, Rational, GradedLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Mono& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    bool depends_on(Var v) const;
    std::vector<Var> vars() const;
    int degree(Var v) const;      // -1 for the zero polynomial
    int total_degree() const;     // -1 for the zero polynomial
    int total_degree(const std::vector<Var>& subset) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;

    // Coefficient of v^k, a polynomial in the remaining symbols.
    MultiPoly coeff_of(Var v, int k) const;
    MultiPoly leading_coeff(Var v) const;

    MultiPoly derivative(Var v) const;
    MultiPoly subst(Var v, const Rational& value) const;
    MultiPoly subst(Var v, const MultiPoly& value) const;
    Rational eval(const std::array<Rational, kNumVars>& point) const;

    // Leading term data in the canonical (graded lex) order.
    const Mono& leading_mono() const;
    const Rational& leading_coeff_graded() const;

    // Rational content: the c such that *this / c has coprime integer
    // coefficients and positive leading (graded lex) coefficient.
    Rational content() const;
    MultiPoly primitive_rational() const;

    // Dense coefficient list (ascending) when univariate in v; throws if any
    // other symbol occurs.
    std::vector<Rational> univariate_coeffs(Var v) const;
    static MultiPoly from_univariate(const std::vector<Rational>& coeffs, Var v);

    void add_term(const Mono& m, const Rational& c);  // merges, drops zeros

private:
    TermMap terms_;
};

// Full multivariate gcd (primitive PRS), normalized to integer-primitive with
// positive leading graded-lex coefficient. gcd(0,0) = 0.
MultiPoly gcd_all(const MultiPoly& a, const MultiPoly& b);

// gcd normalized for presentation: primitive w.r.t. var, and monic in
// var whenever the leading coefficient in var is constant.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b, Var var);

// Resultant with respect to var, computed fraction-free on the Sylvester
// matrix. Throws std::domain_error when an input has degree <= 0 in var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var var);

// Exact division; nullopt when b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Pseudo-remainder of a by b with respect to var (lc(b)^(da-db+1) * a = q*b + r).
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, Var var);

// Rename a symbol (exponents of `from` move onto `to`; `to` must not occur).
MultiPoly rename_var(const MultiPoly& p, Var from, Var to);

}  // namespace ratsode
