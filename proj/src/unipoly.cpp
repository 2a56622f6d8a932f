#include "ratsode/unipoly.hpp"

#include <stdexcept>

namespace ratsode {
namespace up {

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) {
    return static_cast<int>(p.size()) - 1;
}

bool is_zero(const UPoly& p) {
    return p.empty();
}

bool is_one(const UPoly& p) {
    return p.size() == 1 && p[0].is_one();
}

UPoly constant(const Rational& c) {
    if (c.is_zero()) return {};
    return {c};
}

UPoly identity() {
    return {Rational(0), Rational(1)};
}

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

UPoly scale(const UPoly& a, const Rational& c) {
    if (c.is_zero()) return {};
    UPoly out = a;
    for (auto& x : out) x *= c;
    return out;
}

UPoly neg(const UPoly& a) {
    UPoly out = a;
    for (auto& x : out) x = -x;
    return out;
}

UPoly monic(const UPoly& a) {
    if (a.empty()) return a;
    return scale(a, a.back().inverse());
}

UPoly pow(const UPoly& a, unsigned e) {
    UPoly result = constant(Rational(1));
    UPoly base = a;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1u;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw std::domain_error("UPoly: division by zero");
    r = a;
    q.clear();
    int db = degree(b);
    if (degree(r) >= db) q.assign(static_cast<size_t>(degree(r) - db) + 1, Rational(0));
    const Rational lb = b.back().inverse();
    while (degree(r) >= db) {
        int k = degree(r) - db;
        Rational c = r.back() * lb;
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) {
            r[static_cast<size_t>(k + i)] -= c * b[static_cast<size_t>(i)];
        }
        trim(r);
    }
    trim(q);
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        UPoly q, r;
        divrem(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.empty() ? x : monic(x);
}

void ext_gcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = constant(Rational(1)), s1;
    UPoly t0, t1 = constant(Rational(1));
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        UPoly q, r;
        divrem(r0, r1, q, r);
        UPoly s2 = sub(s0, mul(q, s1));
        UPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    g = r0;
    s = s0;
    t = t0;
    if (!g.empty() && !g.back().is_one()) {
        Rational inv = g.back().inverse();
        g = scale(g, inv);
        s = scale(s, inv);
        t = scale(t, inv);
    }
}

UPoly derivative(const UPoly& a) {
    if (a.size() <= 1) return {};
    UPoly out(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rational(static_cast<long>(i));
    trim(out);
    return out;
}

Rational eval(const UPoly& a, const Rational& at) {
    Rational acc(0);
    for (size_t i = a.size(); i-- > 0;) acc = acc * at + a[i];
    return acc;
}

UPoly compose(const UPoly& a, const UPoly& b) {
    UPoly acc;
    for (size_t i = a.size(); i-- > 0;) {
        acc = mul(acc, b);
        acc = add(acc, constant(a[i]));
    }
    return acc;
}

UPoly shift(const UPoly& a, const Rational& c) {
    UPoly b = {c, Rational(1)};
    return compose(a, b);
}

UPoly from_multipoly(const MultiPoly& p, Var v) {
    return p.univariate_coeffs(v);
}

MultiPoly to_multipoly(const UPoly& p, Var v) {
    return MultiPoly::from_univariate(p, v);
}

bool equal(const UPoly& a, const UPoly& b) {
    return a == b;
}

}  // namespace up

std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& p) {
    UPoly f = p;
    up::trim(f);
    if (f.empty()) throw std::domain_error("squarefree_decompose: zero polynomial");
    std::vector<std::pair<UPoly, int>> out;
    if (up::degree(f) == 0) return out;
    f = up::monic(f);

    // Yun's algorithm.
    UPoly fp = up::derivative(f);
    UPoly u = up::gcd(f, fp);
    UPoly q, r;
    up::divrem(f, u, q, r);
    UPoly v = q;
    up::divrem(fp, u, q, r);
    UPoly y = q;
    int k = 1;
    while (true) {
        UPoly z = up::sub(y, up::derivative(v));
        if (up::is_zero(z)) {
            if (up::degree(v) > 0) out.emplace_back(up::monic(v), k);
            break;
        }
        UPoly a = up::gcd(v, z);
        if (up::degree(a) > 0) out.emplace_back(up::monic(a), k);
        up::divrem(v, a, q, r);
        v = q;
        up::divrem(z, a, q, r);
        y = q;
        ++k;
    }
    return out;
}

std::vector<std::pair<MultiPoly, int>> squarefree_factor(const MultiPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_factor: zero polynomial");
    auto vs = p.vars();
    if (vs.size() > 1) throw std::domain_error("squarefree_factor: input is not univariate");
    Var v = vs.empty() ? Var::z : vs[0];
    auto dec = squarefree_decompose(up::from_multipoly(p, v));
    std::vector<std::pair<MultiPoly, int>> out;
    for (auto& [f, m] : dec) out.emplace_back(up::to_multipoly(f, v), m);
    return out;
}

Factorization factor_univariate(const MultiPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor_univariate: zero polynomial");
    auto vs = p.vars();
    if (vs.size() > 1) throw std::domain_error("factor_univariate: input is not univariate");
    Var v = vs.empty() ? Var::z : vs[0];
    UFactorization fq = factor_univariate_q(up::from_multipoly(p, v));
    Factorization out;
    out.content = fq.content;
    for (auto& [f, m] : fq.factors) out.factors.emplace_back(up::to_multipoly(f, v), m);
    return out;
}

}  // namespace ratsode
