// Univariate factorization over Q: squarefree split (Yun, in unipoly.cpp),
// then Zassenhaus on each squarefree part -- factor mod p by
// Cantor-Zassenhaus, Hensel-lift the modular factors, recombine subsets
// against the Mignotte bound.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ratsode/unipoly.hpp"

namespace ratsode {

namespace {

// ----- integer polynomials ------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // ascending, trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) {
    return static_cast<int>(p.size()) - 1;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    ztrim(out);
    return out;
}

// Exact division over Z; false if not divisible.
bool zdivide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) return false;
    ZPoly r = a;
    ztrim(r);
    q.assign(r.size(), mpz_class(0));
    while (!r.empty() && zdeg(r) >= zdeg(b)) {
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) return false;
        int k = zdeg(r) - zdeg(b);
        q[static_cast<size_t>(k)] = qc;
        for (size_t i = 0; i < b.size(); ++i) {
            r[static_cast<size_t>(k) + i] -= qc * b[i];
        }
        ztrim(r);
    }
    if (!r.empty()) return false;
    ztrim(q);
    return true;
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_class a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

void zprimitive(ZPoly& p) {
    mpz_class c = zcontent(p);
    if (c == 0) return;
    if (p.back() < 0) c = -c;
    for (auto& x : p) x /= c;
}

// ----- arithmetic mod p ----------------------------------------------------

using PPoly = std::vector<long>;  // coefficients in [0, p)

long mod_inv(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return t;
}

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) {
    return static_cast<int>(a.size()) - 1;
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = static_cast<long>(
                (static_cast<__int128>(out[i + j]) + static_cast<__int128>(a[i]) * b[j]) % p);
        }
    }
    ptrim(out);
    return out;
}

PPoly psub(const PPoly& a, const PPoly& b, long p) {
    PPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = (out[i] - b[i] % p + p) % p;
    ptrim(out);
    return out;
}

void pdivrem(const PPoly& a, const PPoly& b, long p, PPoly& q, PPoly& r) {
    r = a;
    ptrim(r);
    q.clear();
    int db = pdeg(b);
    if (db < 0) throw std::domain_error("pdivrem: zero divisor");
    if (pdeg(r) >= db) q.assign(static_cast<size_t>(pdeg(r) - db) + 1, 0);
    long invlb = mod_inv(b.back(), p);
    while (pdeg(r) >= db) {
        int k = pdeg(r) - db;
        long c = static_cast<long>(static_cast<__int128>(r.back()) * invlb % p);
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) {
            __int128 v = static_cast<__int128>(r[static_cast<size_t>(k + i)]) -
                         static_cast<__int128>(c) * b[static_cast<size_t>(i)];
            long vv = static_cast<long>(v % p);
            if (vv < 0) vv += p;
            r[static_cast<size_t>(k + i)] = vv;
        }
        ptrim(r);
    }
    ptrim(q);
}

PPoly pmod(const PPoly& a, const PPoly& b, long p) {
    PPoly q, r;
    pdivrem(a, b, p, q, r);
    return r;
}

PPoly pgcd(PPoly a, PPoly b, long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = mod_inv(a.back(), p);
        for (auto& c : a) c = static_cast<long>(static_cast<__int128>(c) * inv % p);
    }
    return a;
}

PPoly pmonic(PPoly a, long p) {
    ptrim(a);
    if (a.empty()) return a;
    long inv = mod_inv(a.back(), p);
    for (auto& c : a) c = static_cast<long>(static_cast<__int128>(c) * inv % p);
    return a;
}

PPoly ppowmod_z(PPoly base, mpz_class e, const PPoly& f, long p) {
    PPoly result{1};
    base = pmod(base, f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = pmod(pmul(result, base, p), f, p);
        e >>= 1;
        if (e > 0) base = pmod(pmul(base, base, p), f, p);
    }
    return result;
}

// Deterministic pseudo-random stream (splitmix64) for equal-degree splitting.
struct Splitmix {
    uint64_t s;
    uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        uint64_t x = s;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }
};

// Cantor-Zassenhaus equal-degree splitting: g is squarefree, monic, a
// product of irreducibles all of degree d.
void equal_degree_split(const PPoly& g, int d, long p, Splitmix& rng, std::vector<PPoly>& out) {
    int n = pdeg(g);
    if (n == d) {
        out.push_back(g);
        return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    mpz_class e = (pd - 1) / 2;
    while (true) {
        PPoly a(static_cast<size_t>(n), 0);
        for (auto& c : a) c = static_cast<long>(rng.next() % static_cast<uint64_t>(p));
        ptrim(a);
        if (pdeg(a) < 1) continue;
        PPoly b = ppowmod_z(a, e, g, p);
        if (b.empty()) continue;
        b[0] = (b[0] - 1 + p) % p;
        ptrim(b);
        PPoly h = pgcd(g, b, p);
        if (pdeg(h) <= 0 || pdeg(h) >= n) continue;
        PPoly q, r;
        pdivrem(g, h, p, q, r);
        equal_degree_split(h, d, p, rng, out);
        equal_degree_split(pmonic(q, p), d, p, rng, out);
        return;
    }
}

// Factor a squarefree monic polynomial mod p into monic irreducibles.
std::vector<PPoly> factor_mod_p(const PPoly& f, long p) {
    std::vector<PPoly> out;
    PPoly rest = f;
    Splitmix rng{0x243F6A8885A308D3ull ^ static_cast<uint64_t>(p)};
    PPoly x{0, 1};
    PPoly h = x;  // x^(p^d) mod rest, maintained across d
    int d = 0;
    while (pdeg(rest) > 0) {
        ++d;
        if (2 * d > pdeg(rest)) {
            out.push_back(rest);  // remainder is irreducible
            break;
        }
        h = ppowmod_z(h, mpz_class(p), rest, p);
        PPoly g = pgcd(rest, psub(h, x, p), p);
        if (pdeg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            PPoly q, r;
            pdivrem(rest, g, p, q, r);
            rest = pmonic(q, p);
            h = pmod(h, rest, p);
        }
    }
    return out;
}

// ----- Hensel lifting -------------------------------------------------------

mpz_class mod_m(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZPoly zp_reduce(const ZPoly& a, const mpz_class& m) {
    ZPoly out = a;
    for (auto& c : out) c = mod_m(c, m);
    ztrim(out);
    return out;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    return zp_reduce(zmul(a, b), m);
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly out(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    for (auto& c : out) c = mod_m(c, m);
    ztrim(out);
    return out;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly out(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    for (auto& c : out) c = mod_m(c, m);
    ztrim(out);
    return out;
}

// Division by a monic b over Z/m.
void zp_divrem_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m, ZPoly& q, ZPoly& r) {
    r = zp_reduce(a, m);
    q.clear();
    int db = zdeg(b);
    if (zdeg(r) >= db) q.assign(static_cast<size_t>(zdeg(r) - db) + 1, mpz_class(0));
    while (zdeg(r) >= db) {
        int k = zdeg(r) - db;
        mpz_class c = r.back();
        q[static_cast<size_t>(k)] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            r[static_cast<size_t>(k) + i] = mod_m(r[static_cast<size_t>(k) + i] - c * b[i], m);
        }
        ztrim(r);
    }
    ztrim(q);
}

// One quadratic Hensel step (von zur Gathen & Gerhard, alg. 15.10/15.11):
// f = g*h (mod m), s*g + t*h = 1 (mod m), h monic; lifts everything mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZPoly e = zp_sub(f, zmul(g, h), m2);
    ZPoly q, r;
    zp_divrem_monic(zp_mul(s, e, m2), h, m2, q, r);
    ZPoly g1 = zp_add(g, zp_add(zp_mul(t, e, m2), zp_mul(q, g, m2), m2), m2);
    ZPoly h1 = zp_add(h, r, m2);
    ZPoly b = zp_sub(zp_add(zp_mul(s, g1, m2), zp_mul(t, h1, m2), m2), ZPoly{mpz_class(1)}, m2);
    ZPoly c, d;
    zp_divrem_monic(zp_mul(s, b, m2), h1, m2, c, d);
    ZPoly s1 = zp_sub(s, d, m2);
    ZPoly t1 = zp_sub(zp_sub(t, zp_mul(t, b, m2), m2), zp_mul(c, g1, m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

ZPoly ppoly_to_zpoly(const PPoly& a) {
    ZPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    return out;
}

PPoly zpoly_to_ppoly(const ZPoly& a, long p) {
    PPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        mpz_class r = mod_m(a[i], mpz_class(p));
        out[i] = r.get_si();
    }
    ptrim(out);
    return out;
}

// Lift the modular factorization f = lc(f) * prod(u_i) (mod p), u_i monic,
// to monic factors mod p^2^iters >= target. Recursive bisection.
void hensel_tree(const ZPoly& f, const std::vector<PPoly>& factors, long p,
                 const mpz_class& target, std::vector<ZPoly>& out) {
    if (factors.size() == 1) {
        // The lone monic factor mod target is f / lc(f).
        mpz_class m = p;
        while (m < target) m *= m;
        mpz_class lc_inv;
        if (mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t()) == 0) {
            throw std::logic_error("hensel_tree: leading coefficient not invertible");
        }
        ZPoly u = f;
        for (auto& c : u) c = mod_m(c * lc_inv, m);
        ztrim(u);
        out.push_back(std::move(u));
        return;
    }
    size_t half = factors.size() / 2;
    std::vector<PPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
    std::vector<PPoly> right(factors.begin() + static_cast<long>(half), factors.end());

    // g0 = lc(f) * prod(left), h0 = prod(right), both mod p.
    PPoly g0{static_cast<long>(mod_m(f.back(), mpz_class(p)).get_si())};
    for (const auto& u : left) g0 = pmul(g0, u, p);
    PPoly h0{1};
    for (const auto& u : right) h0 = pmul(h0, u, p);

    // Bezout pair mod p via extended Euclid.
    PPoly r0 = g0, r1 = h0;
    PPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        PPoly q, r;
        pdivrem(r0, r1, p, q, r);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        PPoly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (pdeg(r0) != 0) throw std::logic_error("hensel_tree: factors not coprime mod p");
    long inv = mod_inv(r0[0], p);
    for (auto& c : s0) c = static_cast<long>(static_cast<__int128>(c) * inv % p);
    for (auto& c : t0) c = static_cast<long>(static_cast<__int128>(c) * inv % p);

    ZPoly g = ppoly_to_zpoly(g0), h = ppoly_to_zpoly(h0);
    ZPoly s = ppoly_to_zpoly(s0), t = ppoly_to_zpoly(t0);
    mpz_class m = p;
    while (m < target) {
        hensel_step(zp_reduce(f, m * m), g, h, s, t, m);
        m *= m;
    }
    hensel_tree(g, left, p, target, out);
    hensel_tree(h, right, p, target, out);
}

// ----- Zassenhaus -----------------------------------------------------------

const long kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
                        43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
                        101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
                        163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227,
                        229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283};

// Factor a primitive squarefree f over Z (positive leading coefficient) into
// primitive irreducibles over Z.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    int n = zdeg(f);
    if (n <= 0) return {};
    if (n == 1) return {f};

    // Pick a prime keeping f squarefree with invertible leading coefficient;
    // among the first few that work, prefer the fewest modular factors.
    long best_p = 0;
    std::vector<PPoly> best_factors;
    int tried_ok = 0;
    for (long p : kPrimes) {
        if (mod_m(f.back(), mpz_class(p)) == 0) continue;
        PPoly fp = zpoly_to_ppoly(f, p);
        PPoly fpd(fp.size() - 1);
        for (size_t i = 1; i < fp.size(); ++i) {
            fpd[i - 1] = static_cast<long>(static_cast<__int128>(fp[i]) * static_cast<long>(i) % p);
        }
        ptrim(fpd);
        if (fpd.empty() || pdeg(pgcd(fp, fpd, p)) != 0) continue;
        auto factors = factor_mod_p(pmonic(fp, p), p);
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (++tried_ok >= 3 || best_factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("factor_squarefree_z: no usable prime found");
    if (best_factors.size() == 1) return {f};

    long p = best_p;
    // Mignotte-style bound: |coef of any factor * lc| <= 2^n * sqrt(n+1) * ||f||_inf * |lc|.
    mpz_class height = 0;
    for (const auto& c : f) height = std::max(height, mpz_class(abs(c)));
    mpz_class bound = height * abs(f.back()) * (n + 1);
    bound <<= static_cast<unsigned>(n + 1);
    mpz_class target = 2 * bound + 1;

    std::vector<ZPoly> lifted;
    hensel_tree(f, best_factors, p, target, lifted);
    mpz_class m = p;
    while (m < target) m *= m;

    auto symmetric = [&](ZPoly a) {
        for (auto& c : a) {
            c = mod_m(c, m);
            if (c * 2 > m) c -= m;
        }
        ztrim(a);
        return a;
    };

    // Subset recombination.
    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::vector<int> alive(lifted.size(), 1);
    size_t alive_count = lifted.size();
    for (size_t take = 1; 2 * take <= alive_count;) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < lifted.size(); ++i) {
            if (alive[i]) idx.push_back(i);
        }
        bool found = false;
        // Enumerate subsets of size `take` of the alive factors.
        std::vector<size_t> comb(take);
        for (size_t i = 0; i < take; ++i) comb[i] = i;
        while (true) {
            ZPoly cand{rest.back()};
            for (size_t i : comb) cand = zp_reduce(zmul(cand, lifted[idx[i]]), m);
            cand = symmetric(cand);
            zprimitive(cand);
            ZPoly q;
            if (zdeg(cand) > 0 && zdivide_exact(rest, cand, q)) {
                result.push_back(cand);
                rest = q;
                zprimitive(rest);
                for (size_t i : comb) alive[idx[i]] = 0;
                alive_count -= take;
                found = true;
                break;
            }
            // next combination
            size_t j = take;
            while (j > 0 && comb[j - 1] == idx.size() - take + (j - 1)) --j;
            if (j == 0) break;
            ++comb[j - 1];
            for (size_t k = j; k < take; ++k) comb[k] = comb[k - 1] + 1;
        }
        if (!found) ++take;
    }
    if (zdeg(rest) > 0) result.push_back(rest);
    return result;
}

}  // namespace

UFactorization factor_univariate_q(const UPoly& p) {
    UPoly f = p;
    up::trim(f);
    if (f.empty()) throw std::domain_error("factor_univariate_q: zero polynomial");
    UFactorization out;
    if (up::degree(f) == 0) {
        out.content = f[0];
        return out;
    }
    auto squarefree = squarefree_decompose(f);
    for (const auto& [part, mult] : squarefree) {
        // Clear denominators: primitive integer image of the monic part.
        mpz_class den = 1;
        for (const auto& c : part) den = lcm(den, c.denominator());
        ZPoly zf(part.size());
        for (size_t i = 0; i < part.size(); ++i) {
            zf[i] = part[i].numerator() * (den / part[i].denominator());
        }
        zprimitive(zf);
        for (const auto& zfac : factor_squarefree_z(zf)) {
            UPoly qf(zfac.size());
            for (size_t i = 0; i < zfac.size(); ++i) qf[i] = Rational(mpq_class(zfac[i]));
            out.factors.emplace_back(up::monic(qf), mult);
        }
    }
    // content = p / prod(factor^mult); constant by construction.
    UPoly prod = up::constant(Rational(1));
    for (const auto& [fac, mult] : out.factors) {
        prod = up::mul(prod, up::pow(fac, static_cast<unsigned>(mult)));
    }
    UPoly q, r;
    up::divrem(f, prod, q, r);
    if (!up::is_zero(r) || up::degree(q) != 0) {
        throw std::logic_error("factor_univariate_q: reconstruction failed");
    }
    out.content = q[0];
    return out;
}

}  // namespace ratsode
