#include "ratsode/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratsode {

namespace {

const char* kVarNames[kNumVars] = {"z", "w", "wp", "t", "lambda", "x", "y", "u", "v"};

Mono zero_mono() {
    Mono m{};
    m.fill(0);
    return m;
}

}  // namespace

const char* var_name(Var v) {
    return kVarNames[static_cast<int>(v)];
}

std::optional<Var> var_from_name(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i) {
        if (name == kVarNames[i]) return static_cast<Var>(i);
    }
    return std::nullopt;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_[zero_mono()] = c;
}

MultiPoly MultiPoly::variable(Var v) {
    Mono m = zero_mono();
    m[static_cast<int>(v)] = 1;
    MultiPoly p;
    p.terms_[m] = Rational(1);
    return p;
}

MultiPoly MultiPoly::monomial(const Mono& m, const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_total_degree(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
    return terms_.begin()->second;
}

bool MultiPoly::depends_on(Var v) const {
    int i = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        if (m[i] > 0) return true;
    }
    return false;
}

std::vector<Var> MultiPoly::vars() const {
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i) {
        if (depends_on(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
    }
    return out;
}

int MultiPoly::degree(Var v) const {
    if (terms_.empty()) return -1;
    int i = static_cast<int>(v), d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[i]));
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return mono_total_degree(terms_.rbegin()->first);
}

int MultiPoly::total_degree(const std::vector<Var>& subset) const {
    if (terms_.empty()) return -1;
    int best = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (Var v : subset) d += static_cast<int>(m[static_cast<int>(v)]);
        best = std::max(best, d);
    }
    return best;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

void MultiPoly::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m;
            for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result{Rational(1)};
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
    int i = static_cast<int>(v);
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (static_cast<int>(m[i]) == k) {
            Mono mm = m;
            mm[i] = 0;
            out.add_term(mm, c);
        }
    }
    return out;
}

MultiPoly MultiPoly::leading_coeff(Var v) const {
    int d = degree(v);
    if (d < 0) return MultiPoly();
    return coeff_of(v, d);
}

MultiPoly MultiPoly::derivative(Var v) const {
    int i = static_cast<int>(v);
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Mono mm = m;
        mm[i] -= 1;
        out.add_term(mm, c * Rational(static_cast<long>(m[i])));
    }
    return out;
}

MultiPoly MultiPoly::subst(Var v, const Rational& value) const {
    int i = static_cast<int>(v);
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Mono mm = m;
        uint32_t e = mm[i];
        mm[i] = 0;
        out.add_term(mm, c * value.pow(static_cast<long>(e)));
    }
    return out;
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& value) const {
    int i = static_cast<int>(v);
    int d = degree(v);
    if (d <= 0) return *this;
    // Horner in v: collect coefficients of v^k then fold.
    std::vector<MultiPoly> coeffs(static_cast<size_t>(d) + 1);
    for (const auto& [m, c] : terms_) {
        Mono mm = m;
        uint32_t e = mm[i];
        mm[i] = 0;
        coeffs[e].add_term(mm, c);
    }
    MultiPoly out = coeffs[static_cast<size_t>(d)];
    for (int k = d - 1; k >= 0; --k) {
        out = out * value + coeffs[static_cast<size_t>(k)];
    }
    return out;
}

Rational MultiPoly::eval(const std::array<Rational, kNumVars>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] > 0) term *= point[i].pow(static_cast<long>(m[i]));
        }
        acc += term;
    }
    return acc;
}

const Mono& MultiPoly::leading_mono() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly: leading term of zero");
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff_graded() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly: leading term of zero");
    return terms_.rbegin()->second;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, c.numerator());
        den_lcm = lcm(den_lcm, c.denominator());
    }
    Rational cont(num_gcd, den_lcm);
    if (leading_coeff_graded().sign() < 0) cont = -cont;
    return cont;
}

MultiPoly MultiPoly::primitive_rational() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    MultiPoly out = *this;
    out *= c.inverse();
    return out;
}

std::vector<Rational> MultiPoly::univariate_coeffs(Var v) const {
    if (terms_.empty()) return {};
    int i = static_cast<int>(v);
    std::vector<Rational> out(static_cast<size_t>(degree(v)) + 1);
    for (const auto& [m, c] : terms_) {
        for (int j = 0; j < kNumVars; ++j) {
            if (j != i && m[j] != 0) {
                throw std::logic_error("MultiPoly: univariate_coeffs on multivariate value");
            }
        }
        out[m[i]] = c;
    }
    return out;
}

MultiPoly MultiPoly::from_univariate(const std::vector<Rational>& coeffs, Var v) {
    MultiPoly out;
    Mono m = zero_mono();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        m[static_cast<int>(v)] = static_cast<uint32_t>(k);
        out.add_term(m, coeffs[k]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Division, pseudo-division, gcd, resultant
// ---------------------------------------------------------------------------

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    MultiPoly rem = a, quot;
    const Mono& lmb = b.leading_mono();
    const Rational& lcb = b.leading_coeff_graded();
    while (!rem.is_zero()) {
        const Mono& lmr = rem.leading_mono();
        Mono q;
        for (int i = 0; i < kNumVars; ++i) {
            if (lmr[i] < lmb[i]) return std::nullopt;
            q[i] = lmr[i] - lmb[i];
        }
        Rational qc = rem.leading_coeff_graded() / lcb;
        MultiPoly qt = MultiPoly::monomial(q, qc);
        quot += qt;
        rem -= qt * b;
    }
    return quot;
}

MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, Var var) {
    int db = b.degree(var);
    if (db < 0) throw std::domain_error("pseudo_rem: division by zero");
    MultiPoly r = a;
    int dr = r.degree(var);
    if (dr < db) return r;
    MultiPoly lb = b.leading_coeff(var);
    MultiPoly xv = MultiPoly::variable(var);
    int steps = dr - db + 1;
    while (!r.is_zero() && (dr = r.degree(var)) >= db) {
        MultiPoly lr = r.leading_coeff(var);
        r = r * lb - lr * xv.pow(static_cast<unsigned>(dr - db)) * b;
        --steps;
    }
    // Keep the classical lc(b)^(da-db+1) scaling exact.
    while (steps-- > 0) r *= lb;
    return r;
}

namespace {

// Content of p viewed as a univariate polynomial in var with polynomial
// coefficients (gcd of those coefficients).
MultiPoly content_wrt(const MultiPoly& p, Var var) {
    MultiPoly c;
    int d = p.degree(var);
    for (int k = 0; k <= d; ++k) {
        MultiPoly ck = p.coeff_of(var, k);
        if (!ck.is_zero()) c = gcd_all(c, ck);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

MultiPoly normalize_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.primitive_rational();
}

// Dense univariate image of p in var under an assignment of the remaining
// symbols (single pass over the terms).
std::vector<Rational> eval_to_univariate(const MultiPoly& p, Var var,
                                         const std::array<Rational, kNumVars>& point) {
    int iv = static_cast<int>(var);
    std::vector<Rational> out(static_cast<size_t>(std::max(p.degree(var), 0)) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (i == iv || m[i] == 0) continue;
            term *= point[i].pow(static_cast<long>(m[i]));
        }
        out[m[iv]] += term;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

// Integer image mod p of a rational coefficient list, after clearing
// denominators (the gcd degree is scale-invariant).
std::vector<long> to_mod_p(const std::vector<Rational>& a, long p) {
    mpz_class common(1);
    for (const auto& c : a) common = lcm(common, c.denominator());
    std::vector<long> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        mpz_class v = a[i].numerator() * (common / a[i].denominator());
        mpz_class r = v % p;
        long rr = r.get_si();
        if (rr < 0) rr += p;
        out[i] = rr;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

int gcd_degree_mod_p(std::vector<long> a, std::vector<long> b, long p) {
    auto trim = [](std::vector<long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        long lb = b.back();
        long inv = 1, base = lb;
        for (long e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = static_cast<long>(static_cast<__int128>(inv) * base % p);
            base = static_cast<long>(static_cast<__int128>(base) * base % p);
        }
        while (a.size() >= b.size() && !a.empty()) {
            long f = static_cast<long>(static_cast<__int128>(a.back()) * inv % p);
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                __int128 v = a[off + i] - static_cast<__int128>(f) * b[i] % p;
                long vv = static_cast<long>(v % p);
                if (vv < 0) vv += p;
                a[off + i] = vv;
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Probe whether gcd(a, b) is free of var: evaluate the other symbols at a
// point and reduce mod a prime, keeping lc_var(a) alive; a degree-0 image
// gcd forces the true gcd's var-degree to 0.
bool gcd_is_var_free(const MultiPoly& a, const MultiPoly& b, Var var) {
    static const long kPrimes[] = {1000003, 2000003, 30000001};
    static const long kBases[] = {3, -2, 5};
    for (int attempt = 0; attempt < 3; ++attempt) {
        long p = kPrimes[attempt];
        std::array<Rational, kNumVars> point{};
        long v = kBases[attempt];
        for (int i = 0; i < kNumVars; ++i) {
            point[i] = Rational(v);
            v = v * 3 + 1;
        }
        std::vector<Rational> ua = eval_to_univariate(a, var, point);
        if (static_cast<int>(ua.size()) - 1 != a.degree(var)) continue;  // lc vanished
        std::vector<Rational> ub = eval_to_univariate(b, var, point);
        if (ub.empty()) continue;
        std::vector<long> ma = to_mod_p(ua, p);
        std::vector<long> mb = to_mod_p(ub, p);
        if (ma.size() != ua.size()) continue;  // lc of the integer image died mod p
        if (mb.empty()) continue;
        if (gcd_degree_mod_p(std::move(ma), std::move(mb), p) == 0) return true;
    }
    return false;
}

}  // namespace

MultiPoly gcd_all(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));

    // Main variable: the first symbol occurring in either operand.
    Var var = Var::z;
    for (int i = 0; i < kNumVars; ++i) {
        Var vv = static_cast<Var>(i);
        if (a.depends_on(vv) || b.depends_on(vv)) {
            var = vv;
            break;
        }
    }
    if (!a.depends_on(var) || !b.depends_on(var)) {
        // var occurs in exactly one of them: gcd divides the content side.
        const MultiPoly& with = a.depends_on(var) ? a : b;
        const MultiPoly& without = a.depends_on(var) ? b : a;
        return gcd_all(content_wrt(with, var), without);
    }

    // Evaluation probe: a degree-0 specialized gcd (with the leading
    // coefficient preserved) forces the true gcd to be free of var.
    if (gcd_is_var_free(a, b, var)) {
        return gcd_all(content_wrt(a, var), content_wrt(b, var));
    }

    MultiPoly ca = content_wrt(a, var);
    MultiPoly cb = content_wrt(b, var);
    MultiPoly pa = *divide_exact(a, ca);
    MultiPoly pb = *divide_exact(b, cb);
    MultiPoly cg = gcd_all(ca, cb);

    // Primitive PRS on the primitive parts.
    if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
    while (true) {
        MultiPoly r = pseudo_rem(pa, pb, var);
        if (r.is_zero()) break;
        r = *divide_exact(r, content_wrt(r, var));
        pa = std::move(pb);
        pb = normalize_primitive(r);
        if (pb.degree(var) == 0) {
            pb = MultiPoly(Rational(1));
            break;
        }
    }
    return normalize_primitive(cg * pb);
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b, Var var) {
    MultiPoly g = gcd_all(a, b);
    if (g.is_zero()) return g;
    MultiPoly lc = g.leading_coeff(var);
    if (lc.is_constant() && !lc.is_zero()) {
        g *= lc.constant_value().inverse();
    }
    return g;
}

MultiPoly rename_var(const MultiPoly& p, Var from, Var to) {
    if (from == to) return p;
    if (p.depends_on(to)) throw std::logic_error("rename_var: target symbol already occurs");
    int i = static_cast<int>(from), j = static_cast<int>(to);
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        mm[j] = mm[i];
        mm[i] = 0;
        out.add_term(mm, c);
    }
    return out;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var var) {
    int df = f.degree(var), dg = g.degree(var);
    if (df <= 0 || dg <= 0) {
        throw std::domain_error("resultant: inputs must have positive degree in the given variable");
    }
    // Sylvester matrix, fraction-free Gaussian elimination (Bareiss).
    int n = df + dg;
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(n),
                                          std::vector<MultiPoly>(static_cast<size_t>(n)));
    for (int r = 0; r < dg; ++r) {
        for (int k = 0; k <= df; ++k) m[r][r + k] = f.coeff_of(var, df - k);
    }
    for (int r = 0; r < df; ++r) {
        for (int k = 0; k <= dg; ++k) m[dg + r][r + k] = g.coeff_of(var, dg - k);
    }

    MultiPoly denom(Rational(1));
    Rational sign(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            }
            if (piv < 0) return MultiPoly();  // singular: resultant is 0
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                MultiPoly num = m[r][c] * m[k][k] - m[r][k] * m[k][c];
                auto q = divide_exact(num, denom);
                if (!q) throw std::logic_error("resultant: Bareiss exact division failed");
                m[r][c] = std::move(*q);
            }
            m[r][k] = MultiPoly();
        }
        denom = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace ratsode
