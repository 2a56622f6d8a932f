#include "ratsode/curve.hpp"

#include <map>
#include <set>
#include <utility>

namespace ratsode {

namespace {

constexpr int kBlowupDepthCap = 12;

// ----- local bivariate polynomials over a number field ----------------------

// Sparse bivariate polynomial with coefficients in K, used for the local
// analysis of one singular point (axes renamed freely across blowup charts).
struct LocalPoly {
    std::map<std::pair<int, int>, NumberField::Elem> terms;

    void add(const NumberField& K, int i, int j, const NumberField::Elem& c) {
        if (K.is_zero(c)) return;
        auto key = std::make_pair(i, j);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms[key] = c;
        } else {
            it->second = K.add(it->second, c);
            if (K.is_zero(it->second)) terms.erase(it);
        }
    }

    int multiplicity() const {
        int m = -1;
        for (const auto& [ij, c] : terms) {
            int d = ij.first + ij.second;
            if (m < 0 || d < m) m = d;
        }
        return m;  // -1 for zero
    }
};

LocalPoly from_multipoly_local(const NumberField& K, const MultiPoly& f, Var vx, Var vy) {
    LocalPoly out;
    for (const auto& [m, c] : f.terms()) {
        out.add(K, static_cast<int>(m[static_cast<int>(vx)]), static_cast<int>(m[static_cast<int>(vy)]),
                K.from_rational(c));
    }
    return out;
}

// Map a local polynomial through a field embedding old -> L given the image
// of the old generator.
LocalPoly embed_local(const NumberField& L, const LocalPoly& g, const NumberField::Elem& gen_image) {
    LocalPoly out;
    for (const auto& [ij, c] : g.terms) {
        out.add(L, ij.first, ij.second, L.eval_at(c, gen_image));
    }
    return out;
}

// g(x + a, y + b).
LocalPoly translate_local(const NumberField& K, const LocalPoly& g, const NumberField::Elem& a,
                          const NumberField::Elem& b) {
    // Precompute binomials over the needed range.
    int max_i = 0, max_j = 0;
    for (const auto& [ij, c] : g.terms) {
        max_i = std::max(max_i, ij.first);
        max_j = std::max(max_j, ij.second);
    }
    std::vector<std::vector<Rational>> binom(static_cast<size_t>(std::max(max_i, max_j)) + 1);
    for (size_t n = 0; n < binom.size(); ++n) {
        binom[n].assign(n + 1, Rational(1));
        for (size_t k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    std::vector<NumberField::Elem> apow(static_cast<size_t>(max_i) + 1), bpow(static_cast<size_t>(max_j) + 1);
    apow[0] = K.from_rational(Rational(1));
    for (int i = 1; i <= max_i; ++i) apow[static_cast<size_t>(i)] = K.mul(apow[static_cast<size_t>(i - 1)], a);
    bpow[0] = K.from_rational(Rational(1));
    for (int j = 1; j <= max_j; ++j) bpow[static_cast<size_t>(j)] = K.mul(bpow[static_cast<size_t>(j - 1)], b);

    LocalPoly out;
    for (const auto& [ij, c] : g.terms) {
        int i = ij.first, j = ij.second;
        for (int ii = 0; ii <= i; ++ii) {
            NumberField::Elem ci =
                K.mul(c, K.mul(K.from_rational(binom[static_cast<size_t>(i)][static_cast<size_t>(ii)]),
                               apow[static_cast<size_t>(i - ii)]));
            for (int jj = 0; jj <= j; ++jj) {
                NumberField::Elem cij =
                    K.mul(ci, K.mul(K.from_rational(binom[static_cast<size_t>(j)][static_cast<size_t>(jj)]),
                                    bpow[static_cast<size_t>(j - jj)]));
                out.add(K, ii, jj, cij);
            }
        }
    }
    return out;
}

// Dehomogenized tangent cone: coefficient of t^j is the (i, j) term with
// i + j = m.
KPoly tangent_cone(const NumberField& K, const LocalPoly& g, int m) {
    KPoly tau(static_cast<size_t>(m) + 1);
    for (const auto& [ij, c] : g.terms) {
        if (ij.first + ij.second == m) tau[static_cast<size_t>(ij.second)] = c;
    }
    kp::trim(K, tau);
    return tau;
}

// Chart y = x*(t + t0): strict transform g(x, x(t+t0)) / x^m, axes (x, t).
LocalPoly blowup_chart_a(const NumberField& K, const LocalPoly& g, int m, const NumberField::Elem& t0) {
    int max_j = 0;
    for (const auto& [ij, c] : g.terms) max_j = std::max(max_j, ij.second);
    std::vector<std::vector<Rational>> binom(static_cast<size_t>(max_j) + 1);
    for (size_t n = 0; n < binom.size(); ++n) {
        binom[n].assign(n + 1, Rational(1));
        for (size_t k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    std::vector<NumberField::Elem> tpow(static_cast<size_t>(max_j) + 1);
    tpow[0] = K.from_rational(Rational(1));
    for (int j = 1; j <= max_j; ++j) tpow[static_cast<size_t>(j)] = K.mul(tpow[static_cast<size_t>(j - 1)], t0);

    LocalPoly out;
    for (const auto& [ij, c] : g.terms) {
        int i = ij.first, j = ij.second;
        // x^i (x(t+t0))^j / x^m = x^(i+j-m) * sum_k C(j,k) t0^(j-k) t^k
        for (int k = 0; k <= j; ++k) {
            NumberField::Elem ck =
                K.mul(c, K.mul(K.from_rational(binom[static_cast<size_t>(j)][static_cast<size_t>(k)]),
                               tpow[static_cast<size_t>(j - k)]));
            out.add(K, i + j - m, k, ck);
        }
    }
    return out;
}

// Chart x = s*y: strict transform g(s*y, y) / y^m, axes (s, y).
LocalPoly blowup_chart_b(const NumberField& K, const LocalPoly& g, int m) {
    LocalPoly out;
    for (const auto& [ij, c] : g.terms) {
        out.add(K, ij.first, ij.first + ij.second - m, c);
    }
    return out;
}

// Delta invariant of the local curve g at the origin, by quadratic
// transformations: m(m-1)/2 at the point, plus delta at every infinitely
// near point in the first neighborhood (only repeated tangent directions
// can carry singular near-points).
long delta_at(const NumberField& K, const LocalPoly& g, int depth) {
    if (depth > kBlowupDepthCap) {
        throw BlowupDepthExceeded("blowup recursion exceeded depth cap");
    }
    int m = g.multiplicity();
    if (m <= 1) return 0;
    long total = static_cast<long>(m) * (m - 1) / 2;

    KPoly tau = tangent_cone(K, g, m);
    int vertical_mult = m - kp::degree(tau);

    KPoly rep = kp::gcd(K, tau, kp::derivative(K, tau));
    if (kp::degree(rep) >= 1) {
        KPoly srep = squarefree_part_over(K, rep);
        for (const auto& si : factor_squarefree_over(K, srep)) {
            if (kp::degree(si) == 1) {
                NumberField::Elem t0 = K.neg(K.div(si[0], si[1]));
                LocalPoly g1 = blowup_chart_a(K, g, m, t0);
                total += delta_at(K, g1, depth + 1);
            } else {
                Extension ext = extend_by_root(K, si);
                LocalPoly gl = embed_local(ext.L, g, ext.alpha);
                LocalPoly g1 = blowup_chart_a(ext.L, gl, m, ext.theta);
                total += static_cast<long>(kp::degree(si)) * delta_at(ext.L, g1, depth + 1);
            }
        }
    }
    if (vertical_mult >= 2) {
        LocalPoly g2 = blowup_chart_b(K, g, m);
        total += delta_at(K, g2, depth + 1);
    }
    return total;
}

// fs with x evaluated at alpha, as a polynomial in y over K.
KPoly eval_x_at(const NumberField& K, const MultiPoly& fs, const NumberField::Elem& alpha) {
    int dx = std::max(fs.degree(Var::x), 0);
    std::vector<NumberField::Elem> apow(static_cast<size_t>(dx) + 1);
    apow[0] = K.from_rational(Rational(1));
    for (int i = 1; i <= dx; ++i) apow[static_cast<size_t>(i)] = K.mul(apow[static_cast<size_t>(i - 1)], alpha);
    KPoly out(static_cast<size_t>(std::max(fs.degree(Var::y), 0)) + 1);
    for (const auto& [m, c] : fs.terms()) {
        int i = static_cast<int>(m[static_cast<int>(Var::x)]);
        int j = static_cast<int>(m[static_cast<int>(Var::y)]);
        out[static_cast<size_t>(j)] =
            K.add(out[static_cast<size_t>(j)], K.mul(K.from_rational(c), apow[static_cast<size_t>(i)]));
    }
    kp::trim(K, out);
    return out;
}

// Homogenize f (degree d) and read it in one of the two infinity charts:
// chart 1: (y, w) with X = 1; chart 2: (x, w) with Y = 1.
LocalPoly infinity_chart_poly(const NumberField& K, const MultiPoly& f, int d, int chart) {
    LocalPoly out;
    for (const auto& [m, c] : f.terms()) {
        int a = static_cast<int>(m[static_cast<int>(Var::x)]);
        int b = static_cast<int>(m[static_cast<int>(Var::y)]);
        int wdeg = d - a - b;
        if (chart == 1) {
            out.add(K, b, wdeg, K.from_rational(c));  // axes (y, w)
        } else {
            out.add(K, a, wdeg, K.from_rational(c));  // axes (x, w)
        }
    }
    return out;
}

struct AffineFrame {
    MultiPoly fs;     // f(x + c*y, y)
    Rational shear;   // c
};

MultiPoly apply_shear(const MultiPoly& f, const Rational& c) {
    if (c.is_zero()) return f;
    return f.subst(Var::x, MultiPoly::variable(Var::x) + MultiPoly(c) * MultiPoly::variable(Var::y));
}

}  // namespace

PlaneCurve make_plane_curve(const MultiPoly& f) {
    if (f.is_zero()) throw std::domain_error("PlaneCurve: zero polynomial");
    for (Var v : f.vars()) {
        if (v != Var::x && v != Var::y) {
            throw std::domain_error("PlaneCurve: expected a polynomial in x, y");
        }
    }
    if (f.total_degree() < 1) throw std::domain_error("PlaneCurve: constant polynomial");
    MultiPoly g = gcd_all(gcd_all(f, f.derivative(Var::x)), f.derivative(Var::y));
    if (!g.is_constant()) throw NotSquarefree("curve has a repeated component");
    return PlaneCurve{f.primitive_rational(), f.total_degree()};
}

std::vector<SingularCluster> singular_points(const PlaneCurve& c) {
    std::vector<SingularCluster> out;
    const MultiPoly& f = c.f;
    int d = c.degree;

    // ----- affine clusters, with shear retries for cluster separation -----
    if (d >= 2) {
        const long shear_list[] = {0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11};
        bool done = false;
        for (long cs : shear_list) {
            Rational shear(cs);
            MultiPoly fs = apply_shear(f, shear);
            if (fs.degree(Var::y) < 2) continue;  // need y-degree >= 2 for elimination
            MultiPoly fy = fs.derivative(Var::y);
            MultiPoly fx = fs.derivative(Var::x);
            MultiPoly R = resultant(fs, fy, Var::y);
            if (R.is_zero()) throw NotSquarefree("vanishing discriminant");

            std::vector<SingularCluster> found;
            bool retry = false;
            if (!R.is_constant()) {
                for (const auto& [q, mult] : factor_univariate(rename_var(R, Var::x, Var::z)).factors) {
                    (void)mult;
                    MultiPoly qx = rename_var(q, Var::z, Var::x);
                    UPoly qu = up::from_multipoly(qx, Var::x);
                    int e = up::degree(qu);
                    NumberField K = e == 1 ? NumberField::rationals() : NumberField(qu, false);
                    NumberField::Elem alpha =
                        e == 1 ? K.from_rational(-qu[0]) : K.generator();
                    // gcd of the specialized (f, f_y, f_x); kp::gcd treats 0 as absorbing.
                    KPoly h = kp::gcd(K, eval_x_at(K, fs, alpha), eval_x_at(K, fy, alpha));
                    h = kp::gcd(K, h, eval_x_at(K, fx, alpha));
                    if (kp::degree(h) <= 0) continue;  // no singular point above this factor
                    KPoly hs = squarefree_part_over(K, h);
                    if (kp::degree(hs) != 1) {
                        retry = true;  // orbit not separated in this frame
                        break;
                    }
                    NumberField::Elem y0 = K.neg(K.div(hs[0], hs[1]));

                    SingularCluster cl;
                    cl.field = K;
                    cl.y0 = y0;
                    cl.x0 = K.add(alpha, K.mul(K.from_rational(shear), y0));  // original coords
                    cl.defining_poly = qx;
                    cl.size = e;
                    cl.shear = shear;
                    cl.chart = 0;

                    // Exactness guard: f, f_x, f_y all vanish at (x0, y0).
                    LocalPoly lf = from_multipoly_local(K, f, Var::x, Var::y);
                    LocalPoly lg = translate_local(K, lf, cl.x0, cl.y0);
                    int m = lg.multiplicity();
                    if (m < 2) throw std::logic_error("singular_points: cluster failed the rank check");
                    cl.multiplicity = m;
                    cl.delta = delta_at(K, lg, 0);
                    found.push_back(std::move(cl));
                }
            }
            if (!retry) {
                out = std::move(found);
                done = true;
                break;
            }
        }
        if (!done) throw ResourceCapError("singular_points: no separating shear found");
    }

    // ----- clusters at infinity -----
    if (d >= 2) {
        // Directions: roots of the top form LF(1, s); plus (0:1) if deg drops.
        MultiPoly top;
        for (const auto& [m, coef] : f.terms()) {
            if (mono_total_degree(m) == d) top.add_term(m, coef);
        }
        UPoly tau(static_cast<size_t>(d) + 1);
        for (const auto& [m, coef] : top.terms()) {
            tau[m[static_cast<int>(Var::y)]] = coef;
        }
        up::trim(tau);

        auto analyze_infinity = [&](const NumberField& K, const NumberField::Elem& theta, int chart,
                                    const MultiPoly& defining, int e) {
            LocalPoly g0 = infinity_chart_poly(K, f, d, chart);
            NumberField::Elem zero = K.from_rational(Rational(0));
            LocalPoly lg = translate_local(K, g0, chart == 1 ? theta : zero, zero);
            int m = lg.multiplicity();
            if (m < 2) return;  // smooth point at infinity
            SingularCluster cl;
            cl.field = K;
            cl.x0 = chart == 1 ? theta : zero;
            cl.y0 = zero;
            cl.defining_poly = defining;
            cl.size = e;
            cl.multiplicity = m;
            cl.at_infinity = true;
            cl.chart = chart;
            cl.delta = delta_at(K, lg, 0);
            out.push_back(std::move(cl));
        };

        if (up::degree(tau) < d) {
            // direction (0:1), chart Y=1, point (x, w) = (0, 0)
            analyze_infinity(NumberField::rationals(), NumberField::rationals().from_rational(Rational(0)),
                             2, MultiPoly::variable(Var::x), 1);
        }
        if (up::degree(tau) >= 1) {
            for (const auto& [q, mult] : factor_univariate(up::to_multipoly(tau, Var::z)).factors) {
                (void)mult;
                UPoly qu = up::from_multipoly(q, Var::z);
                int e = up::degree(qu);
                NumberField K = e == 1 ? NumberField::rationals() : NumberField(qu, false);
                NumberField::Elem theta = e == 1 ? K.from_rational(-qu[0]) : K.generator();
                analyze_infinity(K, theta, 1, rename_var(q, Var::z, Var::x), e);
            }
        }
    }
    return out;
}

long delta_invariant(const PlaneCurve& c, const SingularCluster& s) {
    const NumberField& K = s.field;
    LocalPoly lg;
    NumberField::Elem zero = K.from_rational(Rational(0));
    if (s.chart == 0) {
        LocalPoly lf = from_multipoly_local(K, c.f, Var::x, Var::y);
        lg = translate_local(K, lf, s.x0, s.y0);
    } else {
        LocalPoly g0 = infinity_chart_poly(K, c.f, c.degree, s.chart);
        lg = translate_local(K, g0, s.x0, s.y0);
    }
    if (lg.multiplicity() < 2) throw std::logic_error("delta_invariant: not a singular point");
    return delta_at(K, lg, 0);
}

int genus_plane(const PlaneCurve& c) {
    int d = c.degree;
    long budget = static_cast<long>(d - 1) * (d - 2) / 2;
    long deficit = 0;
    for (const auto& cl : singular_points(c)) {
        deficit += static_cast<long>(cl.size) * cl.delta;
    }
    long g = budget - deficit;
    if (g < 0) {
        throw ReducibleSuspected("singularity budget exceeded: genus " + std::to_string(g));
    }
    return static_cast<int>(g);
}

PlaneCurve specialize(const MultiPoly& F, const Rational& z0) {
    int d_generic = F.total_degree({Var::w, Var::wp});
    MultiPoly f0 = F.subst(Var::z, z0);
    MultiPoly f = rename_var(rename_var(f0, Var::w, Var::x), Var::wp, Var::y);
    if (f.is_zero() || f.total_degree() != d_generic) {
        throw DegenerateSample("specialization drops the curve degree");
    }
    MultiPoly g = gcd_all(gcd_all(f, f.derivative(Var::x)), f.derivative(Var::y));
    if (!g.is_constant()) {
        throw DegenerateSample("specialization is not squarefree");
    }
    return PlaneCurve{f.primitive_rational(), d_generic};
}

std::string GenusReport::describe() const {
    std::string s;
    switch (kind) {
        case Kind::value: s = "genus " + std::to_string(genus); break;
        case Kind::inconsistent: s = "inconsistent samples"; break;
        case Kind::reducible_suspected: s = "reducible suspected"; break;
    }
    s += " [";
    for (size_t i = 0; i < samples.size(); ++i) {
        if (i) s += ", ";
        s += "z=" + samples[i].z0.str() + ":";
        s += samples[i].degenerate ? "degenerate" : std::to_string(samples[i].genus);
    }
    s += "]";
    return s;
}

GenusReport algebraic_genus(const MultiPoly& F, int samples, unsigned long seed) {
    if (F.degree(Var::wp) < 1) throw std::domain_error("algebraic_genus: degree in wp must be positive");
    GenusReport report;
    uint64_t state = 0x9E3779B97F4A7C15ull ^ (static_cast<uint64_t>(seed) * 0xBF58476D1CE4E5B9ull);
    auto next = [&state]() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t x = state;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    };

    long bound = 50;
    std::set<long> used;
    std::map<int, int> votes;
    int nondegenerate = 0;
    int attempts = 0;
    const int attempt_cap = 60 * samples;

    auto majority = [&]() -> std::optional<int> {
        for (const auto& [g, n] : votes) {
            if (2 * n > nondegenerate) return g;
        }
        return std::nullopt;
    };

    while (true) {
        if (++attempts > attempt_cap) {
            throw ResourceCapError("algebraic_genus: sampling attempts exhausted");
        }
        if (attempts % (2 * samples) == 0) bound *= 2;
        long z0 = static_cast<long>(next() % static_cast<uint64_t>(2 * bound + 1)) - bound;
        if (!used.insert(z0).second) continue;
        GenusSample sample;
        sample.z0 = Rational(z0);
        try {
            PlaneCurve curve = specialize(F, sample.z0);
            sample.genus = genus_plane(curve);
        } catch (const DegenerateSample&) {
            sample.degenerate = true;
            report.samples.push_back(sample);
            continue;
        } catch (const ReducibleSuspected&) {
            report.samples.push_back(sample);
            report.kind = GenusReport::Kind::reducible_suspected;
            return report;
        }
        report.samples.push_back(sample);
        votes[sample.genus] += 1;
        ++nondegenerate;
        if (nondegenerate >= samples) {
            if (auto g = majority()) {
                report.kind = GenusReport::Kind::value;
                report.genus = *g;
                return report;
            }
            if (nondegenerate >= 3 * samples) {
                report.kind = GenusReport::Kind::inconsistent;
                return report;
            }
        }
    }
}

}  // namespace ratsode
