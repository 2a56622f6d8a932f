// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all symbolic identities, so "tolerance" means exact equality) and prints
// one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ratsode/pipeline.hpp"
#include "ratsode/ratcalc.hpp"

using namespace ratsode;

namespace {

struct Harness {
    int failures = 0;
    void run(const std::string& name, const std::function<void()>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            body();
        } catch (const std::exception& e) {
            error = e.what();
        } catch (...) {
            error = "unknown exception";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty()) {
            std::printf("PASS  %-58s (%.2fs)\n", name.c_str(), secs);
        } else {
            std::printf("FAIL  %-58s (%.2fs)\n      %s\n", name.c_str(), secs, error.c_str());
            ++failures;
        }
    }
};

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

Problem from_file(const std::string& name) {
    return load_problem(std::string(RATSODE_PROBLEM_DIR) + "/" + name);
}

RatFunc rf(const std::string& s) {
    return parse_ratfunc(s);
}

struct Rng {
    uint64_t s;
    uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        uint64_t x = s;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % uint64_t(hi - lo + 1)); }
};

RatFunc random_proper(Rng& rng, int max_den_deg) {
    MultiPoly den{Rational(1)};
    int deg = 0;
    while (deg < max_den_deg) {
        MultiPoly fac = rng.range(0, 2) == 0
                            ? rf("z^2 + " + std::to_string(rng.range(1, 5))).num()
                            : rf("z - " + std::to_string(rng.range(-3, 3))).num();
        den *= fac;
        deg += fac.degree(Var::z);
    }
    MultiPoly num;
    int nd = static_cast<int>(rng.range(0, std::max(0, deg - 1)));
    for (int i = 0; i <= nd; ++i) {
        Mono m{};
        m[static_cast<int>(Var::z)] = static_cast<uint32_t>(i);
        num.add_term(m, Rational(rng.range(-6, 6)));
    }
    if (num.is_zero()) num = MultiPoly(Rational(1));
    return RatFunc(num, den);
}

}  // namespace

int main() {
    Harness h;

    // ----------------------------------------------------------------------
    h.run("criterion 1: example 1 end-to-end (quartic, t' = 1/27)", [] {
        auto start = std::chrono::steady_clock::now();
        Problem p = from_file("example1.prob");
        PipelineResult r = solve_pipeline(p);
        require(r.status == PipelineResult::Status::solved, "status != solved: " + r.reason);
        require(r.verified, "not verified");
        require(r.genus && r.genus->kind == GenusReport::Kind::value && r.genus->genus == 0,
                "genus consensus != 0");
        require(r.riccati && r.riccati->A.is_zero() && r.riccati->B.is_zero() &&
                    r.riccati->C == rf("1/27"),
                "Riccati equation is not t' = 1/27");
        RatFunc reference = rf(
            "17/16 - 27*(z/27 + lambda) + (2187/2)*(z/27 + lambda)^2"
            " + 531441*(z/27 + lambda)^4");
        require(verify_general_solution(p.equation, reference),
                "reference family fails exact verification");
        require(r.solution->expr == reference, "computed family differs from the reference one");
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(secs < 5.0, "runtime exceeded 5 s");
    });

    // ----------------------------------------------------------------------
    h.run("criterion 2: example 2 end-to-end (A,B,C and r pinned)", [] {
        auto start = std::chrono::steady_clock::now();
        Problem p = from_file("example2.prob");
        PipelineResult r = solve_pipeline(p);
        require(r.status == PipelineResult::Status::solved, "status != solved: " + r.reason);
        require(r.verified, "not verified");
        require(r.genus && r.genus->genus == 0, "genus consensus != 0");
        require(r.riccati && r.riccati->A == rf("(z^2 + 2)/(2*(z^2 + 1))") &&
                    r.riccati->B == rf("z/(z^2 + 1)") && r.riccati->C == rf("3/(2*(z^2 + 1))"),
                "Riccati coefficients differ from the reference values");
        require(r.normal_r && *r.normal_r == rf("-6/((z^2 + 2)^2)"),
                "normal form differs from the reference -6/(z^2+2)^2");
        RatFunc reference = rf(
            "(z^2*lambda^2 - 2*z*lambda^3 + 4*z*lambda + 4 + lambda^4 - 3*lambda^2)"
            "/((z*lambda + 2 - lambda^2)^2*z)");
        require(verify_general_solution(p.equation, reference),
                "reference family fails exact verification");
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(secs < 10.0, "runtime exceeded 10 s");
    });

    // ----------------------------------------------------------------------
    h.run("criterion 3: negative controls (genus 1; cubic t-equation)", [] {
        for (unsigned long seed : {0ul, 11ul, 2024ul}) {
            Problem p = from_file("genus_one.prob");
            p.seed = seed;
            PipelineResult r = solve_pipeline(p);
            require(r.status == PipelineResult::Status::no_rational_general_solution,
                    "genus-1 equation was not rejected");
            require(r.genus && r.genus->genus == 1, "consensus != 1");
            int nondeg = 0;
            for (const auto& s : r.genus->samples) nondeg += s.degenerate ? 0 : 1;
            require(nondeg >= 5, "fewer than 5 non-degenerate samples");
        }
        // Fake-but-valid parametrization forcing a cubic t-equation.
        Problem q;
        q.equation = parse_ratfunc("wp - w^3").num();
        q.parametrization = std::make_pair(rf("t"), rf("t^3"));
        bool fuchs = false;
        try {
            TParamODE ode = derive_param_ode(make_parametrization(
                q.equation, rf("t"), rf("t^3"), Parametrization::Source::user_supplied));
            cast_to_riccati(ode);
        } catch (const FuchsViolation&) {
            fuchs = true;
        }
        require(fuchs, "cubic right-hand side did not raise FuchsViolation");
        PipelineResult r = solve_pipeline(q);
        require(r.status == PipelineResult::Status::no_rational_general_solution,
                "pipeline did not reject the cubic t-equation");
    });

    // ----------------------------------------------------------------------
    h.run("criterion 4: Riccati solver oracle suite (50 + 50 + clauses)", [] {
        // (a) 50 manufactured r = v0' + v0^2 with random integer residues:
        // the pole screen passes and a rational particular solution is
        // recovered and verifies. (A rational general solution need not
        // exist for every such r; when it does, it is found -- see (b).)
        Rng rng{9001};
        int done = 0;
        while (done < 50) {
            int npoles = 1 + static_cast<int>(rng.range(0, 3));
            std::set<long> used;
            RatFunc v0;
            for (int i = 0; i < npoles; ++i) {
                long zi = rng.range(-9, 9);
                if (!used.insert(zi).second) continue;
                long ai = rng.range(-9, 9);
                if (ai == 0) ai = 1;
                v0 += RatFunc(MultiPoly(Rational(ai))) /
                      (RatFunc::variable(Var::z) - RatFunc(Rational(zi)));
            }
            if (v0.is_zero()) continue;
            RatFunc r = v0.derivative(Var::z) + v0 * v0;
            if (r.is_zero()) continue;
            PoleAnalysis analysis = analyze_poles(r);
            require(analysis.admissible, "pole screen rejected a manufactured instance");
            auto part = particular_rational_solution(r, analysis.poles);
            require(part.has_value(), "no particular solution recovered");
            require(satisfies_normal_riccati(*part, r), "recovered particular fails");
            ++done;
        }
        // (b) 50 instances manufactured to admit a rational general solution
        // (family data chosen first): the solver returns a verified family.
        Rng rng2{424242};
        done = 0;
        while (done < 50) {
            MultiPoly N, D;
            for (int i = 0; i <= 2; ++i) {
                Mono m{};
                m[static_cast<int>(Var::z)] = static_cast<uint32_t>(i);
                N.add_term(m, Rational(rng2.range(-5, 5)));
                Mono m2{};
                m2[static_cast<int>(Var::z)] = static_cast<uint32_t>(rng2.range(0, 2));
                D.add_term(m2, Rational(rng2.range(-3, 3)));
            }
            if (N.is_zero() || D.is_zero()) continue;
            RatFunc I(N, D);
            RatFunc Ip = I.derivative(Var::z);
            if (Ip.is_zero()) continue;
            RatFunc E = Ip.inverse();
            RatFunc v0 = E.derivative(Var::z) / (E * RatFunc(Rational(2)));
            RatFunc r = v0.derivative(Var::z) + v0 * v0;
            ClassicalOutcome oc = solve_classical_riccati(r);
            require(oc.solution.has_value(), "solvable instance returned none: " + oc.reason);
            require(satisfies_normal_riccati(oc.solution->expr, r), "family fails its equation");
            require(!oc.solution->expr.derivative(Var::lambda).is_zero(), "family lost lambda");
            ++done;
        }
        // (c) the Proposition clauses are named.
        ClassicalOutcome bad1 = solve_classical_riccati(rf("1/z"));
        require(!bad1.solution && bad1.reason.find("clause (a)") != std::string::npos,
                "r = 1/z must fail clause (a)");
        ClassicalOutcome bad2 = solve_classical_riccati(rf("z"));
        require(!bad2.solution && bad2.reason.find("clause (a)") != std::string::npos,
                "r = z must fail clause (a)");
    });

    // ----------------------------------------------------------------------
    h.run("criterion 5: constant-coefficient corollary", [] {
        PipelineResult r1 = solve_pipeline(from_file("constant_riccati.prob"));
        require(r1.status == PipelineResult::Status::solved, "u' + u^2 = 0 not solved");
        require(r1.solution->expr == rf("1/(z + lambda)"), "family != 1/(z + lambda)");

        PipelineResult r2 = solve_pipeline(from_file("constant_exponential.prob"));
        require(r2.status == PipelineResult::Status::no_rational_general_solution,
                "u' = 2u + 3 must have no rational general solution");

        PipelineResult r3 = solve_pipeline(from_file("constant_linear.prob"));
        require(r3.status == PipelineResult::Status::solved, "u' = 3 not solved");
        require(r3.solution->expr == rf("3*z + lambda"), "family != 3z + lambda");
    });

    // ----------------------------------------------------------------------
    h.run("criterion 6a: Hermite derivative-inverse property (200)", [] {
        Rng rng{5150};
        for (int i = 0; i < 200; ++i) {
            RatFunc v = random_proper(rng, 4);
            RatFunc r = v.derivative(Var::z);
            HermiteResult hr = hermite_integrate(r, Var::z);
            require(hr.log_free, "manufactured rational integral flagged as logarithmic");
            require(hr.rational_part.derivative(Var::z) == r, "derivative does not invert");
        }
    });

    h.run("criterion 6b: partial-fraction reassembly identity (200)", [] {
        Rng rng{616};
        for (int i = 0; i < 200; ++i) {
            RatFunc r = random_proper(rng, 8);
            require(reassemble(partial_fractions(r, Var::z)) == r, "reassembly mismatch");
        }
    });

    h.run("criterion 6c: parser round-trip (500)", [] {
        Rng rng{777};
        const Var pool[] = {Var::z, Var::w, Var::wp, Var::t, Var::lambda};
        for (int i = 0; i < 500; ++i) {
            MultiPoly num, den;
            for (int k = 0; k < 3; ++k) {
                Mono m{};
                m[static_cast<int>(pool[rng.next() % 5])] = static_cast<uint32_t>(rng.range(0, 3));
                num.add_term(m, Rational(rng.range(-9, 9), rng.range(1, 9)));
                Mono m2{};
                m2[static_cast<int>(pool[rng.next() % 5])] = static_cast<uint32_t>(rng.range(0, 2));
                den.add_term(m2, Rational(rng.range(-9, 9), rng.range(1, 9)));
            }
            if (den.is_zero()) continue;
            RatFunc r(num, den);
            require(parse_ratfunc(render_expr(r)) == r, "round trip failed: " + render_expr(r));
        }
    });

    h.run("criterion 6d: genus invariance under affine maps (10 curves)", [] {
        Rng rng{88};
        const char* curves[] = {
            "wp^2 - w^3", "wp^2 - w^3 - 1", "wp^2 - w^2*(w + 1)", "w^2 + wp^2 - 1",
            "wp^2 - w^4 - w^5", "wp^2*w - 1", "wp - w^2",
            "(w^2 + wp^2)^2 + 3*w^2*wp - wp^3", "wp^3 - w^2", "wp^2 - w^6 - 1",
        };
        for (const char* s : curves) {
            MultiPoly f = rename_var(rename_var(parse_ratfunc(s).num(), Var::w, Var::x),
                                     Var::wp, Var::y);
            int g0 = genus_plane(make_plane_curve(f));
            Rational a, b, c, d;
            do {
                a = Rational(rng.range(-3, 3));
                b = Rational(rng.range(-3, 3));
                c = Rational(rng.range(-3, 3));
                d = Rational(rng.range(-3, 3));
            } while ((a * d - b * c).is_zero());
            MultiPoly nx = MultiPoly(a) * MultiPoly::variable(Var::x) +
                           MultiPoly(b) * MultiPoly::variable(Var::y) +
                           MultiPoly(Rational(rng.range(-2, 2)));
            MultiPoly ny = MultiPoly(c) * MultiPoly::variable(Var::x) +
                           MultiPoly(d) * MultiPoly::variable(Var::y) +
                           MultiPoly(Rational(rng.range(-2, 2)));
            MultiPoly moved = rename_var(rename_var(f, Var::x, Var::u), Var::y, Var::v);
            moved = moved.subst(Var::u, nx).subst(Var::v, ny);
            require(genus_plane(make_plane_curve(moved)) == g0,
                    std::string("genus changed under an affine map: ") + s);
        }
    });

    h.run("criterion 6e: chain soundness for every produced chain", [] {
        const RiccatiODE cases[] = {
            {rf("1"), rf("0"), rf("0")},
            {rf("(z^2 + 2)/(2*(z^2 + 1))"), rf("z/(z^2 + 1)"), rf("3/(2*(z^2 + 1))")},
            {rf("-1"), rf("0"), rf("z")},
            {rf("z"), rf("1/z"), rf("z^2 + 1")},
            {rf("1/(z - 1)"), rf("z"), rf("-1/z")},
            {rf("z^2"), rf("z - 1"), rf("1/(z^2 + 1)")},
        };
        for (const auto& rc : cases) {
            NormalizeResult nr = normalize_riccati(rc);  // identity checked at construction
            require(chain_is_sound(rc, nr), "chain identity failed");
        }
        // And the pipeline-produced chain for example 2, via its normal form.
        Problem p = from_file("example2.prob");
        PipelineResult r = solve_pipeline(p);
        require(r.status == PipelineResult::Status::solved, "example 2 regression");
    });

    if (h.failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", h.failures);
    return 1;
}
