#include <doctest.h>

#include "ratsode/parametrize.hpp"
#include "ratsode/problem.hpp"
#include "test_util.hpp"

using namespace ratsode;
using testutil::mp;
using testutil::rf;

TEST_CASE("verify_parametrization on the bundled examples") {
    Problem p1 = load_problem(std::string(RATSODE_PROBLEM_DIR) + "/example1.prob");
    REQUIRE(p1.parametrization.has_value());
    CHECK(verify_parametrization(p1.equation, p1.parametrization->first, p1.parametrization->second));

    Problem p2 = load_problem(std::string(RATSODE_PROBLEM_DIR) + "/example2.prob");
    REQUIRE(p2.parametrization.has_value());
    CHECK(verify_parametrization(p2.equation, p2.parametrization->first, p2.parametrization->second));

    // (t, t) is not a parametrization of wp - w - 1.
    CHECK(!verify_parametrization(mp("wp - w - 1"), rf("t"), rf("t")));
    CHECK_THROWS_AS(make_parametrization(mp("wp - w - 1"), rf("t"), rf("t"),
                                         Parametrization::Source::user_supplied),
                    std::domain_error);
    // r1 constant in t is rejected.
    CHECK_THROWS_AS(make_parametrization(mp("wp - w"), rf("z"), rf("z"),
                                         Parametrization::Source::user_supplied),
                    std::domain_error);
}

TEST_CASE("auto parametrize: lines") {
    auto out = auto_parametrize(mp("wp - 2*w - 3"));
    REQUIRE(out.param.has_value());
    CHECK(out.param->source == Parametrization::Source::builtin_line);
    CHECK(out.param->r1 == rf("t"));
    CHECK(out.param->r2 == rf("2*t + 3"));

    // z-dependent line.
    auto out2 = auto_parametrize(mp("z*wp - w + z^2"));
    REQUIRE(out2.param.has_value());
    CHECK(verify_parametrization(mp("z*wp - w + z^2"), out2.param->r1, out2.param->r2));
}

TEST_CASE("auto parametrize: conics") {
    // Circle with the rational point (1, 0): line pencil through it.
    MultiPoly circle = mp("w^2 + wp^2 - 1");
    auto out = auto_parametrize(circle);
    REQUIRE(out.param.has_value());
    CHECK(out.param->source == Parametrization::Source::builtin_conic);
    CHECK(verify_parametrization(circle, out.param->r1, out.param->r2));
    CHECK(out.param->r1.depends_on(Var::t));

    // Parabola wp = w^2.
    MultiPoly parabola = mp("wp - w^2");
    auto out2 = auto_parametrize(parabola);
    REQUIRE(out2.param.has_value());
    CHECK(verify_parametrization(parabola, out2.param->r1, out2.param->r2));

    // Conic with z-dependent coefficients: w^2 + wp^2 = z^2 has point (z, 0).
    MultiPoly zc = mp("w^2 + wp^2 - z^2");
    auto out3 = auto_parametrize(zc);
    REQUIRE(out3.param.has_value());
    CHECK(verify_parametrization(zc, out3.param->r1, out3.param->r2));

    // x^2 + y^2 + 1 = 0 has no rational points at all.
    auto out4 = auto_parametrize(mp("w^2 + wp^2 + 1"));
    CHECK(!out4.param.has_value());
}

TEST_CASE("auto parametrize: monoid curves") {
    // Cuspidal cubic y^2 = x^3: x = t^2, y = t^3 via lines through the cusp.
    MultiPoly cusp = mp("wp^2 - w^3");
    auto out = auto_parametrize(cusp);
    REQUIRE(out.param.has_value());
    CHECK(out.param->source == Parametrization::Source::builtin_monoid);
    CHECK(out.param->r1 == rf("t^2"));
    CHECK(out.param->r2 == rf("t^3"));

    // Nodal cubic.
    MultiPoly nodal = mp("wp^2 - w^2*(w + 1)");
    auto out2 = auto_parametrize(nodal);
    REQUIRE(out2.param.has_value());
    CHECK(verify_parametrization(nodal, out2.param->r1, out2.param->r2));

    // Monoid with a z-dependent double point: (y - z x)^2 x - x^3 ... use
    // f = (wp - z*w)^2 - w^3, double point at origin over Q(z).
    MultiPoly zmono = mp("(wp - z*w)^2 - w^3");
    auto out3 = auto_parametrize(zmono);
    REQUIRE(out3.param.has_value());
    CHECK(verify_parametrization(zmono, out3.param->r1, out3.param->r2));

    // Smooth cubic: no (d-1)-fold point exists.
    auto out4 = auto_parametrize(mp("wp^2 - w^3 - 1"));
    CHECK(!out4.param.has_value());
}

TEST_CASE("random monoid curves parametrize and verify") {
    testutil::Rng rng(321);
    int done = 0;
    while (done < 8) {
        // f = L(x, y) * x^(d-1)-ish structure: take f = f_{d-1} + f_d with
        // random homogeneous parts, monoid point at the origin.
        int d = 3 + static_cast<int>(rng.range(0, 1));
        MultiPoly fd1, fd;
        for (int j = 0; j <= d - 1; ++j) {
            Mono m{};
            m[static_cast<int>(Var::w)] = static_cast<uint32_t>(d - 1 - j);
            m[static_cast<int>(Var::wp)] = static_cast<uint32_t>(j);
            fd1.add_term(m, Rational(rng.range(-3, 3)));
        }
        for (int j = 0; j <= d; ++j) {
            Mono m{};
            m[static_cast<int>(Var::w)] = static_cast<uint32_t>(d - j);
            m[static_cast<int>(Var::wp)] = static_cast<uint32_t>(j);
            fd.add_term(m, Rational(rng.range(-3, 3)));
        }
        if (fd1.is_zero() || fd.is_zero()) continue;
        MultiPoly f = fd1 + fd;
        if (!gcd_all(fd1, fd).is_constant()) continue;
        auto out = auto_parametrize(f);
        if (!out.param) continue;  // e.g. degenerate monoid data
        CHECK(verify_parametrization(f, out.param->r1, out.param->r2));
        ++done;
    }
}

TEST_CASE("rational roots over Q(z)") {
    // p(x) = (x - z^2) (x - 1/(z+1)) (x^2 + z): rational roots z^2 and 1/(z+1).
    MultiPoly x = MultiPoly::variable(Var::x);
    MultiPoly z = MultiPoly::variable(Var::z);
    MultiPoly p = (x - z * z) * ((z + MultiPoly(Rational(1))) * x - MultiPoly(Rational(1))) *
                  (x * x + z);
    auto roots = rational_roots_z(p, Var::x);
    REQUIRE(roots.size() == 2);
    bool saw_z2 = false, saw_inv = false;
    for (const auto& r : roots) {
        if (r == rf("z^2")) saw_z2 = true;
        if (r == rf("1/(z + 1)")) saw_inv = true;
    }
    CHECK(saw_z2);
    CHECK(saw_inv);

    // x = 0 root and constants.
    MultiPoly q = x * (x - MultiPoly(Rational(3, 2)));
    auto roots2 = rational_roots_z(q, Var::x);
    REQUIRE(roots2.size() == 2);
}
