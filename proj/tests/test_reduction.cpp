#include <doctest.h>

#include "ratsode/problem.hpp"
#include "ratsode/reduction.hpp"
#include "test_util.hpp"

using namespace ratsode;
using testutil::mp;
using testutil::rf;

namespace {

Problem example(int which) {
    return load_problem(std::string(RATSODE_PROBLEM_DIR) +
                        (which == 1 ? "/example1.prob" : "/example2.prob"));
}

Parametrization param_of(const Problem& p) {
    return make_parametrization(p.equation, p.parametrization->first, p.parametrization->second,
                                Parametrization::Source::user_supplied);
}

}  // namespace

TEST_CASE("leading coefficient check") {
    CHECK(leading_coeff_check(example(1).equation).pass);   // monic in wp
    CHECK(leading_coeff_check(example(2).equation).pass);   // z^2 * wp^2: z-only
    auto bad = leading_coeff_check(mp("w*wp^2 - 1"));
    CHECK(!bad.pass);
    CHECK(bad.A0 == mp("w"));
}

TEST_CASE("derive_param_ode on the bundled examples") {
    // Example 1: dt/dz = 1/27.
    TParamODE ode1 = derive_param_ode(param_of(example(1)));
    CHECK(ode1.rhs == rf("1/27"));

    // Example 2: the printed Riccati right-hand side.
    TParamODE ode2 = derive_param_ode(param_of(example(2)));
    RatFunc expected = rf("(z^2 + 2)/(2*(z^2 + 1))") * rf("t^2") + rf("z/(z^2 + 1)") * rf("t") +
                       rf("3/(2*(z^2 + 1))");
    CHECK(ode2.rhs == expected);

    // Trivial case: r1 = t, r2 = t gives dt/dz = t.
    Parametrization triv = make_parametrization(mp("wp - w"), rf("t"), rf("t"),
                                                Parametrization::Source::user_supplied);
    CHECK(derive_param_ode(triv).rhs == rf("t"));
}

TEST_CASE("cast_to_riccati") {
    TParamODE ode2 = derive_param_ode(param_of(example(2)));
    RiccatiODE rc = cast_to_riccati(ode2);
    CHECK(rc.A == rf("(z^2 + 2)/(2*(z^2 + 1))"));
    CHECK(rc.B == rf("z/(z^2 + 1)"));
    CHECK(rc.C == rf("3/(2*(z^2 + 1))"));

    RiccatiODE rc1 = cast_to_riccati(TParamODE{rf("1/27")});
    CHECK(rc1.A.is_zero());
    CHECK(rc1.B.is_zero());
    CHECK(rc1.C == rf("1/27"));

    CHECK_THROWS_AS(cast_to_riccati(TParamODE{rf("t^3")}), FuchsViolation);
    CHECK_THROWS_AS(cast_to_riccati(TParamODE{rf("(t^4 + 1)/(z)")}), FuchsViolation);
    CHECK_THROWS_AS(cast_to_riccati(TParamODE{rf("1/t")}), FuchsViolation);
}

TEST_CASE("normalize_riccati") {
    // t' = t^2: r = 0, chain t = -u, u = v.
    NormalizeResult nr = normalize_riccati(RiccatiODE{rf("1"), rf("0"), rf("0")});
    CHECK(!nr.linear_case);
    CHECK(nr.r.is_zero());
    CHECK(nr.chain.u_from_v->beta.is_zero());
    CHECK(nr.chain.t_from_u->A == rf("1"));

    // Example 2's coefficients: r = -6/(z^2+2)^2 exactly.
    RiccatiODE rc2{rf("(z^2 + 2)/(2*(z^2 + 1))"), rf("z/(z^2 + 1)"), rf("3/(2*(z^2 + 1))")};
    NormalizeResult nr2 = normalize_riccati(rc2);
    CHECK(!nr2.linear_case);
    CHECK(nr2.r == rf("-6/((z^2 + 2)^2)"));
    // The intermediate u-equation coefficient, by the stated formula
    // B + A'/A (the text prints the opposite sign; the chain identity is the
    // arbiter and is checked by construction).
    RatFunc btilde = rc2.B + rc2.A.derivative(Var::z) / rc2.A;
    CHECK(btilde == rf("z^3/((z^2 + 1)*(z^2 + 2))"));
    CHECK(nr2.chain.u_from_v->beta == btilde / rf("2"));

    // Already-classical shape: t' = -t^2 + r0.
    NormalizeResult nr3 = normalize_riccati(RiccatiODE{rf("-1"), rf("0"), rf("z")});
    CHECK(nr3.r == rf("z"));
    CHECK(nr3.chain.u_from_v->beta.is_zero());

    // Linear case.
    NormalizeResult nr4 = normalize_riccati(RiccatiODE{rf("0"), rf("z"), rf("1")});
    CHECK(nr4.linear_case);
}

TEST_CASE("chain soundness is checked symbolically for produced chains") {
    const RiccatiODE cases[] = {
        {rf("1"), rf("0"), rf("0")},
        {rf("(z^2 + 2)/(2*(z^2 + 1))"), rf("z/(z^2 + 1)"), rf("3/(2*(z^2 + 1))")},
        {rf("-1"), rf("0"), rf("z")},
        {rf("z"), rf("1/z"), rf("z^2 + 1")},
        {rf("1/(z - 1)"), rf("z"), rf("-1/z")},
    };
    for (const auto& rc : cases) {
        NormalizeResult nr = normalize_riccati(rc);
        CHECK(chain_is_sound(rc, nr));
    }
}

TEST_CASE("back_substitute") {
    // Identity chain: w = r1(t) with r1 = t.
    SubstitutionChain chain;
    chain.w_from_t = SubstitutionChain::WFromT{rf("t")};
    CHECK(back_substitute(chain, rf("1/(z + lambda)")) == rf("1/(z + lambda)"));

    // Example 1: t-family z/27 + lambda into r1 gives the quartic family.
    Problem p1 = example(1);
    SubstitutionChain chain1;
    chain1.w_from_t = SubstitutionChain::WFromT{p1.parametrization->first};
    RatFunc family = back_substitute(chain1, rf("z/27 + lambda"));
    RatFunc printed = rf(
        "17/16 - 27*(z/27 + lambda) + (2187/2)*(z/27 + lambda)^2 + 531441*(z/27 + lambda)^4");
    CHECK(family == printed);

    // Full chain replay: u = v + beta, t = -u/A, w = r1.
    SubstitutionChain chain2;
    chain2.u_from_v = SubstitutionChain::UFromV{rf("z")};
    chain2.t_from_u = SubstitutionChain::TFromU{rf("-1")};
    chain2.w_from_t = SubstitutionChain::WFromT{rf("t^2")};
    // v = lambda: u = lambda + z, t = lambda + z, w = (lambda + z)^2.
    CHECK(back_substitute(chain2, rf("lambda")) == rf("(lambda + z)^2"));
}
