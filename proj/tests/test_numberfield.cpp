#include <doctest.h>

#include "ratsode/numberfield.hpp"
#include "test_util.hpp"

using namespace ratsode;
using testutil::Rng;

TEST_CASE("number field arithmetic in Q[a]/(a^2+2)") {
    NumberField K(UPoly{Rational(2), Rational(0), Rational(1)});  // a^2 + 2
    auto a = K.generator();
    CHECK(K.equal(K.mul(a, a), K.from_rational(Rational(-2))));

    // Associativity and inverses on pseudo-random elements.
    Rng rng(42);
    for (int i = 0; i < 20; ++i) {
        auto rand_elem = [&] {
            UPoly e{Rational(rng.range(-5, 5)), Rational(rng.range(-5, 5))};
            up::trim(e);
            return e;
        };
        NumberField::Elem x = rand_elem(), y = rand_elem(), z = rand_elem();
        CHECK(K.equal(K.mul(K.mul(x, y), z), K.mul(x, K.mul(y, z))));
        if (!K.is_zero(x)) {
            CHECK(K.equal(K.mul(x, K.inv(x)), K.from_rational(Rational(1))));
        }
    }
}

TEST_CASE("number field rejects reducible modulus") {
    CHECK_THROWS(NumberField(UPoly{Rational(-1), Rational(0), Rational(1)}));  // a^2 - 1
}

TEST_CASE("trivial field is plain Q") {
    NumberField Q = NumberField::rationals();
    CHECK(Q.is_trivial());
    auto x = Q.from_rational(Rational(3, 4));
    CHECK(Q.to_rational(Q.mul(x, x)) == Rational(9, 16));
    CHECK(Q.to_rational(Q.inv(x)) == Rational(4, 3));
}

TEST_CASE("KPoly gcd over an extension") {
    NumberField K(UPoly{Rational(-2), Rational(0), Rational(1)});  // a^2 - 2
    auto a = K.generator();
    // (y - a)(y + a) = y^2 - 2 and (y - a)(y - 1)
    KPoly ym_a = {K.neg(a), K.from_rational(Rational(1))};
    KPoly yp_a = {a, K.from_rational(Rational(1))};
    KPoly ym_1 = {K.from_rational(Rational(-1)), K.from_rational(Rational(1))};
    KPoly f = kp::mul(K, ym_a, yp_a);
    KPoly g = kp::mul(K, ym_a, ym_1);
    KPoly h = kp::gcd(K, f, g);
    REQUIRE(kp::degree(h) == 1);
    CHECK(K.equal(h[0], K.neg(a)));
}

TEST_CASE("Trager factorization over Q[a]/(a^2-2)") {
    NumberField K(UPoly{Rational(-2), Rational(0), Rational(1)});
    // y^2 - 2 splits over K as (y - a)(y + a).
    KPoly f = kp::from_qpoly(K, UPoly{Rational(-2), Rational(0), Rational(1)});
    auto factors = factor_squarefree_over(K, f);
    REQUIRE(factors.size() == 2);
    KPoly prod = kp::constant(K, K.from_rational(Rational(1)));
    for (auto& fac : factors) {
        CHECK(kp::degree(fac) == 1);
        prod = kp::mul(K, prod, fac);
    }
    CHECK(kp::degree(prod) == 2);
    // y^2 - 3 stays irreducible over K.
    KPoly g = kp::from_qpoly(K, UPoly{Rational(-3), Rational(0), Rational(1)});
    auto factors2 = factor_squarefree_over(K, g);
    CHECK(factors2.size() == 1);
}

TEST_CASE("extension by a root flattens to a simple extension") {
    NumberField K(UPoly{Rational(-2), Rational(0), Rational(1)});  // Q(sqrt 2)
    // tau(t) = t^2 - 3 over K: extension Q(sqrt2, sqrt3), degree 4 over Q.
    KPoly tau = kp::from_qpoly(K, UPoly{Rational(-3), Rational(0), Rational(1)});
    Extension ext = extend_by_root(K, tau);
    CHECK(ext.L.degree() == 4);
    // alpha^2 = 2 and theta^2 = 3 in L.
    CHECK(ext.L.equal(ext.L.mul(ext.alpha, ext.alpha), ext.L.from_rational(Rational(2))));
    CHECK(ext.L.equal(ext.L.mul(ext.theta, ext.theta), ext.L.from_rational(Rational(3))));
}

TEST_CASE("extension by a rational root stays rational") {
    NumberField Q = NumberField::rationals();
    KPoly tau = kp::from_qpoly(Q, UPoly{Rational(-5), Rational(1)});  // t - 5
    Extension ext = extend_by_root(Q, tau);
    CHECK(ext.L.is_trivial());
    CHECK(ext.L.to_rational(ext.theta) == Rational(5));
}
