#include "common.hpp"

#include <doctest.h>

#include <numeric>

using namespace testing;

static long phi(long n)
{
    long r = 0;
    for (long a = 1; a <= n; ++a)
        r += std::gcd(a, n) == 1;
    return r;
}

TEST_CASE("narrow class numbers")
{
    for (auto F : {sqrt5(), sqrt2()}) {
        auto U = units_plus(F);
        CHECK(ray_class_group(F, U, unit_ideal(F)).size() == 1);
        CHECK(class_number_is_one(F, U));
    }
    auto F = sqrt3();
    auto U = units_plus(F);
    CHECK(class_number_is_one(F, U));
    CHECK(ray_class_group(F, U, unit_ideal(F)).size() == 2);
}

TEST_CASE("ray class groups over Q are (Z/m)^x")
{
    auto F = rationals();
    auto U = units_plus(F);
    for (long m = 1; m <= 30; ++m) {
        auto G = ray_class_group(F, U, principal(F, m));
        CHECK(G.size() == phi(m));
    }
}

TEST_CASE("class maps")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    auto G = ray_class_group(F, U, principal(F, 3));
    /* (O/3)^x has order 8, signs 4, units: -1 and w generate a subgroup of order 16 */
    CHECK(G.size() == 2);
    auto one = class_of_element(G, F, F.one());
    CHECK(one == G.group.elements()[0]);
    CHECK(class_of_element(G, F, U.generators[0]) == one);
    CHECK_THROWS_AS(class_of_element(G, F, F.from_int(3)), Error);
    for (long e = 0; e < G.size(); ++e)
        CHECK(class_of_ideal(G, F, G.repr_ideals[e]) == G.group.elements()[e]);
}

TEST_CASE("characters: orthogonality and conductors")
{
    auto F = rationals();
    auto U = units_plus(F);
    auto G = ray_class_group(F, U, principal(F, 12));
    auto chars = characters(G, F);
    CHECK(static_cast<long>(chars.size()) == G.size());
    auto elems = G.group.elements();
    for (std::size_t e = 1; e < elems.size(); ++e) {
        CycValue s = CycValue::rational(Q(0));
        for (auto const & psi : chars)
            s += character_value(G, psi, elems[e]);
        CHECK(s.is_zero());
    }
    long prim = 0;
    for (auto const & psi : chars)
        prim += is_primitive(psi, G);
    CHECK(prim == 1); /* the product of the characters mod 3 and mod 4 */
    auto G5 = ray_class_group(F, U, principal(F, 5));
    long p5 = 0;
    for (auto const & psi : characters(G5, F)) {
        p5 += is_primitive(psi, G5);
        if (psi.is_trivial())
            CHECK(psi.conductor == unit_ideal(F));
        else
            CHECK(psi.conductor == principal(F, 5));
    }
    CHECK(p5 == 3);
}

TEST_CASE("signature and parity")
{
    auto F = rationals();
    auto U = units_plus(F);
    auto G = ray_class_group(F, U, principal(F, 5));
    for (auto const & psi : characters(G, F)) {
        auto v = psi_O_minus_one(G, psi);
        CHECK(v.is_rational());
        CHECK(v.rational_value() == (psi.u == 0 ? 1 : -1));
        CHECK(conjugate(G, conjugate(G, psi)).exps == psi.exps);
    }
}

TEST_CASE("projection and pullback")
{
    auto F = rationals();
    auto U = units_plus(F);
    auto G0 = ray_class_group(F, U, principal(F, 3));
    auto G1 = ray_class_group(F, U, principal(F, 15));
    for (auto const & psi0 : characters(G0, F)) {
        auto psi = pullback(G1, G0, F, psi0);
        CHECK(psi.conductor == psi0.conductor);
        auto back = primitive_of(G1, G0, F, psi);
        CHECK(back.exps == psi0.exps);
    }
}

TEST_CASE("principal generators")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    auto a = ideal_from_generators(F, {F.from_int(11), elt({-4, 1})});
    auto g = principal_generator(F, U, a);
    REQUIRE(g);
    CHECK(abs(F.norm(*g)) == 11);
    CHECK(principal_ideal(F, *g) == a);
}

TEST_CASE("ray class groups are limited to g <= 2")
{
    auto C = cubic7();
    auto U = cubic7_units(C);
    CHECK_THROWS_AS(ray_class_group(C, U, unit_ideal(C)), Error);
}
