#include "common.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("decomposition of O in Q(sqrt 5)")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    auto D = decompose(F, unit_ideal(F), U);
    REQUIRE(D.cones.size() == 1);
    CHECK(D.cones[0].gens[0] == F.one());
    CHECK(D.cones[0].gens[1] == U.generators[0]);
    CHECK(D.cones[0].index() == 1);
    CHECK(verify_by_sampling(F, U, D, 1000, 5).ok());
}

TEST_CASE("hull and single decompositions of several ideals")
{
    for (auto F : {sqrt2(), sqrt3(), sqrt5()}) {
        auto U = units_plus(F);
        for (auto const & a : {unit_ideal(F), principal(F, 2), ideal_from_generators(F, {F.from_int(7), elt({3, 1})})}) {
            auto H = decompose(F, a, U, DecompositionMethod::Hull);
            auto S = decompose(F, a, U, DecompositionMethod::Single);
            CHECK(S.cones.size() == 1);
            CHECK(H.cones.size() >= 1);
            for (auto const & s : H.cones)
                CHECK(s.sign == 1);
            CHECK(verify_by_sampling(F, U, H, 400, 11).ok());
            CHECK(verify_by_sampling(F, U, S, 400, 12).ok());
        }
    }
}

TEST_CASE("exactly one of the two boundary rays is included")
{
    auto F = sqrt3();
    auto U = units_plus(F);
    auto D = decompose(F, unit_ideal(F), U, DecompositionMethod::Single);
    auto const & s = D.cones[0];
    bool a = breve_membership(F, unit_ideal(F), s, F.one());
    bool b = breve_membership(F, unit_ideal(F), s, U.generators[0]);
    CHECK(a != b);
}

TEST_CASE("parallelepiped points")
{
    auto F = sqrt5();
    auto O = unit_ideal(F);
    auto s = make_cone(F, O, {elt({3, 1}), elt({1, 1})});
    CHECK(s.index() == 2);
    auto P = parallelepiped_points(F, O, s, false);
    auto B = parallelepiped_points(F, O, s, true);
    CHECK(P.size() == 2);
    CHECK(B.size() == 2);
    for (auto const & p : P)
        for (auto const & x : p.x)
            CHECK((x >= 0 && x < 1));
}

TEST_CASE("cone construction errors")
{
    auto F = sqrt5();
    auto O = unit_ideal(F);
    CHECK_THROWS_AS(make_cone(F, O, {elt({2, 2}), elt({1, 0})}), Error);
    CHECK_THROWS_AS(make_cone(F, O, {elt({1, 0})}), Error);
    CHECK_THROWS_AS(make_cone(F, O, {elt({1, 1}), elt({1, 1})}), Error);
    auto C = cubic7();
    CHECK_THROWS_AS(decompose(C, unit_ideal(C), cubic7_units(C)), Error);
}

TEST_CASE("user cones")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    auto O = unit_ideal(F);
    auto mid = elt({2, 1});
    auto D = user_decomposition(F, O, {{F.one(), mid}, {mid, U.generators[0]}});
    CHECK(D.cones.size() == 2);
    CHECK(verify_by_sampling(F, U, D, 1000, 9).ok());
    /* a cone missing half of the domain is caught */
    auto half = user_decomposition(F, O, {{F.one(), mid}});
    CHECK_FALSE(verify_by_sampling(F, U, half, 1000, 9).ok());
}

TEST_CASE("cones in degree three")
{
    auto C = cubic7();
    auto O = unit_ideal(C);
    auto s = make_cone(C, O, {C.one(), elt({2, 0, 1}), elt({3, 1, 1})});
    auto nP = parallelepiped_points(C, O, s, false).size();
    auto nB = parallelepiped_points(C, O, s, true).size();
    CHECK(Z(static_cast<long>(nP)) == s.index());
    CHECK(nP == nB);
}
