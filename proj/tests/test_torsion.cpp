#include "common.hpp"

#include <doctest.h>

#include <numeric>

using namespace testing;

TEST_CASE("points of a / g a")
{
    auto F = sqrt5();
    auto O = unit_ideal(F);
    auto pts = points_of(F, O, principal(F, 3));
    CHECK(pts.size() == 9);
    CHECK(pts[0].is_trivial());
    auto a = principal_ideal(F, elt({-1, 2}));
    CHECK(points_of(F, a, principal(F, 2)).size() == 4);
}

TEST_CASE("make_point validation")
{
    auto F = sqrt5();
    auto O = unit_ideal(F);
    auto g = principal(F, 3);
    CHECK_THROWS_AS(make_point(F, O, g, {Q(1) / Q(2), Q(0)}), Error);
    CHECK_THROWS_AS(make_point(F, O, g, {Q(1) / Q(3)}), Error);
    auto xi = make_point(F, O, g, {Q(4) / Q(3), Q(-1) / Q(3)});
    CHECK(xi.r[0] == Q(1) / Q(3));
    CHECK(xi.r[1] == Q(2) / Q(3));
    CHECK(xi.order() == 3);
}

TEST_CASE("values and the unit action")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    auto O = unit_ideal(F);
    auto xi = make_point(F, O, principal(F, 4), {Q(1) / Q(4), Q(1) / Q(2)});
    auto eps = U.generators[0];
    auto eta = act_unit(F, xi, eps);
    for (auto const & x : {elt({1, 0}), elt({0, 1}), elt({3, -2})})
        CHECK(point_exponent(eta, x) == point_exponent(xi, F.mul(eps, x)));
    CHECK(point_value(xi, elt({1, 0})) == CycValue::root_of_unity(4, 1));
}

TEST_CASE("canonical points are primitive of conductor g")
{
    auto F = sqrt5();
    for (long n : {2L, 3L, 4L, 5L}) {
        auto g = principal(F, n);
        auto xi = xi_can(F, g);
        CHECK(is_primitive(F, xi));
        CHECK(conductor(F, xi) == g);
    }
    auto Qf = rationals();
    auto xi = xi_can(Qf, principal(Qf, 7));
    CHECK(xi.r[0] == Q(6) / Q(7)); /* exp(-2 pi i x / 7) on (1/7) Z */
}

TEST_CASE("ideal action")
{
    auto F = sqrt5();
    auto O = unit_ideal(F);
    auto xi = make_point(F, O, principal(F, 3), {Q(1) / Q(3), Q(0)});
    auto b = principal(F, 2);
    auto eta = act_ideal(F, xi, b);
    CHECK(eta.ideal == b);
    for (auto const & x : {elt({2, 0}), elt({0, 2}), elt({4, 6})})
        CHECK(point_exponent(eta, x) == point_exponent(xi, x));
    CHECK_THROWS_AS(act_ideal(F, xi, invert(F, b)), Error);
}

TEST_CASE("torsor of primitive points")
{
    for (auto F : {rationals(), sqrt5(), sqrt3()}) {
        auto U = units_plus(F);
        for (long n : {3L, 4L, 5L}) {
            auto G = ray_class_group(F, U, principal(F, n));
            auto T = classes_T0(F, G);
            CHECK(static_cast<long>(T.points.size()) == G.size());
            CHECK(is_torsor(T));
            for (long p = 0; p < static_cast<long>(T.points.size()); ++p) {
                CHECK(locate(F, T, T.points[p]) == p);
                CHECK(involution_check(F, G, T, p));
            }
        }
    }
}

TEST_CASE("Delta orbits")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    auto xi = make_point(F, unit_ideal(F), principal(F, 3), {Q(1) / Q(3), Q(0)});
    auto O = delta_orbit(F, U, xi);
    CHECK(O.points[0] == xi);
    /* the orbit length divides |(O/3)^x| = 8 */
    CHECK(8 % O.points.size() == 0);
    auto c = canonical_point(F, U, xi);
    for (auto const & p : O.points)
        CHECK(canonical_point(F, U, p) == c);
}
