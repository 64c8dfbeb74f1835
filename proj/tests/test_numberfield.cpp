#include "common.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("discriminants and degrees")
{
    CHECK(rationals().degree() == 1);
    CHECK(sqrt5().discriminant() == 5);
    CHECK(sqrt2().discriminant() == 8);
    CHECK(sqrt3().discriminant() == 12);
    auto C = cubic7();
    CHECK(C.degree() == 3);
    CHECK(C.discriminant() == 49);
}

TEST_CASE("invalid polynomials")
{
    auto code = [](std::vector<Z> f) {
        try {
            NumberField::create(f);
        } catch (Error const & e) {
            return e.code();
        }
        return ErrorCode::ConfigError;
    };
    CHECK(code({Z(-1), Z(0), Z(1)}) == ErrorCode::Reducible);
    CHECK(code({Z(1), Z(0), Z(1)}) == ErrorCode::NotTotallyReal);
    CHECK(code({Z(1), Z(2), Z(1)}) == ErrorCode::Reducible);
    CHECK_THROWS_AS(NumberField::create({Z(-1), Z(-2), Z(1), Z(1)}), Error);
}

TEST_CASE("embeddings are ascending")
{
    for (auto F : {sqrt5(), sqrt2(), cubic7()})
        for (int t = 0; t + 1 < F.degree(); ++t)
            CHECK(F.embed_ld(F.theta(), t) < F.embed_ld(F.theta(), t + 1));
    auto F = sqrt5();
    CHECK(F.embed_d(F.theta(), 1) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
}

TEST_CASE("arithmetic in Q(sqrt 5)")
{
    auto F = sqrt5();
    auto w = F.theta();
    CHECK(F.mul(w, w) == F.add(w, F.one())); /* w^2 = w + 1 */
    CHECK(F.norm(w) == -1);
    CHECK(F.trace(w) == 1);
    auto x = elt({3, -2});
    CHECK(F.mul(x, F.inv(x)) == F.one());
    CHECK(F.pow(w, -2) == F.inv(F.mul(w, w)));
    CHECK(F.is_integral(x));
    CHECK_FALSE(F.is_integral(F.inv(elt({2, 0}))));
    CHECK_THROWS_AS(F.inv(F.zero()), Error);
}

TEST_CASE("signs and exact embeddings")
{
    auto F = sqrt2();
    auto x = elt({-1, 1}); /* sqrt2 - 1 */
    CHECK(F.sign_vector(x) == std::vector<int>{-1, 1});
    CHECK(F.is_totally_positive(F.mul(x, x)));
    auto I = F.embed(x, 1, 60);
    CHECK(I.contains(I.lo));
    CHECK(I.width() < Q(1) / Q(1000000));
}

TEST_CASE("automorphisms")
{
    for (auto F : {sqrt5(), cubic7()}) {
        REQUIRE(F.is_galois());
        auto x = F.add(F.theta(), F.from_int(2));
        for (int r = 0; r < F.degree(); ++r)
            CHECK(F.embed_ld(F.apply_automorphism(r, x), 0) == doctest::Approx(F.embed_ld(x, r)));
    }
}

TEST_CASE("totally positive units")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    REQUIRE(U.generators.size() == 1);
    CHECK(U.generators[0] == elt({1, 1})); /* w^2 = 1 + w */
    CHECK(U.fundamental[0] == elt({0, 1}));
    auto F3 = sqrt3();
    auto U3 = units_plus(F3);
    CHECK(U3.generators[0] == elt({2, 1}));
    CHECK(F3.norm(U3.fundamental[0]) == 1);
    auto C = cubic7();
    CHECK_THROWS_AS(units_plus(C), Error);
    auto UC = cubic7_units(C);
    CHECK(UC.generators.size() == 2);
    std::vector<FieldElement> bad = {elt({2, 0, 0}), elt({1, 2, 1})};
    CHECK_THROWS_AS(units_plus(C, bad), Error);
}

TEST_CASE("power basis round trip")
{
    auto F = sqrt5();
    auto x = elt({4, 7});
    CHECK(F.from_power_basis(F.to_power_basis(x)) == x);
    CHECK(to_string(F, F.one()).size() > 0);
}
