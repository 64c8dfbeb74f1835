#include "common.hpp"

#include <doctest.h>

#include <map>

using namespace testing;

/* number of integral ideals of norm <= X in Q(sqrt d): sum_{n <= X} sum_{e | n} chi_d(e) */
static long ideal_count(long d, long X)
{
    auto chi = [d](long e) -> long {
        /* Kronecker symbol (d / e) for d = 5 */
        long r = e % d;
        if (r == 0)
            return 0;
        return (r == 1 || r == 4) ? 1 : -1;
    };
    long c = 0;
    for (long n = 1; n <= X; ++n)
        for (long e = 1; e <= n; ++e)
            if (n % e == 0)
                c += chi(e);
    return c;
}

TEST_CASE("norms of small ideals in Q(sqrt 5)")
{
    auto F = sqrt5();
    CHECK(unit_ideal(F).norm == 1);
    CHECK(principal(F, 2).norm == 4); /* 2 is inert */
    CHECK(principal_ideal(F, elt({-1, 2})).norm == 5);
    auto p11 = ideal_from_generators(F, {F.from_int(11), elt({-4, 1})});
    CHECK(p11.norm == 11);
    CHECK(different_ideal(F).norm == 5);
    CHECK(different_ideal(sqrt2()).norm == 8);
}

TEST_CASE("multiplication, inversion and containment")
{
    auto F = sqrt5();
    auto a = ideal_from_generators(F, {F.from_int(11), elt({-4, 1})});
    auto b = principal(F, 3);
    auto ab = multiply(F, a, b);
    CHECK(ab.norm == a.norm * b.norm);
    CHECK(multiply(F, a, invert(F, a)) == unit_ideal(F));
    CHECK(contains(a, ab));
    CHECK_FALSE(contains(ab, a));
    CHECK(contains(a, elt({-4, 1})));
    CHECK(coprime(F, a, b));
    CHECK(ideal_pow(F, a, 2) == multiply(F, a, a));
    CHECK(ideal_sum(F, a, b) == unit_ideal(F));
    CHECK(ideal_min_integer(F, a) == 11);
}

TEST_CASE("divisors and residues")
{
    auto Qf = rationals();
    CHECK(divisors(Qf, principal(Qf, 12)).size() == 6);
    auto F = sqrt5();
    auto g = principal(F, 6);
    /* (6) = (2)(3), both inert */
    CHECK(divisors(F, g).size() == 4);
    CHECK(residues(F, unit_ideal(F), g).size() == 36);
    auto a = principal_ideal(F, elt({-1, 2}));
    CHECK(residues(F, a, principal(F, 2)).size() == 4);
}

TEST_CASE("ideal counts match the Dirichlet series")
{
    auto F = sqrt5();
    for (long X : {10L, 30L, 60L})
        CHECK(static_cast<long>(ideals_up_to_norm(F, X).size()) == ideal_count(5, X));
}

TEST_CASE("coordinates")
{
    auto F = sqrt5();
    auto a = principal(F, 2);
    auto x = elt({4, 6});
    auto c = ideal_coords_integral(a, x);
    REQUIRE(c);
    FieldElement y = F.zero();
    auto B = ideal_basis(a);
    for (int j = 0; j < 2; ++j)
        y = F.add(y, F.scale(B[j], Q((*c)[j])));
    CHECK(y == x);
    CHECK_FALSE(ideal_coords_integral(a, elt({1, 0})));
    CHECK(is_primitive(F, elt({2, 2}), a));
    CHECK_FALSE(is_primitive(F, elt({4, 4}), a));
}

TEST_CASE("canonical form")
{
    auto F = sqrt5();
    auto a = ideal_from_generators(F, {elt({-1, 2}), F.from_int(5)});
    auto b = principal_ideal(F, elt({1, -2}));
    CHECK(a == b);
    CHECK(scale(F, a, F.from_int(2)) == multiply(F, a, principal(F, 2)));
}
