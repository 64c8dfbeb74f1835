#include "common.hpp"
#include "oracles/oracle_values.hpp"

#include <doctest.h>

#include <cmath>

using namespace testing;

TEST_CASE("prime ideals of Q(sqrt 5)")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    auto p2 = primes_above(F, U, 2, true);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].norm == 4);
    auto p5 = primes_above(F, U, 5, true);
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].norm == 5);
    auto p11 = primes_above(F, U, 11, true);
    REQUIRE(p11.size() == 2);
    for (auto const & P : p11) {
        REQUIRE(P.generator);
        CHECK(abs(F.norm(*P.generator)) == 11);
        CHECK(prime_ideal(F, P).norm == 11);
    }
    CHECK(prime_ideal(F, p11[0]) != prime_ideal(F, p11[1]));
    CHECK(primes_up_to(30).size() == 10);
}

TEST_CASE("Euler product for zeta(2)")
{
    auto F = rationals();
    auto U = units_plus(F);
    auto G = ray_class_group(F, U, unit_ideal(F));
    auto E = euler_product(F, G, characters(G, F)[0], 2.0, 1000000);
    double pi = std::acos(-1.0);
    CHECK(std::fabs(to_double(E.value.re) - pi * pi / 6) < 1e-9);
    CHECK(E.tail_corrected);
}

/* characters mod 5 indexed by chi(2) = i^j */
static int index_of(RayClassGroup const & G, NumberField const & F, HeckeCharacter const & psi)
{
    auto z = character_value(G, psi, class_of_element(G, F, F.from_int(2))).to_complex();
    for (int j = 0; j < 4; ++j) {
        std::complex<long double> w = std::pow(std::complex<long double>(0, 1), j);
        if (std::abs(z - w) < 1e-12L)
            return j;
    }
    return -1;
}

TEST_CASE("Dirichlet L-functions mod 5")
{
    auto F = rationals();
    auto U = units_plus(F);
    auto G = ray_class_group(F, U, principal(F, 5));
    auto TL = torsor_lerch_numeric(F, G, xi_can(F, G.modulus), 3.0);
    for (auto const & psi : characters(G, F)) {
        int j = index_of(G, F, psi);
        REQUIRE(j >= 0);
        std::complex<long double> want(oracle::dirichlet5_s3[j][0], oracle::dirichlet5_s3[j][1]);
        auto E = euler_product(F, G, psi, 3.0, 200000);
        std::complex<long double> e(to_double(E.value.re), to_double(E.value.im));
        CHECK(std::abs(e - want) < 1e-9L);
        if (is_primitive(psi, G)) {
            CHECK(std::abs(hecke_numeric(F, G, psi, TL) - want) < 1e-9L);
            auto v = hecke_exact(F, G, psi, xi_can(F, G.modulus), 0);
            CycValue w = CycValue::rational(Q(oracle::dirichlet5_s0[j][0][0]) / Q(oracle::dirichlet5_s0[j][0][1]), 4) +
                         CycValue::root_of_unity(4, 1) *
                             (Q(oracle::dirichlet5_s0[j][1][0]) / Q(oracle::dirichlet5_s0[j][1][1]));
            CHECK(v == w);
        } else {
            CHECK_THROWS_AS(hecke_exact(F, G, psi, xi_can(F, G.modulus), 0), Error);
        }
    }
}

TEST_CASE("Gauss sums and root numbers")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    for (long n : {3L, 4L, 7L}) {
        auto G = ray_class_group(F, U, principal(F, n));
        for (auto const & psi : characters(G, F)) {
            if (!is_primitive(psi, G))
                continue;
            auto g = gauss_sum(F, G, psi, xi_can(F, G.modulus)).to_complex();
            CHECK(std::norm(g) == doctest::Approx(static_cast<double>(n * n)));
            auto W = root_number(F, G, psi);
            CHECK(to_double(W.abs()) == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("completed L-function poles")
{
    auto F = rationals();
    auto U = units_plus(F);
    auto G = ray_class_group(F, U, unit_ideal(F));
    auto psi = characters(G, F)[0];
    CHECK_THROWS_AS(completed_L(F, G, psi, -2, BigComplex(Real(0))), Error);
    CHECK_NOTHROW(completed_L(F, G, psi, 2, BigComplex(Real(1))));
}

TEST_CASE("functional equation at an even critical point")
{
    auto F = sqrt2();
    auto U = units_plus(F);
    auto G = ray_class_group(F, U, unit_ideal(F));
    auto r = functional_equation_check(F, G, characters(G, F)[0], 2, 300000);
    CHECK(r.ok);
    CHECK(r.rel_err < 1e-8L);
}

TEST_CASE("L* and the Artin ratio over Q")
{
    auto F = rationals();
    auto U = units_plus(F);
    auto G1 = ray_class_group(F, U, unit_ideal(F));
    auto ls = l_star(F, G1, characters(G1, F)[0], 2, 200000);
    CHECK(to_double(ls.re) == doctest::Approx(-1.0 / 12).epsilon(1e-8));
    auto G = ray_class_group(F, U, principal(F, 5));
    auto T = classes_T0(F, G);
    for (auto const & chi : characters(G, F)) {
        if (!is_primitive(chi, G) || chi.u != 0)
            continue;
        auto r = artin_ratio_check(F, G, chi, T.points[0], 3, 200000);
        CHECK(r.recognized.has_value());
    }
}

TEST_CASE("parity rule")
{
    std::complex<long double> z(2, 3);
    CHECK(l_infinity(z, 2, 2) == std::complex<long double>(2, 0));
    CHECK(l_infinity(z, 1, 2) == std::complex<long double>(0, 3));
    CHECK(l_infinity(z, 1, 3) == std::complex<long double>(2, 0));
}
