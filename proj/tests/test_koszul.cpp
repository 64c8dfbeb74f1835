#include "common.hpp"

#include <doctest.h>

#include <random>

using namespace testing;

static DeltaModule diagonal(NumberField const & K, std::vector<std::vector<FieldElement>> const & diag)
{
    DeltaModule M{K, static_cast<long>(diag[0].size()), {}};
    for (auto const & d : diag) {
        SparseMatrix A(M.dim, M.dim);
        for (long i = 0; i < M.dim; ++i)
            A.set(K, i, i, d[i]);
        M.action.push_back(A);
    }
    return M;
}

TEST_CASE("trivial action")
{
    auto K = cubic7();
    for (long d : {1L, 3L}) {
        auto M = diagonal(K, std::vector<std::vector<FieldElement>>(2, std::vector<FieldElement>(d, K.one())));
        CHECK(check_module(M));
        CHECK(koszul_cohomology_dims(M) == std::vector<long>{d, 2 * d, d});
    }
}

TEST_CASE("an eigenvalue different from one kills everything")
{
    auto K = sqrt5();
    auto M = diagonal(K, {{elt({1, 1})}});
    CHECK(koszul_cohomology_dims(M) == std::vector<long>{0, 0});
}

TEST_CASE("random diagonal modules")
{
    auto K = sqrt2();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        long dim = 1 + static_cast<long>(rng() % 5), fixed = 0;
        std::vector<FieldElement> d;
        for (long i = 0; i < dim; ++i) {
            if (rng() % 2) {
                d.push_back(K.one());
                ++fixed;
            } else {
                d.push_back(elt({static_cast<long>(rng() % 5) + 2, static_cast<long>(rng() % 3)}));
            }
        }
        auto M = diagonal(K, {d});
        auto C = koszul_complex(M);
        CHECK(check_dd_zero(M, C));
        CHECK(koszul_cohomology_dims(M) == std::vector<long>{fixed, fixed});
    }
}

TEST_CASE("d d = 0 and Euler characteristic in rank two")
{
    auto K = cubic7();
    auto M = diagonal(K, {{K.one(), elt({0, 1, 0}), K.one()}, {elt({2, 0, 1}), K.one(), K.one()}});
    auto C = koszul_complex(M);
    CHECK(C.r == 2);
    CHECK(C.dims == std::vector<long>{3, 6, 3});
    CHECK(check_dd_zero(M, C));
    auto h = koszul_cohomology_dims(M);
    CHECK(h[0] - h[1] + h[2] == 0);
    CHECK(h == std::vector<long>{1, 2, 1});
}

TEST_CASE("symmetric powers")
{
    auto F = sqrt5();
    auto U = units_plus(F);
    CHECK(sym_tate_dims(F, U, 2).computed == std::vector<long>{1, 1});
    CHECK(sym_tate_dims(F, U, 1).computed == std::vector<long>{0, 0});
    auto C = cubic7();
    auto UC = cubic7_units(C);
    CHECK(sym_tate_dims(C, UC, 3).computed == std::vector<long>{1, 2, 1});
    CHECK(sym_module(C, UC, 4).dim == 15);
    CHECK(binomial_long(6, 2) == 15);
}

TEST_CASE("non-Galois cubic needs the closure")
{
    /* x^3 - 4x + 1, discriminant 229 */
    auto F = NumberField::create({Z(1), Z(-4), Z(0), Z(1)}, QMatrix::identity(3));
    CHECK_FALSE(F.is_galois());
    UnitGroupPlus U;
    U.generators = {F.one(), F.one()};
    CHECK_THROWS_AS(sym_module(F, U, 3), Error);
}

TEST_CASE("log cohomology tables")
{
    auto T = log_cohomology_table(2, 2, 1);
    REQUIRE(T.rows.size() == 4);
    CHECK(T.rows[3].dim == 3);
    CHECK(T.top_minus_g == 1);
    CHECK(T.top_tower == 2);
    CHECK(T.deligne_dim == 1);
    CHECK(log_cohomology_table(2, 0, 1).deligne_dim == 0);
    CHECK(log_cohomology_table(3, 6, 2).deligne_dim == 2);
    CHECK_THROWS_AS(log_cohomology_table(3, 4, 1), Error);
    auto P = log_cohomology_table(2, 2, 1, true);
    CHECK(P.plectic);
    CHECK(P.plectic_ext_g == 1);
    CHECK(to_json_string(T).find("\"deligne\":1") != std::string::npos);
}
