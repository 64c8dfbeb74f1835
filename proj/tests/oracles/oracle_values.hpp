#pragma once

/* Reference values produced by gen_oracles.py (mpmath, 40 digits). */

namespace oracle {

/* zeta_F(2) for F = Q(sqrt d): zeta(2) L(2, chi_d) */
constexpr long double zeta_qsqrt5_2 = 1.16167119561863854975858263633L;
constexpr long double zeta_qsqrt2_2 = 1.43497143373668436931132289544L;
constexpr long double zeta_qsqrt3_2 = 1.56219902583327968451606735358L;

/* L(chi_j, 3) for the Dirichlet characters mod 5 with chi_j(2) = i^j */
constexpr long double dirichlet5_s3[4][2] = {
    {1.19244044793431753111654025622L, 0.0L},
    {0.988191681624057193797469550415L, 0.0891051883457395951638250533927L},
    {0.854824766648543010235690083538L, 0.0L},
    {0.988191681624057193797469550415L, -0.0891051883457395951638250533927L},
};

/* numerators of (t d/dt)^k t/(1-t) over (1-t)^{k+1}, ascending, k = 0..3 */
constexpr long eulerian[4][5] = {
    {0, 1, 0, 0, 0},
    {0, 1, 0, 0, 0},
    {0, 1, 1, 0, 0},
    {0, 1, 4, 1, 0},
};

/* zeta_F(-1), zeta_F(-3), zeta_F(-5) as num/den, for d = 5, 8, 12 */
constexpr long dedekind_neg[3][3][2] = {
    {{1, 30}, {1, 60}, {67, 630}},
    {{1, 12}, {11, 120}, {361, 252}},
    {{1, 6}, {23, 60}, {1681, 126}},
};

/* L(chi_j, 0) = a + b i with (a, b) as num/den pairs; chi_j(2) = i^j */
constexpr long dirichlet5_s0[4][2][2] = {
    {{0, 1}, {0, 1}},
    {{3, 5}, {1, 5}},
    {{0, 1}, {0, 1}},
    {{3, 5}, {-1, 5}},
};

} // namespace oracle
