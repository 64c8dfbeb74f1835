#pragma once

#include "shintani/numeric.hpp"
#include "shintani/values.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shintani {

/* ---- prime ideals and Euler products ---- */

struct PrimeIdeal {
    long p = 0;
    long norm = 0;
    std::optional<FieldElement> generator; /* when known */
};

/* primes of O above p; generators for g <= 2 when `with_generators` */
std::vector<PrimeIdeal> primes_above(NumberField const & F, UnitGroupPlus const & U, long p,
                                     bool with_generators);
std::vector<long> primes_up_to(long n);
FractionalIdeal prime_ideal(NumberField const & F, PrimeIdeal const & P);

struct EulerResult {
    BigComplex value;
    long bound = 0;
    long primes = 0;          /* prime ideals used */
    long double tail = 0;     /* heuristic size of the omitted factors */
    bool tail_corrected = false;
};
/* prod_{N p <= bound} (1 - psi(p) N p^{-s})^{-1}, psi(p) = 0 for p | g */
EulerResult euler_product(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, double s,
                          long bound);

/* ---- Gauss sums ---- */

/* psi_a(alpha) as an exponent of zeta_m (psi.m), or -1 when alpha does
 * not generate a / g a; needs a principal (h = 1) */
long psi_a_exponent(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi,
                    FractionalIdeal const & a, FieldElement const & alpha);
CycValue gauss_sum(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi,
                   TorsionPoint const & xi);
/* i^{-u} g(psi, xi_can) / sqrt(N g) */
BigComplex root_number(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi);

/* ---- Lerch values over the torsor ---- */

/* eta^b for the class representatives b = G.repr_ideals[e] */
std::vector<TorsionPoint> torsor_orbit(NumberField const & F, RayClassGroup const & G, TorsionPoint const & eta);

/* L(psi, -k) = g(psi, eta)/N g * sum_b psi(b)^{-1} L(eta^b, -k) */
CycValue hecke_exact(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi,
                     TorsionPoint const & eta, long k);

/* numeric Lerch values L(eta^b, s), one per class; cached per s */
struct TorsorLerch {
    TorsionPoint eta;
    double s = 0;
    std::vector<std::complex<long double>> values; /* per group index */
};
TorsorLerch torsor_lerch_numeric(NumberField const & F, RayClassGroup const & G, TorsionPoint const & eta, double s,
                                 double tol = 1e-11);
std::complex<long double> hecke_numeric(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi,
                                        TorsorLerch const & T);

/* ---- functional equation ---- */

struct Report {
    std::string name;
    BigComplex lhs, rhs;
    long double abs_err = 0, rel_err = 0;
    bool exact = false;
    bool ok = false;
    std::string lhs_source, rhs_source;
    std::map<std::string, std::string> info;
};

/* Lambda(psi, s) from L(psi, s); NotCritical at a Gamma pole */
BigComplex completed_L(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, long s,
                       BigComplex const & L);
Report functional_equation_check(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, long k,
                                 long prime_bound, long double tol = 1e-6L);
/* constant C with L(psi, k) = C g(conj psi, xi_can)^{-1} L*(conj psi, 1 - k) */
BigComplex corollary_constant(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, long k);
/* L*(psi, 1 - k), k > 1, from the Euler product of conj psi */
BigComplex l_star(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, long k,
                  long prime_bound);

/* ---- imprimitive characters ---- */

struct ImprimitiveReport {
    bool exact = false;
    CycValue lhs_exact, rhs_exact;
    std::complex<long double> lhs, rhs;
    long double abs_err = 0;
    bool ok = false;
};
/* s = -k (exact) when k >= 0, otherwise numeric at s_real */
ImprimitiveReport imprimitive_check(NumberField const & F, RayClassGroup const & G0, RayClassGroup const & G1,
                                    FractionalIdeal const & p, HeckeCharacter const & psi0, TorsionPoint const & xi1,
                                    long k, double s_real = 0, double tol = 1e-6);

/* ---- vectors of Lerch values ---- */

/* Re L or i Im L according to the parity of (n - 1) g */
std::complex<long double> l_infinity(std::complex<long double> L, int g, long n);
struct LerEntry {
    TorsionPoint eta;
    std::complex<long double> lerch;  /* L(eta, n) */
    std::complex<long double> scaled; /* d^{1/2} L^infty / (2 pi i)^{(n-1) g} */
    long double error = 0;
};
std::vector<LerEntry> ler_vector(NumberField const & F, TorsorTable const & T, long n, double tol = 1e-11);

struct ArtinReport {
    std::complex<long double> lhs;
    BigComplex lstar;
    std::complex<long double> ratio;
    std::optional<Recognition> recognized;
    long m = 1;
};
/* sum_gamma chi(gamma) L(gamma(eta0), k) / (d^{1/2} (2 pi i)^{(k-1) g} L*(chi^{-1}, 1 - k)) */
ArtinReport artin_ratio_check(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & chi,
                              TorsionPoint const & eta0, long k, long prime_bound);

} // namespace shintani
