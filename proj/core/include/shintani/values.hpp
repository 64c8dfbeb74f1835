#pragma once

#include "shintani/cones.hpp"
#include "shintani/torsion.hpp"

#include <map>
#include <vector>

namespace shintani {

/* polynomial in n variables with rational coefficients */
struct MPoly {
    int nvars = 0;
    std::map<std::vector<int>, Q> terms;

    Q operator()(std::vector<Q> const & x) const;
    MPoly operator*(MPoly const & o) const;
    int degree() const;
};
MPoly mpoly_pow(MPoly const & p, long k);

/* N(sum X_i alpha_i) = det(sum X_i M_{alpha_i}) */
MPoly norm_form(NumberField const & F, std::vector<FieldElement> const & gens);

/* Bernoulli numbers (B_1 = -1/2) and polynomials */
Q bernoulli(long n);
Q bernoulli_poly(long n, Q const & x);

/* Laurent coefficients of e^{x w} / (1 - z e^w), entries for w^{-1} .. w^N */
std::vector<CycValue> lerch_factor(CycValue const & z, Q const & x, int N);

enum class ZetaMethod { Auto, NormForm, Vertex };

/* contribution of one cone to L(xi Delta, -k) restricted to the point xi */
CycValue cone_zeta_value(NumberField const & F, FractionalIdeal const & a, Cone const & s, TorsionPoint const & xi,
                         long k, ZetaMethod method = ZetaMethod::Auto);
/* L(xi Delta, -k): sum over the Delta-orbit and the cones */
CycValue lerch_nonpositive(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi, long k,
                           ShintaniDecomposition const & D, ZetaMethod method = ZetaMethod::Auto);
CycValue lerch_nonpositive(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi, long k);

/* generating function sgn * sum_{breve P} t^beta / prod (1 - t^alpha_i) at a
 * rational torus point (coordinates w.r.t. the HNF basis of a) */
Q cone_function_value(NumberField const & F, FractionalIdeal const & a, std::vector<FieldElement> const & gens,
                      std::vector<Q> const & t);
/* G_{a1 a2} - G_{a0 a2} + G_{a0 a1} = 0 at every test point (g = 2) */
bool cocycle_check(NumberField const & F, FractionalIdeal const & a, std::vector<FieldElement> const & triple,
                   std::vector<std::vector<Q>> const & points);

/* sum of N(y a^{-1})^{-s} over the fundamental domain, split by y mod g a,
 * truncated at N(y a^{-1}) <= X plus the equidistributed tail */
struct PartialSums {
    FractionalIdeal ideal;
    FractionalIdeal modulus;
    ZMatrix H;                     /* HNF of g a in a-coordinates */
    std::vector<long double> sums; /* per residue (lexicographic, last coordinate fastest) */
    long double X = 0;
    long double tail = 0; /* added to every residue */
    long points = 0;
};
PartialSums lerch_partial_sums(NumberField const & F, UnitGroupPlus const & U, ShintaniDecomposition const & D,
                               FractionalIdeal const & g, double s, long double X);
/* residue index of y in a / g a */
long residue_of(PartialSums const & P, FractionalIdeal const & a, FieldElement const & y);
/* L(xi Delta, s), s > 1 */
std::complex<long double> lerch_numeric(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi,
                                        PartialSums const & P);
std::complex<long double> lerch_numeric(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi,
                                        double s, double tol = 1e-9);
/* truncation point giving about `tol` for exponent s */
long double truncation_for(double s, double tol);
/* |det(log eps_j^{tau_i})| over the first g-1 embeddings */
long double regulator(NumberField const & F, UnitGroupPlus const & U);

} // namespace shintani
