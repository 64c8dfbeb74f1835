#pragma once

#include "shintani/arithmetic.hpp"

#include <string>
#include <vector>

namespace shintani {

/* Character xi of a / g a, xi(alpha) = exp(2 pi i <r, coords(alpha)>)
 * with coords taken in the HNF basis of a; entries of r lie in [0,1). */
struct TorsionPoint {
    FractionalIdeal ideal;
    FractionalIdeal modulus;
    std::vector<Q> r;

    long order() const; /* common denominator of r */
    bool is_trivial() const;
    bool operator==(TorsionPoint const & o) const
    {
        return ideal == o.ideal && modulus == o.modulus && r == o.r;
    }
};

/* checks that r kills g a, reduces r mod 1 */
TorsionPoint make_point(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & g,
                        std::vector<Q> r);
/* <r, coords(alpha)> mod 1 */
Q point_exponent(TorsionPoint const & xi, FieldElement const & alpha);
CycValue point_value(TorsionPoint const & xi, FieldElement const & alpha, long m = 0);

/* all points of T^a[g], in lexicographic order of r */
std::vector<TorsionPoint> points_of(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & g);

TorsionPoint xi_can(NumberField const & F, FractionalIdeal const & g);
TorsionPoint act_unit(NumberField const & F, TorsionPoint const & xi, FieldElement const & eps);
/* restriction to b a, b integral */
TorsionPoint act_ideal(NumberField const & F, TorsionPoint const & xi, FractionalIdeal const & b);
/* xi o (x .) on x^{-1} a */
TorsionPoint transport(NumberField const & F, TorsionPoint const & xi, FieldElement const & x);
TorsionPoint inverse_point(TorsionPoint const & xi);

FractionalIdeal conductor(NumberField const & F, TorsionPoint const & xi);
bool is_primitive(NumberField const & F, TorsionPoint const & xi);

struct DeltaOrbit {
    std::vector<TorsionPoint> points;             /* points[0] is the input */
    std::vector<std::vector<long>> exponents;     /* unit exponents reaching each point */
    std::vector<std::vector<long>> isotropy;      /* basis of the stabiliser in Z^{rank Delta} */
};
DeltaOrbit delta_orbit(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi);
/* lexicographically least r over the Delta-orbit */
TorsionPoint canonical_point(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi);

/* totally positive generator of a principal fractional ideal, if any */
std::optional<FieldElement> totally_positive_generator(NumberField const & F, UnitGroupPlus const & U,
                                                       FractionalIdeal const & a);

/* T_0[g] = primitive points modulo F_+^x, one ideal per narrow class, with
 * the Cl+(g) action eta -> eta^b. */
struct TorsorTable {
    FractionalIdeal modulus;
    RayClassGroup narrow; /* Cl+(1), supplies the ideal representatives */
    std::vector<TorsionPoint> points;
    std::vector<std::vector<long>> action; /* action[class index][point] */
};
TorsorTable classes_T0(NumberField const & F, RayClassGroup const & G, long max_size = 200000);
/* representative of the F_+^x-class of any point, index into T.points */
long locate(NumberField const & F, TorsorTable const & T, TorsionPoint const & xi);
/* eta^b for an integral ideal b coprime to g, as an index */
long torsor_act(NumberField const & F, TorsorTable const & T, long point, FractionalIdeal const & b);
bool is_torsor(TorsorTable const & T);
/* c'_abs sends eta to eta^{-1} */
bool involution_check(NumberField const & F, RayClassGroup const & G, TorsorTable const & T, long point);

std::string to_string(TorsionPoint const & xi);

} // namespace shintani
