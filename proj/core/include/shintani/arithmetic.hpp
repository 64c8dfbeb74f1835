#pragma once

#include "shintani/abelian_group.hpp"
#include "shintani/cyclotomic.hpp"
#include "shintani/ideals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shintani {

/* Totally positive units Delta, plus a basis of O^x / {+-1} when known. */
struct UnitGroupPlus {
    std::vector<FieldElement> generators;  /* basis of Delta */
    std::vector<FieldElement> fundamental; /* basis of O^x mod torsion (may be empty for g >= 3) */
    bool user_supplied = false;
};

/* g = 1, 2: computed (continued fractions). g >= 3: `user` must hold a
 * basis of Delta, optionally followed by `user_full`, a basis of O^x/{+-1}. */
UnitGroupPlus units_plus(NumberField const & F,
                         std::optional<std::vector<FieldElement>> const & user = std::nullopt,
                         std::optional<std::vector<FieldElement>> const & user_full = std::nullopt);
void verify_units(NumberField const & F, UnitGroupPlus const & U);

/* Generator of a principal fractional ideal, searched in a box around the
 * unit-reduced region; nullopt when none is found (ideal not principal). */
std::optional<FieldElement> principal_generator(NumberField const & F, UnitGroupPlus const & U,
                                                FractionalIdeal const & a);
/* true iff every ideal below the Minkowski bound is principal (g <= 2) */
bool class_number_is_one(NumberField const & F, UnitGroupPlus const & U);

/* Narrow ray class group Cl+(g). Built from
 *   (O/g)^x x {+-1}^g / image(O^x)  ~  Cl+(g)   (h = 1).
 * Elements of A = (O/g)^x x {+-1}^g are indexed by res * 2^g + signbits,
 * where res is the lexicographic residue index and bit t marks a negative
 * sign at tau_t. */
struct RayClassGroup {
    FractionalIdeal modulus;
    ZMatrix H; /* HNF of the modulus in O-coordinates */
    int degree = 1;
    long nres = 1;
    long one_res = 0;       /* residue index of 1 */
    long minus_one_res = 0; /* residue index of -1 */
    AbelianGroup group;
    std::vector<char> res_unit;            /* residue index -> invertible */
    std::vector<long> coset;               /* A index -> quotient index (or -1) */
    std::vector<std::vector<long>> qcoords; /* quotient index -> group coords */
    std::vector<long> elem_coset;          /* group index -> quotient index */
    std::vector<long> coset_rep;           /* quotient index -> A index */
    std::vector<FieldElement> repr_generators; /* per group index: beta with (beta) in the class */
    std::vector<FractionalIdeal> repr_ideals;  /* per group index */
    UnitGroupPlus units;

    long size() const { return group.size(); }
};

RayClassGroup ray_class_group(NumberField const & F, UnitGroupPlus const & U, FractionalIdeal const & g);

long residue_index(RayClassGroup const & G, NumberField const & F, FieldElement const & x);
FieldElement residue_element(RayClassGroup const & G, NumberField const & F, long idx);
/* group element of [x mod g, signs] in A */
std::vector<long> class_of_pair(RayClassGroup const & G, long res, unsigned signbits);
/* class of the principal ideal (x), x in F^x coprime to g */
std::vector<long> class_of_element(RayClassGroup const & G, NumberField const & F, FieldElement const & x);
/* class of a fractional ideal coprime to g */
std::vector<long> class_of_ideal(RayClassGroup const & G, NumberField const & F, FractionalIdeal const & b);
/* c'_tau: class of (1, -1 at tau) */
std::vector<long> class_c_tau(RayClassGroup const & G, int tau);
/* pr: Cl+(g1) -> Cl+(g0) for g0 | g1 */
std::vector<long> project(RayClassGroup const & G1, RayClassGroup const & G0, NumberField const & F,
                          std::vector<long> const & w);

struct HeckeCharacter {
    std::vector<long> exps; /* psi(w) = zeta_m^{sum exps_i w_i m/d_i} */
    long m = 1;             /* group exponent */
    FractionalIdeal conductor;
    int u = 0;

    bool is_trivial() const;
};

std::vector<HeckeCharacter> characters(RayClassGroup const & G, NumberField const & F);
HeckeCharacter make_character(RayClassGroup const & G, NumberField const & F, std::vector<long> const & exps);
/* exponent e with psi(w) = zeta_m^e */
long character_exponent(RayClassGroup const & G, HeckeCharacter const & psi, std::vector<long> const & w);
CycValue character_value(RayClassGroup const & G, HeckeCharacter const & psi, std::vector<long> const & w);
HeckeCharacter conjugate(RayClassGroup const & G, HeckeCharacter const & psi);
/* psi_O(-1) = psi(class of (-1 mod g, +)) */
CycValue psi_O_minus_one(RayClassGroup const & G, HeckeCharacter const & psi);
bool is_primitive(HeckeCharacter const & psi, RayClassGroup const & G);
bool is_totally_noncritical(HeckeCharacter const & psi, int g, long k);
/* psi0 o pr as a character of G1 */
HeckeCharacter pullback(RayClassGroup const & G1, RayClassGroup const & G0, NumberField const & F,
                        HeckeCharacter const & psi0);
/* primitive character on Cl+(conductor) inducing psi */
HeckeCharacter primitive_of(RayClassGroup const & G, RayClassGroup const & G0, NumberField const & F,
                            HeckeCharacter const & psi);

std::string to_string(std::vector<long> const & w);

} // namespace shintani
