#pragma once

#include "shintani/numberfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shintani {

/* Fractional ideal as a lattice: the columns of hnf/den, read as
 * integral-basis coordinates, form a Z-basis. (den, hnf) is canonical. */
struct FractionalIdeal {
    Z den;
    ZMatrix hnf;
    Q norm;

    bool operator==(FractionalIdeal const & o) const { return den == o.den && hnf == o.hnf; }
    bool operator<(FractionalIdeal const & o) const;
    bool is_integral() const { return den == 1; }
};

FractionalIdeal unit_ideal(NumberField const & F);
FractionalIdeal ideal_from_generators(NumberField const & F, std::vector<FieldElement> const & gens);
FractionalIdeal principal_ideal(NumberField const & F, FieldElement const & x);
/* Z-basis given as columns (integral-basis coordinates); must be an O-module */
FractionalIdeal ideal_from_lattice(NumberField const & F, QMatrix const & cols);

FractionalIdeal multiply(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & b);
FractionalIdeal invert(NumberField const & F, FractionalIdeal const & a);
FractionalIdeal ideal_sum(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & b);
FractionalIdeal ideal_pow(NumberField const & F, FractionalIdeal const & a, long e);
FractionalIdeal scale(NumberField const & F, FractionalIdeal const & a, FieldElement const & x);
bool contains(FractionalIdeal const & a, FieldElement const & x);
/* b subset of a */
bool contains(FractionalIdeal const & a, FractionalIdeal const & b);
bool coprime(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & b);

FieldElement ideal_basis_element(FractionalIdeal const & a, int j);
std::vector<FieldElement> ideal_basis(FractionalIdeal const & a);
/* coordinates of x in the ideal basis (rational if x not in a) */
std::vector<Q> ideal_coords(FractionalIdeal const & a, FieldElement const & x);
std::optional<std::vector<Z>> ideal_coords_integral(FractionalIdeal const & a, FieldElement const & x);
/* HNF (in a-coordinates) of a sublattice b of a */
ZMatrix relative_hnf(FractionalIdeal const & a, FractionalIdeal const & b);

/* coset representatives of a / g a in lexicographic order of HNF coordinates */
std::vector<FieldElement> residues(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & g);
std::vector<std::vector<Z>> residue_coords(ZMatrix const & H);

bool is_primitive(NumberField const & F, FieldElement const & alpha, FractionalIdeal const & a);

FractionalIdeal different_ideal(NumberField const & F);

/* ideals containing g, i.e. the integral divisors of g */
std::vector<FractionalIdeal> divisors(NumberField const & F, FractionalIdeal const & g);
/* integral ideals of norm <= bound */
std::vector<FractionalIdeal> ideals_up_to_norm(NumberField const & F, long bound);
/* least positive integer in an integral ideal */
Z ideal_min_integer(NumberField const & F, FractionalIdeal const & a);

std::string to_string(FractionalIdeal const & a);

} // namespace shintani
