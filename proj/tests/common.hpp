#pragma once

#include "shintani/errors.hpp"
#include "shintani/hecke.hpp"
#include "shintani/koszul.hpp"
#include "shintani/values.hpp"

#include <vector>

namespace testing {

using namespace shintani;

inline NumberField rationals() { return NumberField::create({Z(0), Z(1)}); }
inline NumberField sqrt5() { return NumberField::create({Z(-1), Z(-1), Z(1)}); }
inline NumberField sqrt2() { return NumberField::create({Z(-2), Z(0), Z(1)}); }
inline NumberField sqrt3() { return NumberField::create({Z(-3), Z(0), Z(1)}); }
/* Q(zeta_7)^+ = Q(theta), theta^3 + theta^2 - 2 theta - 1 = 0 */
inline NumberField cubic7() { return NumberField::create({Z(-1), Z(-2), Z(1), Z(1)}, QMatrix::identity(3)); }
inline UnitGroupPlus cubic7_units(NumberField const & F)
{
    std::vector<FieldElement> d = {FieldElement{{Q(0), Q(0), Q(1)}}, FieldElement{{Q(1), Q(2), Q(1)}}};
    return units_plus(F, d);
}

inline FieldElement elt(std::vector<long> c)
{
    FieldElement x;
    for (long v : c)
        x.coords.push_back(Q(v));
    return x;
}

inline FractionalIdeal principal(NumberField const & F, long n) { return principal_ideal(F, F.from_int(n)); }

inline TorsionPoint trivial_point(NumberField const & F, FractionalIdeal const & g)
{
    return make_point(F, unit_ideal(F), g, std::vector<Q>(F.degree(), Q(0)));
}

} // namespace testing
