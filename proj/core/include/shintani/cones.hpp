#pragma once

#include "shintani/arithmetic.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace shintani {

/* Simplicial cone spanned by primitive totally positive elements of an
 * ideal. C holds the ideal coordinates of the generators as columns. The
 * boundary rule is the one-sided limit in the direction -e_{tau_g}: with
 * A c = e_{tau_g} (A_{tau,i} = alpha_i^tau), a point with cone coordinates
 * x lies in the half-open cone iff for all i: x_i > 0, or x_i = 0 and
 * c_i <= 0. */
struct Cone {
    std::vector<FieldElement> gens;
    ZMatrix C;
    QMatrix Cinv;
    int sign = 1;
    std::vector<int> csign; /* sign of c_i */

    int dim() const { return static_cast<int>(gens.size()); }
    Z index() const; /* |det C| */
};

Cone make_cone(NumberField const & F, FractionalIdeal const & a, std::vector<FieldElement> const & gens);

struct ShintaniDecomposition {
    FractionalIdeal ideal;
    std::vector<Cone> cones;
    std::string method;
};

enum class DecompositionMethod { Hull, Single };

/* g = 1: the cone on the positive generator. g = 2: fan between the ray of
 * `start` (default 1) and eps * start, subdivided along the boundary of the
 * lattice convex hull (Hull) or kept as one cone (Single). */
ShintaniDecomposition decompose(NumberField const & F, FractionalIdeal const & a, UnitGroupPlus const & U,
                                DecompositionMethod method = DecompositionMethod::Hull,
                                std::optional<FieldElement> const & start = std::nullopt);
ShintaniDecomposition user_decomposition(NumberField const & F, FractionalIdeal const & a,
                                         std::vector<std::vector<FieldElement>> const & cones);

/* coordinates of y in the generator basis of the cone */
std::vector<Q> cone_coords(Cone const & s, FractionalIdeal const & a, FieldElement const & y);
bool breve_rule(Cone const & s, std::vector<Q> const & x);
bool breve_membership(NumberField const & F, FractionalIdeal const & a, Cone const & s, FieldElement const & y);

struct ParallelepipedPoint {
    FieldElement beta;
    std::vector<Q> x; /* cone coordinates in [0,1] */
};
/* lattice points of a in P (0 <= x_i < 1) or in breve P */
std::vector<ParallelepipedPoint> parallelepiped_points(NumberField const & F, FractionalIdeal const & a,
                                                       Cone const & s, bool breve);

/* sampled fundamental-domain check: each random totally positive y in a
 * must lie in exactly one (cone, Delta-translate) */
struct SamplingReport {
    long samples = 0;
    long failures = 0;
    bool ok() const { return failures == 0; }
};
SamplingReport verify_by_sampling(NumberField const & F, UnitGroupPlus const & U, ShintaniDecomposition const & D,
                                  long samples, std::uint64_t seed, long height = 40);

} // namespace shintani
