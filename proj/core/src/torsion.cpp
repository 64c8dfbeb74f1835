#include "shintani/torsion.hpp"

#include "shintani/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace shintani {

long TorsionPoint::order() const
{
    return lcm_of_denominators(r).get_si();
}

bool TorsionPoint::is_trivial() const
{
    for (auto const & x : r)
        if (sgn(x) != 0)
            return false;
    return true;
}

static std::vector<Q> reduce_mod1(std::vector<Q> r)
{
    for (auto & x : r)
        x = frac(x);
    return r;
}

/* columns: coordinates in the basis of a of the basis of b (b inside a) */
static ZMatrix inclusion_matrix(FractionalIdeal const & a, FractionalIdeal const & b)
{
    auto B = ideal_basis(b);
    int g = static_cast<int>(B.size());
    ZMatrix M(g, g);
    for (int j = 0; j < g; ++j) {
        auto c = ideal_coords_integral(a, B[j]);
        if (!c)
            throw Error(ErrorCode::NotInIdeal, "lattice is not contained in the ideal");
        for (int i = 0; i < g; ++i)
            M(i, j) = (*c)[i];
    }
    return M;
}

static std::vector<Q> pull(ZMatrix const & M, std::vector<Q> const & r)
{
    int g = static_cast<int>(r.size());
    std::vector<Q> out(g, Q(0));
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i)
            out[j] += Q(M(i, j)) * r[i];
    return reduce_mod1(out);
}

TorsionPoint make_point(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & g,
                        std::vector<Q> r)
{
    if (static_cast<int>(r.size()) != F.degree())
        throw Error(ErrorCode::ConfigError, "torsion vector has the wrong length");
    TorsionPoint xi{a, g, reduce_mod1(std::move(r))};
    ZMatrix M = inclusion_matrix(a, multiply(F, g, a));
    for (auto const & x : pull(M, xi.r))
        if (sgn(x) != 0)
            throw Error(ErrorCode::NotDivisible, "torsion point does not kill g a");
    return xi;
}

Q point_exponent(TorsionPoint const & xi, FieldElement const & alpha)
{
    auto c = ideal_coords_integral(xi.ideal, alpha);
    if (!c)
        throw Error(ErrorCode::NotInIdeal, "argument of a torsion point outside its ideal");
    Q s = 0;
    for (std::size_t i = 0; i < c->size(); ++i)
        s += xi.r[i] * Q((*c)[i]);
    return frac(s);
}

CycValue point_value(TorsionPoint const & xi, FieldElement const & alpha, long m)
{
    if (m == 0)
        m = xi.order();
    Q e = point_exponent(xi, alpha) * Q(m);
    if (e.get_den() != 1)
        throw Error(ErrorCode::NotDivisible, "root of unity order too small");
    return CycValue::root_of_unity(m, e.get_num().get_si());
}

std::vector<TorsionPoint> points_of(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & g)
{
    /* r ranges over M^{-T} Z^g / Z^g, M the inclusion g a -> a */
    ZMatrix M = inclusion_matrix(a, multiply(F, g, a));
    ZMatrix Mt = transpose(M);
    QMatrix Mti = inverse(to_q(Mt));
    std::vector<TorsionPoint> out;
    for (auto const & v : residue_coords(hnf(Mt))) {
        std::vector<Q> vq(v.begin(), v.end());
        out.push_back({a, g, reduce_mod1(mul(Mti, vq))});
    }
    std::sort(out.begin(), out.end(), [](auto const & x, auto const & y) { return x.r < y.r; });
    return out;
}

TorsionPoint xi_can(NumberField const & F, FractionalIdeal const & g)
{
    FractionalIdeal a = invert(F, multiply(F, g, different_ideal(F)));
    auto B = ideal_basis(a);
    std::vector<Q> r;
    for (auto const & b : B)
        r.push_back(-F.trace(b));
    return make_point(F, a, g, r);
}

TorsionPoint act_unit(NumberField const & F, TorsionPoint const & xi, FieldElement const & eps)
{
    auto B = ideal_basis(xi.ideal);
    int g = static_cast<int>(B.size());
    ZMatrix E(g, g);
    for (int j = 0; j < g; ++j) {
        auto c = ideal_coords_integral(xi.ideal, F.mul(eps, B[j]));
        if (!c)
            throw Error(ErrorCode::BadUnits, "element does not preserve the ideal");
        for (int i = 0; i < g; ++i)
            E(i, j) = (*c)[i];
    }
    return {xi.ideal, xi.modulus, pull(E, xi.r)};
}

TorsionPoint act_ideal(NumberField const & F, TorsionPoint const & xi, FractionalIdeal const & b)
{
    if (!b.is_integral())
        throw Error(ErrorCode::NotIntegralModulus, "ideal action needs an integral ideal");
    FractionalIdeal ba = multiply(F, b, xi.ideal);
    return {ba, xi.modulus, pull(inclusion_matrix(xi.ideal, ba), xi.r)};
}

TorsionPoint transport(NumberField const & F, TorsionPoint const & xi, FieldElement const & x)
{
    FractionalIdeal a2 = scale(F, xi.ideal, F.inv(x));
    auto B = ideal_basis(a2);
    int g = static_cast<int>(B.size());
    ZMatrix M(g, g);
    for (int j = 0; j < g; ++j) {
        auto c = *ideal_coords_integral(xi.ideal, F.mul(x, B[j]));
        for (int i = 0; i < g; ++i)
            M(i, j) = c[i];
    }
    return {a2, xi.modulus, pull(M, xi.r)};
}

TorsionPoint inverse_point(TorsionPoint const & xi)
{
    std::vector<Q> r = xi.r;
    for (auto & x : r)
        x = -x;
    return {xi.ideal, xi.modulus, reduce_mod1(r)};
}

FractionalIdeal conductor(NumberField const & F, TorsionPoint const & xi)
{
    /* f = {x in O : x a in ker xi}; rows e_i and (t_{jk})_k with
     * t_{jk} = <r, coords(omega_k b_j)> */
    int g = F.degree();
    auto B = ideal_basis(xi.ideal);
    QMatrix rows(2 * g, g);
    for (int i = 0; i < g; ++i)
        rows(i, i) = 1;
    for (int j = 0; j < g; ++j)
        for (int k = 0; k < g; ++k)
            rows(g + j, k) = point_exponent(xi, F.mul(F.basis_element(k), B[j]));
    QMatrix D = dual_lattice_basis(rows);
    return ideal_from_lattice(F, D);
}

bool is_primitive(NumberField const & F, TorsionPoint const & xi)
{
    return conductor(F, xi) == xi.modulus;
}

DeltaOrbit delta_orbit(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi)
{
    int r = static_cast<int>(U.generators.size());
    DeltaOrbit O;
    std::map<std::vector<Q>, long> seen;
    O.points.push_back(xi);
    O.exponents.push_back(std::vector<long>(r, 0));
    seen[xi.r] = 0;
    std::vector<std::vector<long>> rel;
    for (std::size_t p = 0; p < O.points.size(); ++p)
        for (int j = 0; j < r; ++j) {
            TorsionPoint q = act_unit(F, O.points[p], U.generators[j]);
            auto e = O.exponents[p];
            e[j] += 1;
            auto it = seen.find(q.r);
            if (it == seen.end()) {
                seen[q.r] = static_cast<long>(O.points.size());
                O.points.push_back(q);
                O.exponents.push_back(e);
            } else {
                auto const & f = O.exponents[it->second];
                std::vector<long> d(r);
                for (int i = 0; i < r; ++i)
                    d[i] = e[i] - f[i];
                rel.push_back(d);
            }
        }
    if (r > 0) {
        ZMatrix R(r, rel.size());
        for (std::size_t c = 0; c < rel.size(); ++c)
            for (int i = 0; i < r; ++i)
                R(i, c) = rel[c][i];
        ZMatrix H = hnf(R);
        for (std::size_t c = 0; c < H.cols; ++c) {
            std::vector<long> v(r);
            bool nz = false;
            for (int i = 0; i < r; ++i) {
                v[i] = H(i, c).get_si();
                nz |= v[i] != 0;
            }
            if (nz)
                O.isotropy.push_back(v);
        }
    }
    return O;
}

TorsionPoint canonical_point(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi)
{
    auto O = delta_orbit(F, U, xi);
    return *std::min_element(O.points.begin(), O.points.end(),
                             [](auto const & x, auto const & y) { return x.r < y.r; });
}

std::optional<FieldElement> totally_positive_generator(NumberField const & F, UnitGroupPlus const & U,
                                                       FractionalIdeal const & a)
{
    auto y = principal_generator(F, U, a);
    if (!y)
        return std::nullopt;
    int g = F.degree();
    std::vector<FieldElement> units{F.one(), F.from_int(-1)};
    for (auto const & e : U.fundamental) {
        std::size_t n = units.size();
        for (std::size_t i = 0; i < n; ++i)
            units.push_back(F.mul(units[i], e));
    }
    for (auto const & u : units) {
        FieldElement z = F.mul(u, *y);
        if (F.is_totally_positive(z))
            return z;
    }
    (void)g;
    return std::nullopt;
}

/* point on the narrow-class representative of its ideal */
static TorsionPoint to_representative(NumberField const & F, UnitGroupPlus const & U, RayClassGroup const & N,
                                      TorsionPoint const & xi)
{
    auto w = class_of_ideal(N, F, xi.ideal);
    FractionalIdeal const & rep = N.repr_ideals.at(N.group.index_of(w));
    auto x = totally_positive_generator(F, U, multiply(F, xi.ideal, invert(F, rep)));
    if (!x)
        throw Error(ErrorCode::PrincipalitySearchFailed, "ideal not in the expected narrow class");
    TorsionPoint t = transport(F, xi, *x);
    if (!(t.ideal == rep))
        throw Error(ErrorCode::PrincipalitySearchFailed, "transport landed on the wrong ideal");
    return canonical_point(F, U, t);
}

TorsorTable classes_T0(NumberField const & F, RayClassGroup const & G, long max_size)
{
    TorsorTable T;
    T.modulus = G.modulus;
    T.narrow = ray_class_group(F, G.units, unit_ideal(F));
    long total = 0;
    for (auto const & c : T.narrow.repr_ideals) {
        Z n = 1;
        for (std::size_t i = 0; i < G.H.rows; ++i)
            n *= G.H(i, i);
        total += n.get_si();
        (void)c;
    }
    if (total > max_size)
        throw Error(ErrorCode::ScaleExceeded, "too many torsion points");
    for (auto const & c : T.narrow.repr_ideals) {
        std::vector<TorsionPoint> found;
        for (auto const & xi : points_of(F, c, G.modulus)) {
            if (!is_primitive(F, xi))
                continue;
            TorsionPoint k = canonical_point(F, G.units, xi);
            if (std::find(found.begin(), found.end(), k) == found.end())
                found.push_back(k);
        }
        std::sort(found.begin(), found.end(), [](auto const & x, auto const & y) { return x.r < y.r; });
        for (auto & p : found)
            T.points.push_back(p);
    }
    long n = G.size();
    T.action.assign(n, std::vector<long>(T.points.size(), -1));
    for (long e = 0; e < n; ++e)
        for (std::size_t p = 0; p < T.points.size(); ++p)
            T.action[e][p] = torsor_act(F, T, static_cast<long>(p), G.repr_ideals[e]);
    return T;
}

long locate(NumberField const & F, TorsorTable const & T, TorsionPoint const & xi)
{
    TorsionPoint k = to_representative(F, T.narrow.units, T.narrow, xi);
    for (std::size_t i = 0; i < T.points.size(); ++i)
        if (T.points[i] == k)
            return static_cast<long>(i);
    return -1;
}

long torsor_act(NumberField const & F, TorsorTable const & T, long point, FractionalIdeal const & b)
{
    return locate(F, T, act_ideal(F, T.points.at(point), b));
}

bool is_torsor(TorsorTable const & T)
{
    long n = static_cast<long>(T.action.size());
    if (static_cast<long>(T.points.size()) != n)
        return false;
    for (long p = 0; p < n; ++p)
        for (long q = 0; q < n; ++q) {
            long hits = 0;
            for (long e = 0; e < n; ++e)
                hits += T.action[e][p] == q;
            if (hits != 1)
                return false;
        }
    return true;
}

bool involution_check(NumberField const & F, RayClassGroup const & G, TorsorTable const & T, long point)
{
    unsigned all = (1u << F.degree()) - 1;
    auto w = class_of_pair(G, G.one_res, all);
    long img = T.action.at(G.group.index_of(w)).at(point);
    long inv = locate(F, T, inverse_point(T.points.at(point)));
    return img >= 0 && img == inv;
}

std::string to_string(TorsionPoint const & xi)
{
    std::ostringstream os;
    os << "{" << to_string(xi.ideal) << " mod " << to_string(xi.modulus) << " r=[";
    for (std::size_t i = 0; i < xi.r.size(); ++i)
        os << (i ? "," : "") << xi.r[i].get_str();
    os << "]}";
    return os.str();
}

} // namespace shintani
