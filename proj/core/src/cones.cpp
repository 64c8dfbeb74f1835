#include "shintani/cones.hpp"

#include "shintani/errors.hpp"

#include <cmath>

namespace shintani {

Z Cone::index() const
{
    return abs(det(C));
}

static int ideal_orientation(NumberField const & F, FractionalIdeal const & a)
{
    /* sign of det(b_j^{tau_i}) for the HNF basis of a; |det| = N(a) sqrt(d) */
    int g = F.degree();
    auto B = ideal_basis(a);
    std::vector<long double> m(g * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            m[i * g + j] = F.embed_ld(B[j], i);
    long double d = 1;
    for (int c = 0; c < g; ++c) {
        int p = c;
        for (int i = c; i < g; ++i)
            if (std::fabs(m[i * g + c]) > std::fabs(m[p * g + c]))
                p = i;
        if (p != c) {
            for (int j = 0; j < g; ++j)
                std::swap(m[p * g + j], m[c * g + j]);
            d = -d;
        }
        d *= m[c * g + c];
        for (int i = c + 1; i < g; ++i) {
            long double f = m[i * g + c] / m[c * g + c];
            for (int j = c; j < g; ++j)
                m[i * g + j] -= f * m[c * g + j];
        }
    }
    return d > 0 ? 1 : -1;
}

static long double det_ld(std::vector<long double> m, int n)
{
    long double d = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int i = c; i < n; ++i)
            if (std::fabs(m[i * n + c]) > std::fabs(m[p * n + c]))
                p = i;
        if (m[p * n + c] == 0)
            return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j)
                std::swap(m[p * n + j], m[c * n + j]);
            d = -d;
        }
        d *= m[c * n + c];
        for (int i = c + 1; i < n; ++i) {
            long double f = m[i * n + c] / m[c * n + c];
            for (int j = c; j < n; ++j)
                m[i * n + j] -= f * m[c * n + j];
        }
    }
    return d;
}

Cone make_cone(NumberField const & F, FractionalIdeal const & a, std::vector<FieldElement> const & gens)
{
    int g = F.degree();
    if (static_cast<int>(gens.size()) != g)
        throw Error(ErrorCode::DegenerateCone, "a cone needs g generators");
    Cone s;
    s.gens = gens;
    s.C = ZMatrix(g, g);
    for (int j = 0; j < g; ++j) {
        if (!is_primitive(F, gens[j], a))
            throw Error(ErrorCode::NotPrimitive, "cone generator is not primitive");
        auto c = *ideal_coords_integral(a, gens[j]);
        for (int i = 0; i < g; ++i)
            s.C(i, j) = c[i];
    }
    Z dC = det(s.C);
    if (dC == 0)
        throw Error(ErrorCode::DegenerateCone, "cone generators are linearly dependent");
    s.Cinv = inverse(to_q(s.C));
    s.sign = sgn(dC) * ideal_orientation(F, a);
    s.csign.assign(g, 0);
    if (g == 1) {
        s.csign[0] = 1;
    } else if (g == 2) {
        s.csign[0] = -s.sign;
        s.csign[1] = s.sign;
    } else {
        /* c_i = (-1)^{i+g} M_{g,i} / det A */
        std::vector<long double> A(g * g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                A[i * g + j] = F.embed_ld(gens[j], i);
        long double dA = det_ld(A, g);
        for (int i = 0; i < g; ++i) {
            std::vector<long double> M;
            long double scale = 0;
            for (int r = 0; r < g - 1; ++r)
                for (int c = 0; c < g; ++c)
                    if (c != i) {
                        M.push_back(A[r * g + c]);
                        scale = std::max(scale, std::fabs(A[r * g + c]));
                    }
            long double m = det_ld(M, g - 1);
            if (std::fabs(m) <= 1e-12L * std::pow(scale, static_cast<long double>(g - 1)))
                throw Error(ErrorCode::DegenerateCone, "boundary direction is ambiguous");
            long double c = (((i + g - 1) % 2) ? -1 : 1) * m / dA;
            s.csign[i] = c > 0 ? 1 : -1;
        }
    }
    return s;
}

std::vector<Q> cone_coords(Cone const & s, FractionalIdeal const & a, FieldElement const & y)
{
    return mul(s.Cinv, ideal_coords(a, y));
}

bool breve_rule(Cone const & s, std::vector<Q> const & x)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        int sx = sgn(x[i]);
        if (sx > 0)
            continue;
        if (sx == 0 && s.csign[i] <= 0)
            continue;
        return false;
    }
    return true;
}

bool breve_membership(NumberField const &, FractionalIdeal const & a, Cone const & s, FieldElement const & y)
{
    return breve_rule(s, cone_coords(s, a, y));
}

std::vector<ParallelepipedPoint> parallelepiped_points(NumberField const & F, FractionalIdeal const & a,
                                                       Cone const & s, bool breve)
{
    int g = F.degree();
    ZMatrix H = hnf(s.C);
    std::vector<ParallelepipedPoint> out;
    for (auto const & v : residue_coords(H)) {
        std::vector<Q> vq(v.begin(), v.end());
        std::vector<Q> x = mul(s.Cinv, vq);
        for (int i = 0; i < g; ++i) {
            x[i] = frac(x[i]);
            if (breve && sgn(x[i]) == 0 && s.csign[i] > 0)
                x[i] = 1;
        }
        FieldElement b = F.zero();
        for (int i = 0; i < g; ++i)
            if (sgn(x[i]) != 0)
                b = F.add(b, F.scale(s.gens[i], x[i]));
        out.push_back({b, x});
    }
    (void)a;
    return out;
}

static FieldElement from_ideal_coords(NumberField const & F, FractionalIdeal const & a, std::vector<Z> const & v)
{
    FieldElement y = F.zero();
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0)
            y = F.add(y, F.scale(ideal_basis_element(a, static_cast<int>(j)), Q(v[j])));
    return y;
}

ShintaniDecomposition decompose(NumberField const & F, FractionalIdeal const & a, UnitGroupPlus const & U,
                                DecompositionMethod method, std::optional<FieldElement> const & start)
{
    int g = F.degree();
    ShintaniDecomposition D;
    D.ideal = a;
    if (g == 1) {
        D.method = "single";
        D.cones.push_back(make_cone(F, a, {ideal_basis_element(a, 0)}));
        return D;
    }
    if (g != 2)
        throw Error(ErrorCode::NeedUserCones, "automatic decomposition implemented for g <= 2");
    FieldElement v0 = start ? *start : F.one();
    if (!F.is_totally_positive(v0))
        throw Error(ErrorCode::NotTotallyPositive, "start element must be totally positive");
    /* primitive lattice vector on the ray of v0 */
    std::vector<Q> q = ideal_coords(a, v0);
    Z l = lcm_of_denominators(q);
    std::vector<Z> v(g);
    for (int i = 0; i < g; ++i)
        v[i] = Q(q[i] * Q(l)).get_num();
    Z gg = gcd_of(v);
    for (auto & x : v)
        x /= gg;
    FieldElement ve = from_ideal_coords(F, a, v);
    FieldElement eps = U.generators.at(0);
    auto wc = ideal_coords_integral(a, F.mul(eps, ve));
    std::vector<Z> w = *wc;
    int s = ideal_orientation(F, a);
    auto Dt = [&](std::vector<Z> const & x, std::vector<Z> const & y) { return Z(s * (x[0] * y[1] - x[1] * y[0])); };
    if (Dt(v, w) <= 0)
        throw Error(ErrorCode::DegenerateCone, "unit does not rotate the start ray");
    if (method == DecompositionMethod::Single) {
        D.method = "single";
        D.cones.push_back(make_cone(F, a, {ve, from_ideal_coords(F, a, w)}));
        return D;
    }
    D.method = "hull";
    std::vector<std::vector<Z>> pts{v};
    std::vector<Z> p = v;
    for (long it = 0;; ++it) {
        if (it > 200000)
            throw Error(ErrorCode::ScaleExceeded, "hull subdivision too long");
        Z dpw = Dt(p, w);
        if (dpw == 0)
            break;
        Z d, x, y;
        mpz_gcdext(d.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p[0].get_mpz_t(), p[1].get_mpz_t());
        std::vector<Z> q0{-s * y, s * x};
        Z num = -Dt(q0, w);
        Z t = -floor_div(-num, dpw); /* ceil(num / dpw) */
        std::vector<Z> nx{q0[0] + t * p[0], q0[1] + t * p[1]};
        pts.push_back(nx);
        p = nx;
    }
    if (pts.back() != w)
        throw Error(ErrorCode::DegenerateCone, "hull subdivision did not close up");
    std::vector<FieldElement> els;
    for (auto const & x : pts)
        els.push_back(from_ideal_coords(F, a, x));
    for (std::size_t j = 0; j + 1 < els.size(); ++j)
        D.cones.push_back(make_cone(F, a, {els[j], els[j + 1]}));
    return D;
}

ShintaniDecomposition user_decomposition(NumberField const & F, FractionalIdeal const & a,
                                         std::vector<std::vector<FieldElement>> const & cones)
{
    ShintaniDecomposition D;
    D.ideal = a;
    D.method = "user";
    for (auto const & c : cones)
        D.cones.push_back(make_cone(F, a, c));
    return D;
}

SamplingReport verify_by_sampling(NumberField const & F, UnitGroupPlus const & U, ShintaniDecomposition const & D,
                                  long samples, std::uint64_t seed, long height)
{
    int g = F.degree();
    int r = g - 1;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-height, height);
    FractionalIdeal const & a = D.ideal;
    SamplingReport rep;
    /* reference point: sum of the generators of the first cone */
    FieldElement ctr = F.zero();
    for (auto const & x : D.cones.at(0).gens)
        ctr = F.add(ctr, x);
    auto logvec = [&](FieldElement const & y) {
        std::vector<long double> l(g);
        long double m = 0;
        for (int t = 0; t < g; ++t) {
            l[t] = std::log(std::fabs(F.embed_ld(y, t)));
            m += l[t];
        }
        for (auto & x : l)
            x -= m / g;
        return l;
    };
    std::vector<std::vector<long double>> L;
    for (auto const & e : U.generators)
        L.push_back(logvec(e));
    auto lc = logvec(ctr);
    while (rep.samples < samples) {
        std::vector<Z> c(g);
        for (auto & x : c)
            x = dist(rng);
        FieldElement y = from_ideal_coords(F, a, c);
        if (y.is_zero() || !F.is_totally_positive(y))
            continue;
        ++rep.samples;
        std::vector<long> n0(r, 0);
        if (r > 0) {
            /* solve sum_j n_j L_j ~ lc - ly on the first r coordinates */
            auto ly = logvec(y);
            std::vector<long double> M(r * r), rhs(r);
            for (int i = 0; i < r; ++i) {
                for (int j = 0; j < r; ++j)
                    M[i * r + j] = L[j][i];
                rhs[i] = lc[i] - ly[i];
            }
            /* Cramer on tiny systems */
            long double dM = det_ld(M, r);
            for (int j = 0; j < r; ++j) {
                auto Mj = M;
                for (int i = 0; i < r; ++i)
                    Mj[i * r + j] = rhs[i];
                n0[j] = std::lround(det_ld(Mj, r) / dM);
            }
        }
        long W = 3;
        long hits = 0;
        std::vector<long> off(r, -W);
        for (;;) {
            FieldElement z = y;
            for (int j = 0; j < r; ++j)
                z = F.mul(z, F.pow(U.generators[j], n0[j] + off[j]));
            for (auto const & s : D.cones)
                if (breve_membership(F, a, s, z))
                    ++hits;
            int j = r - 1;
            while (j >= 0 && ++off[j] > W)
                off[j--] = -W;
            if (j < 0)
                break;
        }
        if (hits != 1)
            ++rep.failures;
    }
    return rep;
}

} // namespace shintani
