#include "shintani/arithmetic.hpp"

#include "shintani/errors.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace shintani {

/* ---------------- units ---------------- */

static Z isqrt(Z const & n)
{
    Z r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

static bool is_unit(NumberField const & F, FieldElement const & e)
{
    if (!F.is_integral(e))
        return false;
    Q n = F.norm(e);
    return n == 1 || n == -1;
}

static FieldElement quadratic_fundamental_unit(NumberField const & F)
{
    FieldElement w = F.basis_element(1);
    Z t = F.trace(w).get_num();
    Z n = F.norm(w).get_num();
    Z D = t * t - 4 * n;
    Z s = isqrt(D);
    /* x = (P + sqrt D) / Q, the larger root of X^2 - tX + n */
    Z P = t, Qd = 2;
    Z h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (int it = 0; it < 100000; ++it) {
        Z a;
        if (Qd > 0)
            a = floor_div(P + s, Qd);
        else
            a = floor_div(-P - s - 1, -Qd);
        Z h = a * h1 + h2, k = a * k1 + k2;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        FieldElement u = F.sub(F.from_rational(Q(h)), F.scale(w, Q(k)));
        if (!u.is_zero() && is_unit(F, u)) {
            /* normalize: eps^{tau_g} > 1 */
            int g = F.degree();
            long double v = F.embed_ld(u, g - 1);
            FieldElement e = std::fabs(v) < 1 ? F.inv(u) : u;
            if (F.sign(e, g - 1) < 0)
                e = F.neg(e);
            return e;
        }
        Z Pn = a * Qd - P;
        Z Qn = (D - Pn * Pn) / Qd;
        P = Pn;
        Qd = Qn;
    }
    throw Error(ErrorCode::ScaleExceeded, "continued fraction did not produce a unit");
}

void verify_units(NumberField const & F, UnitGroupPlus const & U)
{
    int g = F.degree();
    if (static_cast<int>(U.generators.size()) != g - 1)
        throw Error(ErrorCode::BadUnits, "need g-1 totally positive units");
    for (auto const & e : U.generators) {
        if (!is_unit(F, e) || F.norm(e) != 1)
            throw Error(ErrorCode::BadUnits, "generator is not a unit of norm 1");
        if (!F.is_totally_positive(e))
            throw Error(ErrorCode::BadUnits, "generator is not totally positive");
    }
    for (auto const & e : U.fundamental)
        if (!is_unit(F, e))
            throw Error(ErrorCode::BadUnits, "fundamental unit is not a unit");
    if (g <= 1)
        return;
    /* independence: regulator-type determinant away from 0 */
    auto logdet = [&](std::vector<FieldElement> const & v) {
        std::size_t r = v.size();
        std::vector<long double> m(r * r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                m[i * r + j] = std::log(std::fabs(F.embed_ld(v[j], static_cast<int>(i))));
        long double d = 1;
        for (std::size_t c = 0; c < r; ++c) {
            std::size_t p = c;
            for (std::size_t i = c; i < r; ++i)
                if (std::fabs(m[i * r + c]) > std::fabs(m[p * r + c]))
                    p = i;
            if (m[p * r + c] == 0)
                return 0.0L;
            if (p != c) {
                for (std::size_t j = 0; j < r; ++j)
                    std::swap(m[p * r + j], m[c * r + j]);
                d = -d;
            }
            d *= m[c * r + c];
            for (std::size_t i = c + 1; i < r; ++i) {
                long double f = m[i * r + c] / m[c * r + c];
                for (std::size_t j = c; j < r; ++j)
                    m[i * r + j] -= f * m[c * r + j];
            }
        }
        return d;
    };
    if (std::fabs(logdet(U.generators)) < 1e-8L)
        throw Error(ErrorCode::BadUnits, "units are multiplicatively dependent");
    if (!U.fundamental.empty()) {
        if (static_cast<int>(U.fundamental.size()) != g - 1 || std::fabs(logdet(U.fundamental)) < 1e-8L)
            throw Error(ErrorCode::BadUnits, "fundamental units are dependent");
    }
}

UnitGroupPlus units_plus(NumberField const & F, std::optional<std::vector<FieldElement>> const & user,
                         std::optional<std::vector<FieldElement>> const & user_full)
{
    UnitGroupPlus U;
    int g = F.degree();
    if (user) {
        U.generators = *user;
        if (user_full)
            U.fundamental = *user_full;
        U.user_supplied = true;
    } else if (g == 1) {
        /* Delta trivial */
    } else if (g == 2) {
        FieldElement e = quadratic_fundamental_unit(F);
        U.fundamental = {e};
        if (F.norm(e) == 1 && F.is_totally_positive(e))
            U.generators = {e};
        else
            U.generators = {F.mul(e, e)};
    } else {
        throw Error(ErrorCode::NeedUserUnits, "degree >= 3 requires user supplied units");
    }
    verify_units(F, U);
    return U;
}

/* ---------------- principality ---------------- */

std::optional<FieldElement> principal_generator(NumberField const & F, UnitGroupPlus const & U,
                                                FractionalIdeal const & a)
{
    int g = F.degree();
    FieldElement scale_back = F.from_rational(Q(1, 1) / Q(a.den));
    FractionalIdeal b = a;
    b.den = 1;
    Z N = 1;
    for (int i = 0; i < g; ++i)
        N *= b.hnf(i, i);
    if (g == 1)
        return F.mul(ideal_basis_element(b, 0), scale_back);
    if (g != 2)
        throw Error(ErrorCode::Unsupported, "principality search implemented for g <= 2");
    FieldElement eps = U.fundamental.empty() ? U.generators.at(0) : U.fundamental[0];
    long double E = std::max(std::fabs(F.embed_ld(eps, 0)), std::fabs(F.embed_ld(eps, 1)));
    long double R = std::sqrt(static_cast<long double>(N.get_d()) * E) * (1 + 1e-9L) + 1e-9L;
    auto B = ideal_basis(b);
    long double m00 = F.embed_ld(B[0], 0), m01 = F.embed_ld(B[1], 0);
    long double m10 = F.embed_ld(B[0], 1), m11 = F.embed_ld(B[1], 1);
    long double det = m00 * m11 - m01 * m10;
    long double i00 = m11 / det, i01 = -m01 / det, i10 = -m10 / det, i11 = m00 / det;
    long c0 = static_cast<long>(std::ceil(R * (std::fabs(i00) + std::fabs(i01)))) + 1;
    long c1 = static_cast<long>(std::ceil(R * (std::fabs(i10) + std::fabs(i11)))) + 1;
    if (static_cast<long double>(c0) * c1 > 4e7L)
        throw Error(ErrorCode::ScaleExceeded, "principality search box too large");
    Q target = Q(N);
    for (long x = -c0; x <= c0; ++x)
        for (long y = -c1; y <= c1; ++y) {
            long double e0 = x * m00 + y * m01, e1 = x * m10 + y * m11;
            if (std::fabs(e0) > R + 1 || std::fabs(e1) > R + 1)
                continue;
            if (std::fabs(e0 * e1) > static_cast<long double>(N.get_d()) * 1.001L + 1)
                continue;
            FieldElement z = F.add(F.scale(B[0], Q(x)), F.scale(B[1], Q(y)));
            if (z.is_zero())
                continue;
            Q nz = abs(F.norm(z));
            if (nz == target)
                return F.mul(z, scale_back);
        }
    return std::nullopt;
}

bool class_number_is_one(NumberField const & F, UnitGroupPlus const & U)
{
    int g = F.degree();
    if (g == 1)
        return true;
    if (g != 2)
        throw Error(ErrorCode::Unsupported, "class number test implemented for g <= 2");
    long double M = std::sqrt(std::fabs(static_cast<long double>(F.discriminant().get_d()))) / 2;
    long bound = static_cast<long>(std::floor(M));
    for (auto const & I : ideals_up_to_norm(F, bound))
        if (!principal_generator(F, U, I))
            return false;
    return true;
}

/* ---------------- ray class groups ---------------- */

long residue_index(RayClassGroup const & G, NumberField const &, FieldElement const & x)
{
    std::vector<Z> v;
    for (auto const & c : x.coords) {
        if (c.get_den() != 1)
            throw Error(ErrorCode::NotCoprime, "residue of a non-integral element");
        v.push_back(c.get_num());
    }
    v = reduce_mod_hnf(G.H, v);
    long idx = 0;
    for (int i = 0; i < G.degree; ++i)
        idx = idx * G.H(i, i).get_si() + v[i].get_si();
    return idx;
}

FieldElement residue_element(RayClassGroup const & G, NumberField const & F, long idx)
{
    int g = G.degree;
    std::vector<Q> c(g);
    for (int i = g - 1; i >= 0; --i) {
        long d = G.H(i, i).get_si();
        c[i] = idx % d;
        idx /= d;
    }
    (void)F;
    return {c};
}

static unsigned sign_bits(NumberField const & F, FieldElement const & x)
{
    unsigned b = 0;
    for (int t = 0; t < F.degree(); ++t)
        if (F.sign(x, t) < 0)
            b |= 1u << t;
    return b;
}

std::vector<long> class_of_pair(RayClassGroup const & G, long res, unsigned signbits)
{
    long a = (res << G.degree) | signbits;
    long q = G.coset.at(a);
    if (q < 0)
        throw Error(ErrorCode::NotCoprime, "residue not invertible modulo the modulus");
    return G.qcoords[q];
}

static FieldElement coprime_multiplier(RayClassGroup const & G, NumberField const & F, FieldElement const & x)
{
    /* z in O, coprime to g, with z x integral */
    Z d = lcm_of_denominators(x.coords);
    FractionalIdeal Dd = invert(F, ideal_sum(F, principal_ideal(F, x), unit_ideal(F)));
    auto B = ideal_basis(Dd);
    int g = F.degree();
    FieldElement dz = F.from_rational(Q(d));
    if (coprime(F, principal_ideal(F, dz), G.modulus))
        return dz;
    for (long r = 1; r < 64; ++r) {
        std::vector<long> c(g, -r);
        for (;;) {
            FieldElement z = F.zero();
            for (int i = 0; i < g; ++i)
                z = F.add(z, F.scale(B[i], Q(c[i])));
            if (!z.is_zero() && coprime(F, principal_ideal(F, z), G.modulus))
                return z;
            int i = g - 1;
            while (i >= 0 && ++c[i] > r)
                c[i--] = -r;
            if (i < 0)
                break;
        }
    }
    throw Error(ErrorCode::NotCoprime, "element is not coprime to the modulus");
}

std::vector<long> class_of_element(RayClassGroup const & G, NumberField const & F, FieldElement const & x)
{
    if (x.is_zero())
        throw Error(ErrorCode::ZeroElement, "class of zero");
    if (F.is_integral(x))
        return class_of_pair(G, residue_index(G, F, x), sign_bits(F, x));
    FieldElement z = coprime_multiplier(G, F, x);
    auto a = class_of_element(G, F, F.mul(z, x));
    auto b = class_of_element(G, F, z);
    return G.group.add(a, G.group.neg(b));
}

std::vector<long> class_of_ideal(RayClassGroup const & G, NumberField const & F, FractionalIdeal const & b)
{
    auto gen = principal_generator(F, G.units, b);
    if (!gen)
        throw Error(ErrorCode::PrincipalitySearchFailed, "no generator found for " + to_string(b));
    return class_of_element(G, F, *gen);
}

std::vector<long> class_c_tau(RayClassGroup const & G, int tau)
{
    return class_of_pair(G, G.one_res, 1u << tau);
}

std::vector<long> project(RayClassGroup const & G1, RayClassGroup const & G0, NumberField const & F,
                          std::vector<long> const & w)
{
    return class_of_element(G0, F, G1.repr_generators.at(G1.group.index_of(w)));
}

RayClassGroup ray_class_group(NumberField const & F, UnitGroupPlus const & U, FractionalIdeal const & gm)
{
    int g = F.degree();
    if (!gm.is_integral())
        throw Error(ErrorCode::NotIntegralModulus, "modulus must be integral");
    if (g > 2)
        throw Error(ErrorCode::Unsupported, "ray class groups are implemented for g <= 2");
    if (!class_number_is_one(F, U))
        throw Error(ErrorCode::Unsupported, "ray class groups need wide class number 1");
    RayClassGroup G;
    G.modulus = gm;
    G.H = gm.hnf;
    G.degree = g;
    G.units = U;
    long nres = 1;
    for (int i = 0; i < g; ++i)
        nres *= G.H(i, i).get_si();
    if (nres > 200000)
        throw Error(ErrorCode::ScaleExceeded, "modulus norm too large");
    G.nres = nres;
    std::vector<FieldElement> rel(nres);
    G.res_unit.assign(nres, 0);
    for (long r = 0; r < nres; ++r) {
        rel[r] = residue_element(G, F, r);
        if (nres == 1)
            G.res_unit[r] = 1;
        else if (!rel[r].is_zero())
            G.res_unit[r] = coprime(F, principal_ideal(F, rel[r]), gm);
    }
    auto mulres = [&](long a, long b) { return residue_index(G, F, F.mul(rel[a], rel[b])); };
    long nA = nres << g;
    auto mulA = [&](long a, long b) {
        long r = mulres(a >> g, b >> g);
        return (r << g) | ((a ^ b) & ((1L << g) - 1));
    };
    G.one_res = residue_index(G, F, F.one());
    G.minus_one_res = residue_index(G, F, F.from_int(-1));
    long idA = G.one_res << g;
    std::vector<long> ugen;
    ugen.push_back((G.minus_one_res << g) | ((1L << g) - 1));
    for (auto const & e : U.fundamental)
        ugen.push_back((residue_index(G, F, e) << g) | sign_bits(F, e));
    if (U.fundamental.empty())
        for (auto const & e : U.generators)
            ugen.push_back((residue_index(G, F, e) << g) | sign_bits(F, e));
    /* subgroup generated by the units */
    std::vector<long> sub{idA};
    std::set<long> inSub{idA};
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (long u : ugen) {
            long y = mulA(sub[i], u);
            if (inSub.insert(y).second)
                sub.push_back(y);
        }
    G.coset.assign(nA, -1);
    long nq = 0;
    auto assign = [&](long a) {
        for (long u : sub)
            G.coset[mulA(a, u)] = nq;
        G.coset_rep.push_back(a);
        ++nq;
    };
    assign(idA);
    for (long a = 0; a < nA; ++a)
        if (G.res_unit[a >> g] && G.coset[a] < 0)
            assign(a);
    auto P = present_group(nq, [&](long x, long y) { return G.coset[mulA(G.coset_rep[x], G.coset_rep[y])]; });
    G.group = P.group;
    G.qcoords = P.coords;
    long n = G.group.size();
    G.elem_coset.assign(n, -1);
    for (long q = 0; q < nq; ++q)
        G.elem_coset[G.group.index_of(G.qcoords[q])] = q;
    /* representatives: beta = x + gamma, gamma in g, with prescribed signs */
    std::vector<FieldElement> gb;
    for (int j = 0; j < g; ++j) {
        std::vector<Q> c(g);
        for (int i = 0; i < g; ++i)
            c[i] = Q(G.H(i, j));
        gb.push_back({c});
    }
    G.repr_generators.resize(n);
    G.repr_ideals.resize(n);
    for (long e = 0; e < n; ++e) {
        long a = G.coset_rep[G.elem_coset[e]];
        FieldElement x = rel[a >> g];
        if (x.is_zero())
            x = F.one(); /* only when g = O */
        unsigned want = static_cast<unsigned>(a & ((1L << g) - 1));
        bool found = false;
        for (long r = 0; r < 1000 && !found; ++r) {
            std::vector<long> c(g, -r);
            for (;;) {
                long mx = 0;
                for (long v : c)
                    mx = std::max(mx, std::labs(v));
                if (mx == r) {
                    FieldElement b = x;
                    for (int i = 0; i < g; ++i)
                        b = F.add(b, F.scale(gb[i], Q(c[i])));
                    if (!b.is_zero() && sign_bits(F, b) == want) {
                        G.repr_generators[e] = b;
                        G.repr_ideals[e] = principal_ideal(F, b);
                        found = true;
                        break;
                    }
                }
                int i = g - 1;
                while (i >= 0 && ++c[i] > r)
                    c[i--] = -r;
                if (i < 0)
                    break;
            }
        }
        if (!found)
            throw Error(ErrorCode::ScaleExceeded, "no representative with prescribed signs");
    }
    return G;
}

/* ---------------- characters ---------------- */

bool HeckeCharacter::is_trivial() const
{
    for (long e : exps)
        if (e != 0)
            return false;
    return true;
}

long character_exponent(RayClassGroup const & G, HeckeCharacter const & psi, std::vector<long> const & w)
{
    long m = psi.m, s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        s = (s + psi.exps[i] * w[i] % G.group.orders[i] * (m / G.group.orders[i])) % m;
    return mod_pos(s, m);
}

CycValue character_value(RayClassGroup const & G, HeckeCharacter const & psi, std::vector<long> const & w)
{
    return CycValue::root_of_unity(psi.m, character_exponent(G, psi, w));
}

HeckeCharacter conjugate(RayClassGroup const & G, HeckeCharacter const & psi)
{
    HeckeCharacter c = psi;
    c.exps = G.group.neg(psi.exps);
    return c;
}

CycValue psi_O_minus_one(RayClassGroup const & G, HeckeCharacter const & psi)
{
    return character_value(G, psi, class_of_pair(G, G.minus_one_res, 0));
}

static std::vector<std::vector<std::vector<long>>> kernel_sets(RayClassGroup const & G, NumberField const & F,
                                                               std::vector<FractionalIdeal> const & divs)
{
    std::vector<std::vector<std::vector<long>>> out;
    for (auto const & d : divs) {
        std::set<std::vector<long>> s;
        for (long r = 0; r < G.nres; ++r) {
            if (!G.res_unit[r])
                continue;
            FieldElement x = residue_element(G, F, r);
            if (contains(d, F.sub(x, F.one())))
                s.insert(class_of_pair(G, r, 0));
        }
        out.push_back({s.begin(), s.end()});
    }
    return out;
}

static HeckeCharacter annotate(RayClassGroup const & G, std::vector<long> const & exps,
                               std::vector<FractionalIdeal> const & divs,
                               std::vector<std::vector<std::vector<long>>> const & ker)
{
    HeckeCharacter c;
    c.exps = exps;
    c.m = G.group.exponent();
    c.u = 0;
    for (int t = 0; t < G.degree; ++t)
        if (character_exponent(G, c, class_c_tau(G, t)) != 0)
            ++c.u;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        bool triv = true;
        for (auto const & w : ker[i])
            if (character_exponent(G, c, w) != 0) {
                triv = false;
                break;
            }
        if (triv) {
            c.conductor = divs[i];
            break;
        }
    }
    return c;
}

std::vector<HeckeCharacter> characters(RayClassGroup const & G, NumberField const & F)
{
    auto divs = divisors(F, G.modulus);
    auto ker = kernel_sets(G, F, divs);
    std::vector<HeckeCharacter> out;
    for (auto const & e : G.group.elements())
        out.push_back(annotate(G, e, divs, ker));
    return out;
}

HeckeCharacter make_character(RayClassGroup const & G, NumberField const & F, std::vector<long> const & exps)
{
    auto divs = divisors(F, G.modulus);
    auto ker = kernel_sets(G, F, divs);
    return annotate(G, G.group.reduce(exps), divs, ker);
}

bool is_primitive(HeckeCharacter const & psi, RayClassGroup const & G)
{
    return psi.conductor == G.modulus;
}

bool is_totally_noncritical(HeckeCharacter const & psi, int g, long k)
{
    return (k % 2 == 0 && psi.u == g) || (k % 2 != 0 && psi.u == 0);
}

HeckeCharacter pullback(RayClassGroup const & G1, RayClassGroup const & G0, NumberField const & F,
                        HeckeCharacter const & psi0)
{
    std::vector<long> exps(G1.group.orders.size(), 0);
    for (std::size_t k = 0; k < exps.size(); ++k) {
        std::vector<long> ek(exps.size(), 0);
        ek[k] = 1;
        long e = character_exponent(G0, psi0, project(G1, G0, F, ek));
        long dk = G1.group.orders[k];
        exps[k] = mod_pos(e * dk / psi0.m, dk);
    }
    return make_character(G1, F, exps);
}

HeckeCharacter primitive_of(RayClassGroup const & G, RayClassGroup const & G0, NumberField const & F,
                            HeckeCharacter const & psi)
{
    std::size_t r0 = G0.group.orders.size();
    std::vector<long> exps(r0, 0);
    std::vector<char> done(r0, 0);
    for (auto const & w : G.group.elements()) {
        auto w0 = project(G, G0, F, w);
        int nz = -1, cnt = 0;
        for (std::size_t i = 0; i < r0; ++i)
            if (w0[i] != 0) {
                nz = static_cast<int>(i);
                ++cnt;
            }
        if (cnt != 1 || w0[nz] != 1 || done[nz])
            continue;
        long e = character_exponent(G, psi, w);
        long dk = G0.group.orders[nz];
        exps[nz] = mod_pos(e * dk / psi.m, dk);
        done[nz] = 1;
    }
    for (std::size_t i = 0; i < r0; ++i)
        if (!done[i])
            throw Error(ErrorCode::Unsupported, "projection is not surjective on generators");
    return make_character(G0, F, exps);
}

std::string to_string(std::vector<long> const & w)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

} // namespace shintani
