#include "shintani/hecke.hpp"

#include "shintani/errors.hpp"

#include <boost/math/special_functions/expint.hpp>

#include <algorithm>
#include <cmath>

namespace shintani {

using cld = std::complex<long double>;
static long double const kTau = 6.283185307179586476925286766559L;

/* ---------------- primes ---------------- */

std::vector<long> primes_up_to(long n)
{
    std::vector<long> out;
    if (n < 2)
        return out;
    std::vector<char> comp(static_cast<std::size_t>(n) + 1, 0);
    for (long i = 2; i <= n; ++i) {
        if (comp[i])
            continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i)
            comp[j] = 1;
    }
    return out;
}

using i128 = __int128;

static long mulmod(long a, long b, long p)
{
    return static_cast<long>(static_cast<i128>(a) * b % p);
}

static long powmod(long a, long e, long p)
{
    long r = 1 % p;
    a %= p;
    if (a < 0)
        a += p;
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

/* square root mod an odd prime of a quadratic residue (Tonelli-Shanks) */
static long sqrt_mod(long a, long p)
{
    a %= p;
    if (a < 0)
        a += p;
    if (a == 0)
        return 0;
    long q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    long z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    long m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        long i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        long b = c;
        for (long j = 0; j < m - i - 1; ++j)
            b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

/* polynomials over Z/p, ascending */
using PolyP = std::vector<long>;

static void trim_p(PolyP & a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

static PolyP rem_p(PolyP a, PolyP const & b, long p)
{
    trim_p(a);
    long inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        long c = mulmod(a.back(), inv, p);
        std::size_t sh = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[sh + i] = ((a[sh + i] - mulmod(c, b[i], p)) % p + p) % p;
        trim_p(a);
    }
    return a;
}

static PolyP mulmod_p(PolyP const & a, PolyP const & b, PolyP const & f, long p)
{
    if (a.empty() || b.empty())
        return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    return rem_p(c, f, p);
}

static PolyP gcd_p(PolyP a, PolyP b, long p)
{
    trim_p(a);
    trim_p(b);
    while (!b.empty()) {
        PolyP r = rem_p(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

static PolyP reduce_poly(std::vector<Z> const & f, long p)
{
    PolyP a;
    for (auto const & c : f) {
        Z r = c % p;
        if (r < 0)
            r += p;
        a.push_back(r.get_si());
    }
    trim_p(a);
    return a;
}

/* residue degrees of the primes above p when f is squarefree mod p, else nullopt */
static std::optional<std::vector<int>> residue_degrees(std::vector<Z> const & fz, long p)
{
    PolyP f = reduce_poly(fz, p);
    PolyP df;
    for (std::size_t i = 1; i < f.size(); ++i)
        df.push_back(mulmod(static_cast<long>(i % p), f[i], p));
    trim_p(df);
    if (df.empty() || gcd_p(f, df, p).size() > 1)
        return std::nullopt;
    std::vector<int> out;
    PolyP h{0, 1};
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        /* h = x^{p^d} mod f */
        PolyP base = h, r{1};
        for (long e = p; e > 0; e >>= 1) {
            if (e & 1)
                r = mulmod_p(r, base, f, p);
            base = mulmod_p(base, base, f, p);
        }
        h = r;
        PolyP hx = h;
        hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
        hx[1] = (hx[1] - 1 + p) % p;
        trim_p(hx);
        PolyP gd = gcd_p(f, hx, p);
        int k = static_cast<int>(gd.size()) - 1;
        for (int j = 0; j < k / d; ++j)
            out.push_back(d);
        if (k > 0) {
            /* f /= gd */
            PolyP q(f.size() - gd.size() + 1, 0), a = f;
            long inv = powmod(gd.back(), p - 2, p);
            for (std::size_t i = q.size(); i-- > 0;) {
                long c = mulmod(a[i + gd.size() - 1], inv, p);
                q[i] = c;
                for (std::size_t j = 0; j < gd.size(); ++j)
                    a[i + j] = ((a[i + j] - mulmod(c, gd[j], p)) % p + p) % p;
            }
            f = q;
            trim_p(f);
            deg = static_cast<int>(f.size()) - 1;
            h = rem_p(h, f, p);
        }
    }
    if (deg > 0)
        out.push_back(deg);
    return out;
}

static bool quadratic_data(NumberField const & F, FieldElement & omega, long & t, long & n)
{
    if (F.degree() != 2 || !F.ring_generator())
        return false;
    omega = *F.ring_generator();
    t = F.trace(omega).get_num().get_si();
    n = F.norm(omega).get_num().get_si();
    return true;
}

static FieldElement lin(NumberField const & F, FieldElement const & omega, long a, long b)
{
    return F.add(F.from_int(a), F.scale(omega, Q(b)));
}

/* generator of (p, omega - r), norm p, by enumerating the Minkowski ellipse */
static std::optional<FieldElement> quadratic_prime_generator(NumberField const & F, UnitGroupPlus const & U,
                                                             FieldElement const & omega, long t, long n, long p,
                                                             long r)
{
    long double w[2] = {F.embed_ld(omega, 0), F.embed_ld(omega, 1)};
    auto q = [&](long double a, long double b) {
        long double x = a + b * w[0], y = a + b * w[1];
        return x * x + y * y;
    };
    auto bil = [&](long double a1, long double b1, long double a2, long double b2) {
        return (a1 + b1 * w[0]) * (a2 + b2 * w[0]) + (a1 + b1 * w[1]) * (a2 + b2 * w[1]);
    };
    long v1[2] = {p, 0}, v2[2] = {-r, 1};
    for (int it = 0; it < 200; ++it) {
        if (q(v2[0], v2[1]) < q(v1[0], v1[1]))
            std::swap(v1, v2);
        long double mu = bil(v1[0], v1[1], v2[0], v2[1]) / q(v1[0], v1[1]);
        long k = std::lround(mu);
        if (k == 0)
            break;
        v2[0] -= k * v1[0];
        v2[1] -= k * v1[1];
    }
    long double eps = 1;
    for (auto const & e : U.fundamental.empty() ? U.generators : U.fundamental)
        eps = std::max({eps, std::fabs(F.embed_ld(e, 0)), std::fabs(F.embed_ld(e, 1))});
    long double R = static_cast<long double>(p) * (eps + 1 / eps) * 1.001L + 1;
    long double n1 = q(v1[0], v1[1]);
    long double mu = bil(v1[0], v1[1], v2[0], v2[1]) / n1;
    long double n2 = q(v2[0], v2[1]) - mu * mu * n1;
    long B2 = static_cast<long>(std::floor(std::sqrt(R / n2))) + 1;
    for (long c2 = -B2; c2 <= B2; ++c2) {
        long double rest = R - static_cast<long double>(c2) * c2 * n2;
        if (rest < 0)
            continue;
        long double ctr = -mu * c2, rad = std::sqrt(rest / n1);
        for (long c1 = static_cast<long>(std::floor(ctr - rad)) - 1; c1 <= static_cast<long>(std::ceil(ctr + rad)) + 1;
             ++c1) {
            i128 a = static_cast<i128>(c1) * v1[0] + static_cast<i128>(c2) * v2[0];
            i128 b = static_cast<i128>(c1) * v1[1] + static_cast<i128>(c2) * v2[1];
            i128 N = a * a + static_cast<i128>(t) * a * b + static_cast<i128>(n) * b * b;
            if (N == p || N == -p)
                return lin(F, omega, static_cast<long>(a), static_cast<long>(b));
        }
    }
    return std::nullopt;
}

FractionalIdeal prime_ideal(NumberField const & F, PrimeIdeal const & P)
{
    if (P.generator)
        return principal_ideal(F, *P.generator);
    throw Error(ErrorCode::Unsupported, "prime ideal without a recorded generator");
}

static std::vector<FractionalIdeal> prime_ideals_by_divisors(NumberField const & F, long p)
{
    auto divs = divisors(F, principal_ideal(F, F.from_int(p)));
    FractionalIdeal one = unit_ideal(F);
    std::vector<FractionalIdeal> cand, out;
    for (auto const & d : divs)
        if (!(d == one))
            cand.push_back(d);
    for (auto const & d : cand) {
        bool maximal = true;
        for (auto const & e : cand)
            if (!(e == d) && contains(e, d))
                maximal = false;
        if (maximal)
            out.push_back(d);
    }
    return out;
}

static long norm_long(FractionalIdeal const & a)
{
    return a.norm.get_num().get_si();
}

std::vector<PrimeIdeal> primes_above(NumberField const & F, UnitGroupPlus const & U, long p, bool with_generators)
{
    std::vector<PrimeIdeal> out;
    int g = F.degree();
    if (g == 1) {
        out.push_back({p, p, F.from_int(p)});
        return out;
    }
    FieldElement omega;
    long t = 0, n = 0;
    if (quadratic_data(F, omega, t, n)) {
        std::vector<long> roots;
        if (p == 2) {
            for (long r = 0; r < 2; ++r)
                if (((r * r - t * r + n) % 2 + 2) % 2 == 0)
                    roots.push_back(r);
        } else {
            long D = t * t - 4 * n;
            long Dm = ((D % p) + p) % p;
            long inv2 = (p + 1) / 2;
            if (Dm == 0) {
                roots.push_back(mulmod(((t % p) + p) % p, inv2, p));
            } else if (powmod(Dm, (p - 1) / 2, p) == 1) {
                long s = sqrt_mod(Dm, p);
                roots.push_back(mulmod(((t + s) % p + p) % p, inv2, p));
                roots.push_back(mulmod(((t - s) % p + p) % p, inv2, p));
            }
        }
        if (roots.empty()) {
            out.push_back({p, p * p, F.from_int(p)});
            return out;
        }
        for (long r : roots) {
            PrimeIdeal P{p, p, std::nullopt};
            if (with_generators) {
                P.generator = quadratic_prime_generator(F, U, omega, t, n, p, r);
                if (!P.generator) {
                    auto I = ideal_from_generators(F, {F.from_int(p), F.sub(omega, F.from_int(r))});
                    P.generator = principal_generator(F, U, I);
                    if (!P.generator)
                        throw Error(ErrorCode::PrincipalitySearchFailed, "no generator for a prime ideal");
                }
            }
            out.push_back(P);
        }
        return out;
    }
    auto deg = residue_degrees(F.min_poly(), p);
    if (deg && !with_generators) {
        for (int d : *deg) {
            long N = 1;
            for (int j = 0; j < d; ++j)
                N = (N > (1L << 62) / p) ? (1L << 62) : N * p;
            out.push_back({p, N, std::nullopt});
        }
        return out;
    }
    for (auto const & I : prime_ideals_by_divisors(F, p)) {
        PrimeIdeal P{p, norm_long(I), std::nullopt};
        if (with_generators) {
            P.generator = principal_generator(F, U, I);
            if (!P.generator)
                throw Error(ErrorCode::PrincipalitySearchFailed, "no generator for a prime ideal");
        }
        out.push_back(P);
    }
    return out;
}

static unsigned sign_bits_of(NumberField const & F, FieldElement const & x)
{
    unsigned b = 0;
    for (int t = 0; t < F.degree(); ++t)
        if (F.sign(x, t) < 0)
            b |= 1u << t;
    return b;
}

static Z modulus_norm(RayClassGroup const & G)
{
    Z n = 1;
    for (std::size_t i = 0; i < G.H.rows; ++i)
        n *= G.H(i, i);
    return n;
}

/* exponent of psi per quotient index of A */
static std::vector<long> exponent_table(RayClassGroup const & G, HeckeCharacter const & psi)
{
    std::vector<long> ex(G.qcoords.size());
    for (std::size_t q = 0; q < G.qcoords.size(); ++q)
        ex[q] = character_exponent(G, psi, G.qcoords[q]);
    return ex;
}

EulerResult euler_product(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, double s,
                          long bound)
{
    if (!(s > 1))
        throw Error(ErrorCode::ConfigError, "Euler product needs s > 1");
    bool trivial = psi.is_trivial();
    Z Ng = modulus_norm(G);
    auto ex = exponent_table(G, psi);
    std::vector<cld> zeta(psi.m);
    for (long j = 0; j < psi.m; ++j)
        zeta[j] = std::polar(1.0L, kTau * j / psi.m);
    int g = F.degree();
    EulerResult R;
    R.bound = bound;
    cld logL = 0;
    for (long p : primes_up_to(bound)) {
        bool divides = mpz_divisible_ui_p(Ng.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
        auto Ps = primes_above(F, G.units, p, !trivial || divides);
        for (auto const & P : Ps) {
            if (P.norm > bound)
                continue;
            cld chi = 1;
            if (P.generator) {
                FieldElement const & pi = *P.generator;
                if (divides && contains(prime_ideal(F, P), G.modulus))
                    continue;
                if (!trivial) {
                    long res = residue_index(G, F, pi);
                    long q = G.coset.at((res << g) | sign_bits_of(F, pi));
                    chi = zeta[ex[q]];
                }
            }
            long double x = std::pow(static_cast<long double>(P.norm), -static_cast<long double>(s));
            if (trivial)
                logL -= std::log1p(-x);
            else
                logL -= std::log(cld(1) - chi * x);
            ++R.primes;
        }
    }
    long double B = static_cast<long double>(bound);
    long double lb = std::log(B);
    if (trivial) {
        logL += boost::math::expint(1, static_cast<long double>(s - 1) * lb);
        R.tail_corrected = true;
        R.tail = std::pow(B, 0.5L - static_cast<long double>(s)) * lb;
    } else {
        R.tail = std::pow(B, 1.0L - static_cast<long double>(s)) * lb;
    }
    cld v = std::exp(logL);
    R.value = to_big(v);
    return R;
}

/* ---------------- Gauss sums ---------------- */

static FieldElement ideal_generator(NumberField const & F, UnitGroupPlus const & U, FractionalIdeal const & a)
{
    auto g = principal_generator(F, U, a);
    if (!g)
        throw Error(ErrorCode::LiftSearchFailed, "ideal has no generator; totally positive lifts unavailable");
    return *g;
}

static long psi_a_with(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi,
                       FieldElement const & a0, unsigned a0bits, FieldElement const & alpha)
{
    /* alpha~ a^{-1} = (alpha~ / a0), congruent to alpha / a0 mod g, signs of a0 */
    FieldElement x = F.div(alpha, a0);
    long res = residue_index(G, F, x);
    if (!G.res_unit[res])
        return -1;
    return character_exponent(G, psi, class_of_pair(G, res, a0bits));
}

long psi_a_exponent(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi,
                    FractionalIdeal const & a, FieldElement const & alpha)
{
    FieldElement a0 = ideal_generator(F, G.units, a);
    return psi_a_with(F, G, psi, a0, sign_bits_of(F, a0), alpha);
}

CycValue gauss_sum(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi,
                   TorsionPoint const & xi)
{
    if (!(xi.modulus == G.modulus))
        throw Error(ErrorCode::ConfigError, "torsion point and character have different moduli");
    FractionalIdeal const & a = xi.ideal;
    FieldElement a0 = ideal_generator(F, G.units, a);
    unsigned bits = sign_bits_of(F, a0);
    long m = lcm_long(psi.m, xi.order());
    std::vector<long> count(m, 0);
    ZMatrix H = relative_hnf(a, multiply(F, G.modulus, a));
    auto B = ideal_basis(a);
    for (auto const & c : residue_coords(H)) {
        FieldElement alpha = F.zero();
        Q e = 0;
        for (std::size_t j = 0; j < c.size(); ++j) {
            alpha = F.add(alpha, F.scale(B[j], Q(c[j])));
            e += xi.r[j] * Q(c[j]);
        }
        long pe = psi_a_with(F, G, psi, a0, bits, alpha);
        if (pe < 0)
            continue;
        Q te = frac(Q(pe, psi.m) - e) * m;
        te.canonicalize();
        count[te.get_num().get_si()] += 1;
    }
    std::vector<Q> w(count.begin(), count.end());
    return CycValue::from_powers(m, std::move(w));
}

BigComplex root_number(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi)
{
    CycValue gs = gauss_sum(F, G, psi, xi_can(F, G.modulus));
    Real sq = sqrt(Real(modulus_norm(G).get_str()));
    BigComplex w = i_pow(-psi.u) * to_big(gs);
    return {w.re / sq, w.im / sq};
}

/* ---------------- Lerch over the torsor ---------------- */

std::vector<TorsionPoint> torsor_orbit(NumberField const & F, RayClassGroup const & G, TorsionPoint const & eta)
{
    std::vector<TorsionPoint> out;
    for (long e = 0; e < G.size(); ++e)
        out.push_back(act_ideal(F, eta, G.repr_ideals[e]));
    return out;
}

static CycValue psi_inv_value(RayClassGroup const & G, HeckeCharacter const & psi, long e,
                              std::vector<std::vector<long>> const & elems)
{
    return character_value(G, psi, elems[e]).conj();
}

CycValue hecke_exact(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi,
                     TorsionPoint const & eta, long k)
{
    if (!is_primitive(psi, G))
        throw Error(ErrorCode::NotPrimitive, "Hecke-Lerch identity needs a primitive character");
    auto elems = G.group.elements();
    auto orb = torsor_orbit(F, G, eta);
    CycValue sum(1);
    for (long e = 0; e < G.size(); ++e)
        sum += psi_inv_value(G, psi, e, elems) * lerch_nonpositive(F, G.units, orb[e], k);
    return sum * gauss_sum(F, G, psi, eta) * (Q(1) / Q(modulus_norm(G)));
}

TorsorLerch torsor_lerch_numeric(NumberField const & F, RayClassGroup const & G, TorsionPoint const & eta, double s,
                                 double tol)
{
    TorsorLerch T{eta, s, {}};
    for (auto const & xi : torsor_orbit(F, G, eta))
        T.values.push_back(lerch_numeric(F, G.units, xi, s, tol));
    return T;
}

static cld to_cld(CycValue const & v)
{
    return v.to_complex();
}

std::complex<long double> hecke_numeric(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi,
                                        TorsorLerch const & T)
{
    if (!is_primitive(psi, G))
        throw Error(ErrorCode::NotPrimitive, "Hecke-Lerch identity needs a primitive character");
    auto elems = G.group.elements();
    cld sum = 0;
    for (long e = 0; e < G.size(); ++e)
        sum += to_cld(psi_inv_value(G, psi, e, elems)) * T.values[e];
    cld gs = to_cld(gauss_sum(F, G, psi, T.eta));
    return sum * gs / static_cast<long double>(modulus_norm(G).get_d());
}

/* ---------------- functional equation ---------------- */

static bool gamma_pole(long s)
{
    return s <= 0 && s % 2 == 0;
}

BigComplex completed_L(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, long s,
                       BigComplex const & L)
{
    int g = F.degree();
    int u = psi.u;
    if ((g - u > 0 && gamma_pole(s)) || (u > 0 && gamma_pole(s + 1)))
        throw Error(ErrorCode::NotCritical, "Gamma factor has a pole");
    Real dN = Real(F.discriminant().get_str()) * Real(modulus_norm(G).get_str());
    Real f = pow(dN, Real(s) / 2);
    if (g - u > 0)
        f *= pow(gamma_R(Real(s)), g - u);
    if (u > 0)
        f *= pow(gamma_R(Real(s + 1)), u);
    return L * f;
}

static bool critical(int g, int u, long k)
{
    return (k % 2 == 0 && u == 0) || (k % 2 != 0 && u == g);
}

static BigComplex two_pi_i_pow(long n)
{
    Real tp = 2 * pi_real();
    return i_pow(n) * pow(tp, n);
}

Report functional_equation_check(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, long k,
                                 long prime_bound, long double tol)
{
    if (k < 2 || !critical(F.degree(), psi.u, k))
        throw Error(ErrorCode::NotCritical, "(k, u) is not a critical pair");
    if (!is_primitive(psi, G))
        throw Error(ErrorCode::NotPrimitive, "functional equation needs a primitive character");
    Report R;
    R.name = "functional_equation";
    CycValue Lx = hecke_exact(F, G, psi, xi_can(F, G.modulus), k - 1);
    R.lhs = completed_L(F, G, psi, 1 - k, to_big(Lx));
    HeckeCharacter pb = conjugate(G, psi);
    auto E = euler_product(F, G, pb, static_cast<double>(k), prime_bound);
    BigComplex W = root_number(F, G, psi);
    R.rhs = W * completed_L(F, G, pb, k, E.value);
    R.abs_err = to_double((R.lhs - R.rhs).abs());
    long double den = to_double(R.rhs.abs());
    R.rel_err = den > 0 ? R.abs_err / den : R.abs_err;
    R.ok = R.rel_err <= tol;
    R.lhs_source = "exact L(psi, 1-k) = " + Lx.to_string();
    R.rhs_source = "Euler product, bound " + std::to_string(prime_bound);
    R.info["root_number"] = to_string(W, 18);
    R.info["euler_tail"] = std::to_string(static_cast<double>(E.tail));
    return R;
}

BigComplex corollary_constant(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, long k)
{
    int g = F.degree();
    int u = psi.u;
    Real N = Real(modulus_norm(G).get_str());
    Real d = Real(F.discriminant().get_str());
    Real fact = 1;
    for (long j = 2; j < k; ++j)
        fact *= j;
    Real c = pow(N, 1 - k) * pow(fact, -g) * pow(d, Real(0.5) - Real(k));
    if (k % 2 == 0)
        return two_pi_i_pow(k * g - u) * (c * pow(Real(2), -g + 2 * u));
    return two_pi_i_pow((k - 1) * g + u) * (c * pow(Real(2), g - 2 * u));
}

BigComplex l_star(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & psi, long k,
                  long prime_bound)
{
    if (k < 2)
        throw Error(ErrorCode::ConfigError, "l_star needs k > 1");
    if (!is_primitive(psi, G))
        throw Error(ErrorCode::NotPrimitive, "l_star needs a primitive character");
    HeckeCharacter pb = conjugate(G, psi);
    auto E = euler_product(F, G, pb, static_cast<double>(k), prime_bound);
    BigComplex gs = to_big(gauss_sum(F, G, psi, xi_can(F, G.modulus)));
    return E.value * gs / corollary_constant(F, G, pb, k);
}

/* ---------------- imprimitive ---------------- */

ImprimitiveReport imprimitive_check(NumberField const & F, RayClassGroup const & G0, RayClassGroup const & G1,
                                    FractionalIdeal const & p, HeckeCharacter const & psi0, TorsionPoint const & xi1,
                                    long k, double s_real, double tol)
{
    if (!(multiply(F, p, G0.modulus) == G1.modulus))
        throw Error(ErrorCode::ConfigError, "modulus g1 must equal p g0");
    if (!(xi1.modulus == G1.modulus))
        throw Error(ErrorCode::ConfigError, "torsion point is not on g1");
    HeckeCharacter psi1 = pullback(G1, G0, F, psi0);
    TorsionPoint t = act_ideal(F, xi1, p);
    TorsionPoint xi0 = make_point(F, t.ideal, G0.modulus, t.r);
    bool p_divides = contains(p, G0.modulus);
    long Np = p.norm.get_num().get_si();
    auto e0 = G0.group.elements();
    auto e1 = G1.group.elements();
    auto o0 = torsor_orbit(F, G0, xi0);
    auto o1 = torsor_orbit(F, G1, xi1);
    ImprimitiveReport R;
    if (k >= 0) {
        R.exact = true;
        /* N p^{s-1} with s = -k */
        Q np = 1;
        for (long j = 0; j < k + 1; ++j)
            np /= Np;
        CycValue l(1), r(1);
        for (long e = 0; e < G1.size(); ++e)
            l += psi_inv_value(G1, psi1, e, e1) * lerch_nonpositive(F, G1.units, o1[e], k);
        for (long e = 0; e < G0.size(); ++e)
            r += psi_inv_value(G0, psi0, e, e0) * lerch_nonpositive(F, G0.units, o0[e], k);
        CycValue C = CycValue::rational(Q(1));
        if (!p_divides)
            C = C - character_value(G0, psi0, class_of_ideal(G0, F, p)).conj() * np;
        R.lhs_exact = l * np;
        R.rhs_exact = r * C;
        R.lhs = R.lhs_exact.to_complex();
        R.rhs = R.rhs_exact.to_complex();
        R.abs_err = std::abs(R.lhs - R.rhs);
        R.ok = R.lhs_exact == R.rhs_exact;
        return R;
    }
    long double np = std::pow(static_cast<long double>(Np), static_cast<long double>(s_real - 1));
    cld l = 0, r = 0;
    for (long e = 0; e < G1.size(); ++e)
        l += to_cld(psi_inv_value(G1, psi1, e, e1)) * lerch_numeric(F, G1.units, o1[e], s_real, tol * 1e-2);
    for (long e = 0; e < G0.size(); ++e)
        r += to_cld(psi_inv_value(G0, psi0, e, e0)) * lerch_numeric(F, G0.units, o0[e], s_real, tol * 1e-2);
    cld C = 1;
    if (!p_divides)
        C -= to_cld(character_value(G0, psi0, class_of_ideal(G0, F, p)).conj()) * np;
    R.lhs = l * np;
    R.rhs = r * C;
    R.abs_err = std::abs(R.lhs - R.rhs);
    R.ok = R.abs_err <= tol * std::max(1.0L, std::abs(R.rhs));
    return R;
}

/* ---------------- Lerch vectors ---------------- */

std::complex<long double> l_infinity(std::complex<long double> L, int g, long n)
{
    if (((n - 1) * g) % 2 == 0)
        return {L.real(), 0};
    return {0, L.imag()};
}

static cld two_pi_i_pow_ld(long n)
{
    cld i_n[4] = {cld(1, 0), cld(0, 1), cld(-1, 0), cld(0, -1)};
    return i_n[((n % 4) + 4) % 4] * std::pow(kTau, static_cast<long double>(n));
}

std::vector<LerEntry> ler_vector(NumberField const & F, TorsorTable const & T, long n, double tol)
{
    if (n < 2)
        throw Error(ErrorCode::ConfigError, "ler-vector needs n >= 2");
    UnitGroupPlus const & U = T.narrow.units;
    long double sd = std::sqrt(static_cast<long double>(F.discriminant().get_d()));
    cld den = two_pi_i_pow_ld((n - 1) * F.degree());
    std::vector<LerEntry> out;
    std::vector<std::pair<FractionalIdeal, PartialSums>> cache;
    for (auto const & eta : T.points) {
        PartialSums const * P = nullptr;
        for (auto const & c : cache)
            if (c.first == eta.ideal)
                P = &c.second;
        if (!P) {
            auto D = decompose(F, eta.ideal, U);
            cache.emplace_back(eta.ideal, lerch_partial_sums(F, U, D, T.modulus, static_cast<double>(n),
                                                             truncation_for(static_cast<double>(n), tol)));
            P = &cache.back().second;
        }
        LerEntry e;
        e.eta = eta;
        e.lerch = lerch_numeric(F, U, eta, *P);
        e.scaled = sd * l_infinity(e.lerch, F.degree(), n) / den;
        e.error = static_cast<long double>(tol) * sd / std::abs(den);
        out.push_back(e);
    }
    return out;
}

ArtinReport artin_ratio_check(NumberField const & F, RayClassGroup const & G, HeckeCharacter const & chi,
                              TorsionPoint const & eta0, long k, long prime_bound)
{
    int g = F.degree();
    if (!is_totally_noncritical(chi, g, k))
        throw Error(ErrorCode::NotTotallyNoncritical, "character is not totally noncritical for k");
    ArtinReport R;
    R.m = chi.m;
    auto T = torsor_lerch_numeric(F, G, eta0, static_cast<double>(k), 1e-13);
    auto elems = G.group.elements();
    /* gamma = Art(b) sends eta0 to eta0^{b^{-1}} */
    cld lhs = 0;
    for (long e = 0; e < G.size(); ++e)
        lhs += to_cld(psi_inv_value(G, chi, e, elems)) * T.values[e];
    R.lhs = lhs;
    R.lstar = l_star(F, G, conjugate(G, chi), k, prime_bound);
    cld ls(static_cast<long double>(to_double(R.lstar.re)), static_cast<long double>(to_double(R.lstar.im)));
    long double sd = std::sqrt(static_cast<long double>(F.discriminant().get_d()));
    R.ratio = lhs / (sd * two_pi_i_pow_ld((k - 1) * g) * ls);
    R.recognized = recognize_cyclotomic(R.ratio, chi.m, 1e9L);
    return R;
}

} // namespace shintani
