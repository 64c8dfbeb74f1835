#include "shintani/values.hpp"

#include "shintani/errors.hpp"

#include <cmath>
#include <functional>
#include <mutex>

namespace shintani {

/* ---------------- polynomials ---------------- */

Q MPoly::operator()(std::vector<Q> const & x) const
{
    Q s = 0;
    for (auto const & [e, c] : terms) {
        Q t = c;
        for (int i = 0; i < nvars; ++i)
            for (int j = 0; j < e[i]; ++j)
                t *= x[i];
        s += t;
    }
    return s;
}

MPoly MPoly::operator*(MPoly const & o) const
{
    MPoly r;
    r.nvars = nvars;
    for (auto const & [e1, c1] : terms)
        for (auto const & [e2, c2] : o.terms) {
            std::vector<int> e(nvars);
            for (int i = 0; i < nvars; ++i)
                e[i] = e1[i] + e2[i];
            r.terms[e] += c1 * c2;
        }
    for (auto it = r.terms.begin(); it != r.terms.end();)
        it = sgn(it->second) == 0 ? r.terms.erase(it) : std::next(it);
    return r;
}

int MPoly::degree() const
{
    int d = 0;
    for (auto const & [e, c] : terms) {
        int s = 0;
        for (int x : e)
            s += x;
        d = std::max(d, s);
    }
    return d;
}

MPoly mpoly_pow(MPoly const & p, long k)
{
    MPoly r;
    r.nvars = p.nvars;
    r.terms[std::vector<int>(p.nvars, 0)] = 1;
    for (long i = 0; i < k; ++i)
        r = r * p;
    return r;
}

MPoly norm_form(NumberField const & F, std::vector<FieldElement> const & gens)
{
    /* multilinear expansion of det(sum_i X_i M_i) over row choices */
    int g = F.degree();
    if (static_cast<int>(gens.size()) != g)
        throw Error(ErrorCode::DegenerateCone, "norm form needs g elements");
    std::vector<QMatrix> M;
    for (auto const & a : gens)
        M.push_back(F.mult_matrix(a));
    MPoly P;
    P.nvars = g;
    std::vector<int> f(g, 0);
    for (;;) {
        QMatrix A(g, g);
        std::vector<int> e(g, 0);
        for (int row = 0; row < g; ++row) {
            for (int c = 0; c < g; ++c)
                A(row, c) = M[f[row]](row, c);
            e[f[row]] += 1;
        }
        Q d = det(A);
        if (sgn(d) != 0)
            P.terms[e] += d;
        int i = g - 1;
        while (i >= 0 && ++f[i] == g)
            f[i--] = 0;
        if (i < 0)
            break;
    }
    for (auto it = P.terms.begin(); it != P.terms.end();)
        it = sgn(it->second) == 0 ? P.terms.erase(it) : std::next(it);
    if (P.terms.empty())
        throw Error(ErrorCode::DegenerateCone, "norm form vanishes");
    return P;
}

/* ---------------- Bernoulli ---------------- */

static std::mutex bern_mutex;
static std::vector<Q> bern_cache{Q(1)};

static Z binomial(long n, long k)
{
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Q bernoulli(long n)
{
    std::lock_guard<std::mutex> lk(bern_mutex);
    while (static_cast<long>(bern_cache.size()) <= n) {
        long m = static_cast<long>(bern_cache.size());
        /* sum_{j<=m} binom(m+1, j) B_j = 0 */
        Q s = 0;
        for (long j = 0; j < m; ++j)
            s += Q(binomial(m + 1, j)) * bern_cache[j];
        bern_cache.push_back(-s / Q(m + 1));
    }
    return bern_cache[n];
}

Q bernoulli_poly(long n, Q const & x)
{
    Q s = 0, xp = 1;
    for (long j = 0; j <= n; ++j) {
        /* term binom(n, j) B_{n-j} x^j */
        s += Q(binomial(n, j)) * bernoulli(n - j) * xp;
        xp *= x;
    }
    return s;
}

static Q factorial(long n)
{
    Z r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Q(r);
}

/* 1 / (1 - z e^w), z != 1, up to w^N */
static std::vector<CycValue> inverse_denominator(CycValue const & z, int N)
{
    long m = z.conductor();
    CycValue one = CycValue::rational(Q(1), m);
    CycValue c = z * (one - z).inverse();
    std::vector<CycValue> b(N + 1);
    b[0] = (one - z).inverse();
    std::vector<Q> invf(N + 1);
    for (int j = 0; j <= N; ++j)
        invf[j] = Q(1) / factorial(j);
    for (int n = 1; n <= N; ++n) {
        CycValue s(m);
        for (int j = 1; j <= n; ++j)
            s += b[n - j] * invf[j];
        b[n] = c * s;
    }
    return b;
}

static std::vector<CycValue> factor_from_denominator(std::vector<CycValue> const & b, Q const & x, long m)
{
    int N = static_cast<int>(b.size()) - 1;
    std::vector<Q> ex(N + 1);
    Q xp = 1;
    for (int j = 0; j <= N; ++j) {
        ex[j] = xp / factorial(j);
        xp *= x;
    }
    std::vector<CycValue> a(N + 2, CycValue(m));
    for (int n = 0; n <= N; ++n) {
        CycValue s(m);
        for (int j = 0; j <= n; ++j)
            if (sgn(ex[j]) != 0)
                s += b[n - j] * ex[j];
        a[n + 1] = s;
    }
    return a;
}

static std::vector<CycValue> pole_factor(Q const & x, int N, long m)
{
    std::vector<CycValue> a(N + 2, CycValue(m));
    for (int n = -1; n <= N; ++n)
        a[n + 1] = CycValue::rational(-bernoulli_poly(n + 1, x) / factorial(n + 1), m);
    return a;
}

std::vector<CycValue> lerch_factor(CycValue const & z, Q const & x, int N)
{
    long m = z.conductor();
    if (z == CycValue::rational(Q(1), m))
        return pole_factor(x, N, m);
    return factor_from_denominator(inverse_denominator(z, N), x, m);
}

/* ---------------- cone values ---------------- */

/* all m in Z^g with m_i >= lo_i and sum m = total */
static void for_each_index(std::vector<int> const & lo, int total, std::function<void(std::vector<int> const &)> f)
{
    int g = static_cast<int>(lo.size());
    std::vector<int> m(g);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == g - 1) {
            if (rest >= lo[i]) {
                m[i] = rest;
                f(m);
            }
            return;
        }
        int minrest = 0;
        for (int j = i + 1; j < g; ++j)
            minrest += lo[j];
        for (int v = lo[i]; rest - v >= minrest; ++v) {
            m[i] = v;
            rec(i + 1, rest - v);
        }
    };
    rec(0, total);
}

/* truncated series in g-1 variables, each of degree <= k, over F */
struct TSeries {
    int nv;
    int k;
    std::vector<FieldElement> c;
};

static long ts_index(std::vector<int> const & e, int k)
{
    long idx = 0;
    for (int x : e)
        idx = idx * (k + 1) + x;
    return idx;
}

static TSeries ts_mul(NumberField const & F, TSeries const & a, TSeries const & b)
{
    TSeries r{a.nv, a.k, std::vector<FieldElement>(a.c.size(), F.zero())};
    long n = static_cast<long>(a.c.size());
    std::vector<int> ea(a.nv), eb(a.nv);
    for (long i = 0; i < n; ++i) {
        if (a.c[i].is_zero())
            continue;
        long t = i;
        for (int v = a.nv - 1; v >= 0; --v) {
            ea[v] = static_cast<int>(t % (a.k + 1));
            t /= a.k + 1;
        }
        for (long j = 0; j < n; ++j) {
            if (b.c[j].is_zero())
                continue;
            long s = j;
            bool ok = true;
            for (int v = a.nv - 1; v >= 0; --v) {
                eb[v] = static_cast<int>(s % (a.k + 1)) + ea[v];
                s /= a.k + 1;
                ok &= eb[v] <= a.k;
            }
            if (ok) {
                long idx = ts_index(eb, a.k);
                r.c[idx] = F.add(r.c[idx], F.mul(a.c[i], b.c[j]));
            }
        }
    }
    return r;
}

/* vertex weights C_m = Tr([u^{(k..k)}] prod_i (alpha_i + sum_r s_r(alpha_i) u_r)^{m_i}) */
static std::map<std::vector<int>, Q> vertex_weights(NumberField const & F, std::vector<FieldElement> const & gens,
                                                    long k, std::vector<int> const & lo)
{
    int g = F.degree();
    int nv = g - 1;
    int total = static_cast<int>(g * k);
    int emax = total + g;
    std::size_t sz = 1;
    for (int v = 0; v < nv; ++v)
        sz *= static_cast<std::size_t>(k + 1);
    /* S[i][e + 1] = (1 + sum_r rho_{ir} u_r)^e */
    std::vector<std::vector<TSeries>> S(g);
    std::vector<std::vector<FieldElement>> apow(g);
    for (int i = 0; i < g; ++i) {
        TSeries one{nv, static_cast<int>(k), std::vector<FieldElement>(sz, F.zero())};
        one.c[0] = F.one();
        TSeries L = one;
        FieldElement ainv = F.inv(gens[i]);
        for (int r = 1; r < g; ++r) {
            std::vector<int> e(nv, 0);
            e[r - 1] = 1;
            if (k >= 1)
                L.c[ts_index(e, static_cast<int>(k))] = F.mul(F.apply_automorphism(r, gens[i]), ainv);
        }
        /* inverse: sum_j (-(L-1))^j */
        TSeries Lm = L;
        Lm.c[0] = F.zero();
        TSeries inv = one, pw = one;
        for (long j = 1; j <= k * nv; ++j) {
            pw = ts_mul(F, pw, Lm);
            for (std::size_t t = 0; t < sz; ++t)
                inv.c[t] = (j % 2) ? F.sub(inv.c[t], pw.c[t]) : F.add(inv.c[t], pw.c[t]);
        }
        S[i].push_back(inv);
        S[i].push_back(one);
        for (int e = 1; e <= emax; ++e)
            S[i].push_back(ts_mul(F, S[i].back(), L));
        for (int e = -1; e <= emax; ++e)
            apow[i].push_back(F.pow(gens[i], e));
    }
    std::vector<int> target(nv, static_cast<int>(k));
    long tidx = ts_index(target, static_cast<int>(k));
    std::map<std::vector<int>, Q> W;
    for_each_index(lo, total, [&](std::vector<int> const & m) {
        TSeries P = S[0][m[0] + 1];
        for (int i = 1; i < g; ++i)
            P = ts_mul(F, P, S[i][m[i] + 1]);
        FieldElement c = P.c[tidx];
        if (c.is_zero())
            return;
        for (int i = 0; i < g; ++i)
            c = F.mul(c, apow[i][m[i] + 1]);
        Q t = F.trace(c);
        if (sgn(t) != 0)
            W[m] = t;
    });
    return W;
}

CycValue cone_zeta_value(NumberField const & F, FractionalIdeal const & a, Cone const & s, TorsionPoint const & xi,
                         long k, ZetaMethod method)
{
    int g = F.degree();
    long m = xi.order();
    std::vector<CycValue> z;
    bool poles = false;
    std::vector<int> lo(g, 0);
    for (int i = 0; i < g; ++i) {
        z.push_back(point_value(xi, s.gens[i], m));
        if (z.back() == CycValue::rational(Q(1), m)) {
            poles = true;
            lo[i] = -1;
        }
    }
    if (method == ZetaMethod::Auto)
        method = poles ? ZetaMethod::Vertex : ZetaMethod::NormForm;
    if (method == ZetaMethod::NormForm && poles)
        throw Error(ErrorCode::Unsupported, "norm-form evaluation needs xi(alpha_i) != 1");
    if (method == ZetaMethod::Vertex && g > 1 && !F.is_galois())
        throw Error(ErrorCode::NeedGaloisClosure, "vertex evaluation needs a Galois field");
    int total = static_cast<int>(g * k);
    int N = total + g;

    std::map<std::vector<int>, Q> W;
    if (method == ZetaMethod::NormForm) {
        MPoly P = mpoly_pow(norm_form(F, s.gens), k);
        for (auto const & [e, c] : P.terms) {
            Q w = c;
            for (int x : e)
                w *= factorial(x);
            W[e] = w;
        }
    } else {
        Q pre = Q(1) / Q(g);
        for (int i = 0; i < g; ++i)
            pre *= factorial(k);
        for (auto const & [e, c] : vertex_weights(F, s.gens, k, lo))
            W[e] = pre * c;
    }
    for (auto const & [e, c] : W)
        for (int x : e)
            if (x > N)
                throw Error(ErrorCode::TruncationInsufficient, "operator exceeds the series truncation");

    std::vector<std::vector<CycValue>> denom(g);
    for (int i = 0; i < g; ++i)
        if (lo[i] == 0)
            denom[i] = inverse_denominator(z[i], N);

    CycValue total_value(m);
    for (auto const & p : parallelepiped_points(F, a, s, true)) {
        std::vector<std::vector<CycValue>> A(g);
        for (int i = 0; i < g; ++i)
            A[i] = lo[i] < 0 ? pole_factor(p.x[i], N, m) : factor_from_denominator(denom[i], p.x[i], m);
        CycValue inner(m);
        for (auto const & [e, c] : W) {
            CycValue t = A[0][e[0] + 1];
            for (int i = 1; i < g; ++i) {
                if (A[i][e[i] + 1].is_zero()) {
                    t = CycValue(m);
                    break;
                }
                t *= A[i][e[i] + 1];
            }
            if (!t.is_zero())
                inner += t * c;
        }
        total_value += inner * point_value(xi, p.beta, m);
    }
    Q scale = Q(s.sign);
    Q nq = a.norm;
    for (long j = 0; j < k; ++j)
        scale /= nq;
    return total_value * scale;
}

CycValue lerch_nonpositive(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi, long k,
                           ShintaniDecomposition const & D, ZetaMethod method)
{
    if (!(D.ideal == xi.ideal))
        throw Error(ErrorCode::ConfigError, "decomposition is for a different ideal");
    auto O = delta_orbit(F, U, xi);
    long m = xi.order();
    CycValue v(m);
    for (auto const & p : O.points)
        for (auto const & s : D.cones)
            v += cone_zeta_value(F, D.ideal, s, p, k, method);
    return v;
}

CycValue lerch_nonpositive(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi, long k)
{
    return lerch_nonpositive(F, U, xi, k, decompose(F, xi.ideal, U));
}

/* ---------------- cocycle ---------------- */

static Q qpow(Q const & b, long e)
{
    Q r = 1, x = e < 0 ? Q(1) / b : b;
    for (long n = std::labs(e); n > 0; n >>= 1) {
        if (n & 1)
            r *= x;
        x *= x;
    }
    return r;
}

static Q monomial(std::vector<Z> const & c, std::vector<Q> const & t)
{
    Q r = 1;
    for (std::size_t j = 0; j < c.size(); ++j)
        r *= qpow(t[j], c[j].get_si());
    return r;
}

Q cone_function_value(NumberField const & F, FractionalIdeal const & a, std::vector<FieldElement> const & gens,
                      std::vector<Q> const & t)
{
    int g = F.degree();
    ZMatrix C(g, g);
    for (int j = 0; j < g; ++j) {
        auto c = ideal_coords_integral(a, gens[j]);
        if (!c)
            throw Error(ErrorCode::NotInIdeal, "cone generator outside the ideal");
        for (int i = 0; i < g; ++i)
            C(i, j) = (*c)[i];
    }
    if (det(C) == 0)
        return 0; /* degenerate tuple */
    Cone s = make_cone(F, a, gens);
    Q den = 1;
    for (int j = 0; j < g; ++j) {
        Q d = 1 - monomial(C.column(j), t);
        if (sgn(d) == 0)
            throw Error(ErrorCode::PoleAtTestPoint, "test point is a pole");
        den *= d;
    }
    Q num = 0;
    for (auto const & p : parallelepiped_points(F, a, s, true))
        num += monomial(*ideal_coords_integral(a, p.beta), t);
    return Q(s.sign) * num / den;
}

bool cocycle_check(NumberField const & F, FractionalIdeal const & a, std::vector<FieldElement> const & triple,
                   std::vector<std::vector<Q>> const & points)
{
    if (F.degree() != 2 || triple.size() != 3)
        return true;
    for (auto const & t : points) {
        Q v = cone_function_value(F, a, {triple[1], triple[2]}, t) - cone_function_value(F, a, {triple[0], triple[2]}, t) +
              cone_function_value(F, a, {triple[0], triple[1]}, t);
        if (sgn(v) != 0)
            return false;
    }
    return true;
}

/* ---------------- numeric Lerch series ---------------- */

long double regulator(NumberField const & F, UnitGroupPlus const & U)
{
    int g = F.degree();
    int r = g - 1;
    if (r == 0)
        return 1;
    std::vector<long double> M(r * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            M[i * r + j] = std::log(std::fabs(F.embed_ld(U.generators.at(j), i)));
    /* small dense determinant */
    long double d = 1;
    for (int c = 0; c < r; ++c) {
        int p = c;
        for (int i = c; i < r; ++i)
            if (std::fabs(M[i * r + c]) > std::fabs(M[p * r + c]))
                p = i;
        if (p != c) {
            for (int j = 0; j < r; ++j)
                std::swap(M[p * r + j], M[c * r + j]);
            d = -d;
        }
        d *= M[c * r + c];
        for (int i = c + 1; i < r; ++i) {
            long double f = M[i * r + c] / M[c * r + c];
            for (int j = c; j < r; ++j)
                M[i * r + j] -= f * M[c * r + j];
        }
    }
    return std::fabs(d);
}

long double truncation_for(double s, double tol)
{
    long double X = std::pow(static_cast<long double>(tol), -1.0L / (s - 0.5L));
    return std::clamp(X, 1000.0L, 4.0e7L);
}

static long residue_index_long(ZMatrix const & H, std::vector<long> v)
{
    std::size_t g = H.rows;
    for (std::size_t i = g; i-- > 0;) {
        long d = H(i, i).get_si();
        long q = v[i] / d;
        if (v[i] - q * d < 0)
            --q;
        if (q != 0)
            for (std::size_t k = 0; k <= i; ++k)
                v[k] -= q * H(k, i).get_si();
    }
    long idx = 0;
    for (std::size_t i = 0; i < g; ++i)
        idx = idx * H(i, i).get_si() + v[i];
    return idx;
}

long residue_of(PartialSums const & P, FractionalIdeal const & a, FieldElement const & y)
{
    auto c = ideal_coords_integral(a, y);
    if (!c)
        throw Error(ErrorCode::NotInIdeal, "element outside the ideal");
    std::vector<long> v;
    for (auto const & x : *c)
        v.push_back(x.get_si());
    return residue_index_long(P.H, v);
}

PartialSums lerch_partial_sums(NumberField const & F, UnitGroupPlus const & U, ShintaniDecomposition const & D,
                               FractionalIdeal const & gm, double s, long double X)
{
    int g = F.degree();
    FractionalIdeal const & a = D.ideal;
    PartialSums P;
    P.ideal = a;
    P.modulus = gm;
    P.H = relative_hnf(a, multiply(F, gm, a));
    long nres = 1;
    for (int i = 0; i < g; ++i)
        nres *= P.H(i, i).get_si();
    P.sums.assign(nres, 0.0L);
    P.X = X;
    long double Nal = static_cast<long double>(a.norm.get_d());
    long double T = X * Nal * (1 + 1e-12L);
    std::vector<long double> comp(nres, 0.0L); /* Kahan compensation */
    for (auto const & c : D.cones) {
        std::vector<std::vector<long double>> ge(g, std::vector<long double>(g));
        for (int i = 0; i < g; ++i)
            for (int t = 0; t < g; ++t)
                ge[i][t] = F.embed_ld(c.gens[i], t);
        std::vector<std::vector<long>> gc(g);
        for (int i = 0; i < g; ++i) {
            auto ci = *ideal_coords_integral(a, c.gens[i]);
            for (auto const & x : ci)
                gc[i].push_back(x.get_si());
        }
        for (auto const & p : parallelepiped_points(F, a, c, true)) {
            std::vector<long double> y(g);
            for (int t = 0; t < g; ++t)
                y[t] = F.embed_ld(p.beta, t);
            std::vector<long> v;
            auto cb = *ideal_coords_integral(a, p.beta);
            for (auto const & x : cb)
                v.push_back(x.get_si());
            std::function<void(int)> rec = [&](int i) {
                if (i == g) {
                    long double N = 1;
                    for (int t = 0; t < g; ++t)
                        N *= y[t];
                    long r = residue_index_long(P.H, v);
                    long double term = std::pow(N / Nal, static_cast<long double>(-s));
                    long double yk = term - comp[r];
                    long double tk = P.sums[r] + yk;
                    comp[r] = (tk - P.sums[r]) - yk;
                    P.sums[r] = tk;
                    ++P.points;
                    return;
                }
                std::vector<long double> y0 = y;
                std::vector<long> v0 = v;
                for (;;) {
                    long double N = 1;
                    for (int t = 0; t < g; ++t)
                        N *= y[t];
                    if (N > T || N <= 0)
                        break;
                    rec(i + 1);
                    for (int t = 0; t < g; ++t)
                        y[t] += ge[i][t];
                    for (int t = 0; t < g; ++t)
                        v[t] += gc[i][t];
                }
                y = y0;
                v = v0;
            };
            rec(0);
        }
    }
    long double Ng = 1;
    for (int i = 0; i < g; ++i)
        Ng *= static_cast<long double>(P.H(i, i).get_d());
    long double sd = std::sqrt(std::fabs(static_cast<long double>(F.discriminant().get_d())));
    P.tail = regulator(F, U) / (sd * Ng) * std::pow(X, static_cast<long double>(1 - s)) / static_cast<long double>(s - 1);
    return P;
}

std::complex<long double> lerch_numeric(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi,
                                        PartialSums const & P)
{
    if (!(P.ideal == xi.ideal))
        throw Error(ErrorCode::ConfigError, "partial sums are for a different ideal");
    auto O = delta_orbit(F, U, xi);
    auto res = residue_coords(P.H);
    long double const tau = 6.283185307179586476925286766559L;
    std::complex<long double> v = 0;
    for (std::size_t r = 0; r < res.size(); ++r) {
        std::complex<long double> f = 0;
        for (auto const & p : O.points) {
            Q e = 0;
            for (std::size_t i = 0; i < res[r].size(); ++i)
                e += p.r[i] * Q(res[r][i]);
            e = frac(e);
            long double th = tau * static_cast<long double>(e.get_d());
            f += std::complex<long double>(std::cos(th), std::sin(th));
        }
        v += f * (P.sums[r] + P.tail);
    }
    return v;
}

std::complex<long double> lerch_numeric(NumberField const & F, UnitGroupPlus const & U, TorsionPoint const & xi,
                                        double s, double tol)
{
    auto D = decompose(F, xi.ideal, U);
    auto P = lerch_partial_sums(F, U, D, xi.modulus, s, truncation_for(s, tol));
    return lerch_numeric(F, U, xi, P);
}

} // namespace shintani
