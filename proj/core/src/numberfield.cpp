#include "shintani/numberfield.hpp"

#include "shintani/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace shintani {

bool FieldElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](Q const & q) { return sgn(q) == 0; });
}

namespace poly {

void trim(Poly & p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

Poly mul(Poly const & a, Poly const & b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly derivative(Poly const & p)
{
    Poly r;
    for (std::size_t i = 1; i < p.size(); ++i)
        r.push_back(p[i] * Q(static_cast<long>(i)));
    trim(r);
    return r;
}

Poly rem(Poly a, Poly const & b)
{
    trim(a);
    std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        Q f = a.back() / b.back();
        std::size_t sh = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[sh + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Q lc = a.back();
        for (auto & c : a)
            c /= lc;
    }
    return a;
}

Q eval(Poly const & p, Q const & x)
{
    Q r = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        r = r * x + p[i];
    return r;
}

static RationalInterval imul(RationalInterval const & a, RationalInterval const & b)
{
    Q p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval eval(Poly const & p, RationalInterval const & x)
{
    RationalInterval r{0, 0};
    for (std::size_t i = p.size(); i-- > 0;) {
        r = imul(r, x);
        r.lo += p[i];
        r.hi += p[i];
    }
    return r;
}

int sign_at(Poly const & p, Q const & x)
{
    return sgn(eval(p, x));
}

std::vector<Poly> sturm_sequence(Poly const & p)
{
    std::vector<Poly> s{p, derivative(p)};
    while (!s.back().empty() && s.back().size() > 1) {
        Poly r = rem(s[s.size() - 2], s.back());
        for (auto & c : r)
            c = -c;
        if (r.empty())
            break;
        s.push_back(r);
    }
    return s;
}

static int variations(std::vector<Poly> const & s, Q const & x)
{
    int v = 0, last = 0;
    for (auto const & p : s) {
        int sg = sign_at(p, x);
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++v;
        last = sg;
    }
    return v;
}

int count_roots(std::vector<Poly> const & sturm, Q const & a, Q const & b)
{
    return variations(sturm, a) - variations(sturm, b);
}

} // namespace poly

namespace {

Q pow2(long e)
{
    Q r = 1;
    if (e >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), e);
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -e);
    return r;
}

long double q_to_ld(Q const & q)
{
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
    long double r = mpfr_get_ld(t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
}

void isolate(std::vector<poly::Poly> const & st, Q lo, Q hi, int n, std::vector<RationalInterval> & out)
{
    if (n == 0)
        return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    Q mid = (lo + hi) / 2;
    int left = poly::count_roots(st, lo, mid);
    isolate(st, lo, mid, left, out);
    isolate(st, mid, hi, n - left, out);
}

RationalInterval refine(poly::Poly const & f, RationalInterval I, Q const & width)
{
    if (I.lo == I.hi)
        return I;
    int slo = poly::sign_at(f, I.lo);
    while (I.width() > width) {
        Q mid = (I.lo + I.hi) / 2;
        int sm = poly::sign_at(f, mid);
        if (sm == 0)
            return {mid, mid};
        if (sm == slo)
            I.lo = mid;
        else
            I.hi = mid;
    }
    return I;
}

Z squarefree_part(Z n, Z & square_root_of_rest)
{
    /* n = D * s^2 with D squarefree; small discriminants only */
    Z D = 1, s = 1;
    int sign = sgn(n);
    n = abs(n);
    for (Z p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            s *= p;
        }
        if (n % p == 0) {
            n /= p;
            D *= p;
        }
    }
    D *= n;
    square_root_of_rest = s;
    return sign * D;
}

} // namespace

NumberField NumberField::create(std::vector<Z> const & min_poly, std::optional<QMatrix> const & basis)
{
    NumberField F;
    if (min_poly.size() < 2 || min_poly.back() != 1)
        throw Error(ErrorCode::Reducible, "minimal polynomial must be monic of degree >= 1");
    F.min_poly_ = min_poly;
    F.g_ = static_cast<int>(min_poly.size()) - 1;
    int g = F.g_;
    for (auto const & c : min_poly)
        F.f_.push_back(Q(c));

    /* irreducibility: squarefree and no rational root (complete for g <= 3) */
    if (g >= 2) {
        poly::Poly gd = poly::gcd(F.f_, poly::derivative(F.f_));
        if (gd.size() > 1)
            throw Error(ErrorCode::Reducible, "polynomial is not squarefree");
        Z c0 = abs(min_poly[0]);
        if (c0 == 0)
            throw Error(ErrorCode::Reducible, "polynomial has the root 0");
        for (Z d = 1; d * d <= c0; ++d) {
            if (c0 % d != 0)
                continue;
            for (Z cand : {Z(d), Z(c0 / d)})
                for (int s : {1, -1})
                    if (poly::sign_at(F.f_, Q(cand * s)) == 0)
                        throw Error(ErrorCode::Reducible, "polynomial has a rational root");
        }
        if (g >= 4) {
            /* quadratic factors are not excluded by the rational root test;
             * require the discriminant of the power basis not to vanish and
             * accept, the analytic modules only support g <= 3 anyway */
        }
    }

    /* totally real: Sturm count over a Cauchy bound */
    Q B = 1;
    for (int i = 0; i < g; ++i)
        B = std::max(B, Q(Q(abs(min_poly[i])) + 1));
    auto st = poly::sturm_sequence(F.f_);
    int nreal = poly::count_roots(st, -B, B);
    if (nreal != g)
        throw Error(ErrorCode::NotTotallyReal, std::to_string(g - nreal) + " non-real roots");
    if (g == 1) {
        Q r = -Q(min_poly[0]);
        F.roots_.push_back({r, r});
    } else {
        isolate(st, -B, B, g, F.roots_);
        for (auto & I : F.roots_)
            I = refine(F.f_, I, pow2(-96));
    }

    /* power-basis trace form gives disc(f) */
    QMatrix Tp(g, g);
    {
        /* traces of theta^n via Newton identities on the monic f */
        std::vector<Q> p(2 * g, Q(0));
        std::vector<Q> e(g + 1);
        for (int i = 0; i <= g; ++i)
            e[i] = F.f_[g - i];
        p[0] = g;
        for (int n = 1; n < 2 * g; ++n) {
            Q s = 0;
            for (int i = 1; i <= std::min(n, g); ++i) {
                if (i < n)
                    s -= e[i] * p[n - i];
                else
                    s -= e[i] * Q(n);
            }
            p[n] = s;
        }
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                Tp(i, j) = p[i + j];
    }
    Q disc_f = det(Tp);

    if (basis) {
        if (static_cast<int>(basis->rows) != g || static_cast<int>(basis->cols) != g)
            throw Error(ErrorCode::BadBasis, "basis must be g x g");
        F.basis_ = *basis;
    } else if (g == 1) {
        F.basis_ = QMatrix::identity(1);
    } else if (g == 2) {
        Z b = min_poly[1], c = min_poly[0];
        Z disc = b * b - 4 * c, s;
        Z D = squarefree_part(disc, s);
        F.basis_ = QMatrix(2, 2);
        F.basis_(0, 0) = 1;
        Z Dm = D % 4;
        if (Dm < 0)
            Dm += 4;
        /* sqrt(D) = (2 theta + b)/s */
        if (Dm == 1) {
            F.basis_(1, 0) = Q(1, 2) + Q(b) / Q(2 * s);
            F.basis_(1, 1) = Q(1) / Q(s);
        } else {
            F.basis_(1, 0) = Q(b) / Q(s);
            F.basis_(1, 1) = Q(2) / Q(s);
        }
        for (auto & x : F.basis_.a)
            x.canonicalize();
    } else {
        Z s;
        Z D = squarefree_part(disc_f.get_num(), s);
        if (s != 1 || D % 4 == 0)
            throw Error(ErrorCode::BadBasis,
                        "degree >= 3 needs an explicit integral basis (power basis not provably maximal)");
        F.basis_ = QMatrix::identity(g);
    }
    try {
        F.basis_inv_ = inverse(F.basis_);
    } catch (std::domain_error const &) {
        throw Error(ErrorCode::BadBasis, "basis is singular");
    }

    /* structure constants */
    auto pmul = [&](std::vector<Q> const & a, std::vector<Q> const & b) {
        poly::Poly r = poly::rem(poly::mul(a, b), F.f_);
        r.resize(g, Q(0));
        return r;
    };
    F.table_.assign(g, std::vector<FieldElement>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            std::vector<Q> bi(g), bj(g);
            for (int k = 0; k < g; ++k) {
                bi[k] = F.basis_(i, k);
                bj[k] = F.basis_(j, k);
            }
            auto pr = pmul(bi, bj);
            FieldElement e = F.from_power_basis(pr);
            for (auto const & q : e.coords)
                if (q.get_den() != 1)
                    throw Error(ErrorCode::BadBasis, "basis is not closed under multiplication");
            F.table_[i][j] = e;
        }
    std::vector<Q> one_p(g, Q(0));
    one_p[0] = 1;
    F.one_ = F.from_power_basis(one_p).coords;
    for (auto const & q : F.one_)
        if (q.get_den() != 1)
            throw Error(ErrorCode::BadBasis, "1 is not in the span of the basis");

    F.trace_form_ = QMatrix(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            F.trace_form_(i, j) = F.trace(F.table_[i][j]);
    Q dF = det(F.trace_form_);
    if (dF.get_den() != 1)
        throw Error(ErrorCode::BadBasis, "non-integral discriminant");
    F.disc_ = dF.get_num();
    Q ratio = disc_f / dF;
    if (ratio.get_den() != 1 || !mpz_perfect_square_p(ratio.get_num_mpz_t()))
        throw Error(ErrorCode::BadBasis, "disc(f)/d_F is not a square");

    F.emb_.assign(g, std::vector<long double>(g));
    for (int t = 0; t < g; ++t)
        for (int j = 0; j < g; ++j) {
            RationalInterval I = F.embed(F.basis_element(j), t, 80);
            F.emb_[t][j] = q_to_ld((I.lo + I.hi) / 2);
        }

    if (g == 1)
        F.ring_gen_ = F.one();
    else if (g == 2)
        F.ring_gen_ = F.basis_element(1);
    else if (disc_f == dF)
        F.ring_gen_ = F.theta();

    F.find_automorphisms();

    std::ostringstream os;
    os << "f=[";
    for (int i = 0; i <= g; ++i)
        os << (i ? "," : "") << min_poly[i];
    os << "];B=[";
    for (std::size_t i = 0; i < F.basis_.a.size(); ++i)
        os << (i ? "," : "") << F.basis_.a[i];
    os << "]";
    F.id_ = os.str();
    return F;
}

void NumberField::find_automorphisms()
{
    int g = g_;
    autos_.clear();
    autos_.push_back(QMatrix::identity(g));
    if (g == 1)
        return;
    /* image of theta under s_r, as power-basis coordinates */
    std::vector<std::vector<Q>> images(g);
    images[0] = std::vector<Q>(g, Q(0));
    images[0][1] = 1;
    std::vector<long double> rootv(g);
    for (int t = 0; t < g; ++t)
        rootv[t] = q_to_ld((roots_[t].lo + roots_[t].hi) / 2);

    for (int r = 1; r < g; ++r) {
        std::vector<int> perm(g);
        std::iota(perm.begin(), perm.end(), 0);
        bool found = false;
        do {
            if (perm[0] != r)
                continue;
            /* solve sum_l c_l tau_j(b_l) = root_{perm[j]} */
            QMatrix Bm(g, g);
            std::vector<Q> rhs(g);
            for (int j = 0; j < g; ++j) {
                for (int l = 0; l < g; ++l)
                    Bm(j, l) = Q(static_cast<double>(emb_[j][l]));
                rhs[j] = Q(static_cast<double>(rootv[perm[j]]));
            }
            std::vector<Q> c;
            try {
                c = solve(Bm, rhs);
            } catch (std::domain_error const &) {
                continue;
            }
            FieldElement y;
            bool ok = true;
            for (auto const & q : c) {
                double d = q.get_d();
                double rd = std::round(d);
                if (std::fabs(d - rd) > 1e-6 || std::fabs(rd) > 1e12) {
                    ok = false;
                    break;
                }
                y.coords.push_back(Q(static_cast<long>(rd)));
            }
            if (!ok)
                continue;
            /* exact check f(y) = 0 */
            FieldElement acc = zero();
            for (int i = g; i >= 0; --i)
                acc = add(mul(acc, y), from_rational(f_[i]));
            if (!acc.is_zero())
                continue;
            RationalInterval Iy = embed(y, 0, 80);
            RationalInterval Ir = root_interval(r, 80);
            if (Iy.hi < Ir.lo || Ir.hi < Iy.lo)
                continue;
            images[r] = to_power_basis(y);
            found = true;
            break;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!found) {
            autos_.clear();
            return;
        }
    }
    for (int r = 1; r < g; ++r) {
        FieldElement y = from_power_basis(images[r]);
        QMatrix S(g, g);
        for (int l = 0; l < g; ++l) {
            /* s(b_l) = p_l(y) with p_l the power-basis polynomial of b_l */
            FieldElement acc = zero();
            for (int i = g; i-- > 0;)
                acc = add(mul(acc, y), from_rational(basis_(l, i)));
            for (int k = 0; k < g; ++k)
                S(k, l) = acc.coords[k];
        }
        autos_.push_back(S);
    }
}

FieldElement NumberField::apply_automorphism(int r, FieldElement const & a) const
{
    return {shintani::mul(autos_.at(r), a.coords)};
}

FieldElement NumberField::zero() const { return {std::vector<Q>(g_, Q(0))}; }
FieldElement NumberField::one() const { return {one_}; }
FieldElement NumberField::from_int(long n) const { return from_rational(Q(n)); }
FieldElement NumberField::from_rational(Q const & q) const
{
    FieldElement e{one_};
    for (auto & c : e.coords)
        c *= q;
    return e;
}

FieldElement NumberField::from_power_basis(std::vector<Q> const & p) const
{
    /* p = sum_i c_i b_i (power coords): p^T = c^T basis  =>  c = basis^{-T} p */
    std::vector<Q> c(g_, Q(0));
    for (int j = 0; j < g_; ++j)
        for (int i = 0; i < g_ && i < static_cast<int>(p.size()); ++i)
            c[j] += p[i] * basis_inv_(i, j);
    return {c};
}

std::vector<Q> NumberField::to_power_basis(FieldElement const & a) const
{
    std::vector<Q> p(g_, Q(0));
    for (int i = 0; i < g_; ++i)
        for (int k = 0; k < g_; ++k)
            p[k] += a.coords[i] * basis_(i, k);
    return p;
}

FieldElement NumberField::basis_element(int i) const
{
    FieldElement e = zero();
    e.coords[i] = 1;
    return e;
}

FieldElement NumberField::theta() const
{
    std::vector<Q> p(g_, Q(0));
    if (g_ == 1)
        return from_rational(-Q(min_poly_[0]));
    p[1] = 1;
    return from_power_basis(p);
}

FieldElement NumberField::add(FieldElement const & a, FieldElement const & b) const
{
    FieldElement r = a;
    for (int i = 0; i < g_; ++i)
        r.coords[i] += b.coords[i];
    return r;
}

FieldElement NumberField::sub(FieldElement const & a, FieldElement const & b) const
{
    FieldElement r = a;
    for (int i = 0; i < g_; ++i)
        r.coords[i] -= b.coords[i];
    return r;
}

FieldElement NumberField::neg(FieldElement const & a) const
{
    FieldElement r = a;
    for (auto & c : r.coords)
        c = -c;
    return r;
}

FieldElement NumberField::scale(FieldElement const & a, Q const & q) const
{
    FieldElement r = a;
    for (auto & c : r.coords)
        c *= q;
    return r;
}

FieldElement NumberField::mul(FieldElement const & a, FieldElement const & b) const
{
    FieldElement r = zero();
    for (int i = 0; i < g_; ++i) {
        if (sgn(a.coords[i]) == 0)
            continue;
        for (int j = 0; j < g_; ++j) {
            if (sgn(b.coords[j]) == 0)
                continue;
            Q ab = a.coords[i] * b.coords[j];
            auto const & t = table_[i][j].coords;
            for (int k = 0; k < g_; ++k)
                if (sgn(t[k]) != 0)
                    r.coords[k] += ab * t[k];
        }
    }
    return r;
}

QMatrix NumberField::mult_matrix(FieldElement const & a) const
{
    QMatrix M(g_, g_);
    for (int j = 0; j < g_; ++j) {
        FieldElement c = mul(a, basis_element(j));
        for (int i = 0; i < g_; ++i)
            M(i, j) = c.coords[i];
    }
    return M;
}

FieldElement NumberField::inv(FieldElement const & a) const
{
    if (a.is_zero())
        throw Error(ErrorCode::ZeroElement, "inverse of zero");
    return {solve(mult_matrix(a), one_)};
}

FieldElement NumberField::div(FieldElement const & a, FieldElement const & b) const
{
    return mul(a, inv(b));
}

FieldElement NumberField::pow(FieldElement const & a, long e) const
{
    FieldElement base = e < 0 ? inv(a) : a;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    FieldElement r = one();
    while (n) {
        if (n & 1)
            r = mul(r, base);
        n >>= 1;
        if (n)
            base = mul(base, base);
    }
    return r;
}

Q NumberField::trace(FieldElement const & a) const
{
    QMatrix M = mult_matrix(a);
    Q t = 0;
    for (int i = 0; i < g_; ++i)
        t += M(i, i);
    return t;
}

Q NumberField::norm(FieldElement const & a) const
{
    return det(mult_matrix(a));
}

bool NumberField::is_integral(FieldElement const & a) const
{
    for (auto const & c : a.coords)
        if (c.get_den() != 1)
            return false;
    return true;
}

RationalInterval NumberField::root_interval(int tau, long prec) const
{
    return refine(f_, roots_.at(tau), pow2(-prec));
}

RationalInterval NumberField::embed(FieldElement const & a, int tau, long prec) const
{
    poly::Poly p = to_power_basis(a);
    for (long pr = prec + 8;; pr += 32) {
        RationalInterval I = poly::eval(p, root_interval(tau, pr));
        Q m = std::max(abs(I.lo), abs(I.hi));
        Q tol = pow2(1 - prec) * std::max(Q(1), m);
        if (I.width() <= tol)
            return I;
    }
}

long double NumberField::embed_ld(FieldElement const & a, int tau) const
{
    long double v = 0;
    for (int j = 0; j < g_; ++j)
        if (sgn(a.coords[j]) != 0)
            v += q_to_ld(a.coords[j]) * emb_[tau][j];
    return v;
}

double NumberField::embed_d(FieldElement const & a, int tau) const
{
    return static_cast<double>(embed_ld(a, tau));
}

int NumberField::sign(FieldElement const & a, int tau) const
{
    if (a.is_zero())
        throw Error(ErrorCode::ZeroElement, "sign of zero");
    long double v = 0, mag = 0;
    for (int j = 0; j < g_; ++j) {
        if (sgn(a.coords[j]) == 0)
            continue;
        long double t = q_to_ld(a.coords[j]) * emb_[tau][j];
        v += t;
        mag += std::fabs(t);
    }
    if (std::fabs(v) > mag * 1e-14L)
        return v > 0 ? 1 : -1;
    /* exact: refine until the interval excludes zero (terminates since a != 0) */
    for (long prec = 96;; prec *= 2) {
        RationalInterval I = embed(a, tau, prec);
        if (sgn(I.lo) > 0)
            return 1;
        if (sgn(I.hi) < 0)
            return -1;
    }
}

std::vector<int> NumberField::sign_vector(FieldElement const & a) const
{
    std::vector<int> s(g_);
    for (int t = 0; t < g_; ++t)
        s[t] = sign(a, t);
    return s;
}

bool NumberField::is_totally_positive(FieldElement const & a) const
{
    for (int t = 0; t < g_; ++t)
        if (sign(a, t) < 0)
            return false;
    return true;
}

std::string to_string(NumberField const & F, FieldElement const & a)
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < F.degree(); ++i)
        os << (i ? "," : "") << a.coords[i].get_str();
    os << "]";
    return os.str();
}

} // namespace shintani
