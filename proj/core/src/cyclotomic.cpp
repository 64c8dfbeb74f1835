#include "shintani/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shintani {

long euler_phi(long m)
{
    long r = m, n = m;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    if (n > 1)
        r -= r / n;
    return r;
}

long lcm_long(long a, long b)
{
    return a / std::gcd(a, b) * b;
}

long mod_pos(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

static std::vector<Z> poly_divexact(std::vector<Z> a, std::vector<Z> const & b)
{
    /* b monic */
    std::size_t db = b.size() - 1;
    std::vector<Z> q(a.size() - db, Z(0));
    for (std::size_t i = a.size(); i-- > db;) {
        Z c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    return q;
}

std::vector<Z> const & cyclotomic_poly(long m)
{
    static std::recursive_mutex mu;
    static std::map<long, std::vector<Z>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    /* Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed recursively */
    std::vector<Z> num(m + 1, Z(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0) {
            num = poly_divexact(num, cyclotomic_poly(d));
        }
    return cache.emplace(m, num).first->second;
}

CycValue::CycValue(long m) : m_(m), c_(euler_phi(m), Q(0)) {}

CycValue CycValue::rational(Q const & q, long m)
{
    CycValue v(m);
    v.c_[0] = q;
    return v;
}

CycValue CycValue::root_of_unity(long m, long e)
{
    CycValue v(m);
    std::vector<Q> w(m, Q(0));
    w[mod_pos(e, m)] = 1;
    v.reduce(w);
    v.c_ = std::move(w);
    return v;
}

CycValue CycValue::from_powers(long m, std::vector<Q> w)
{
    CycValue v(m);
    std::vector<Q> f(m, Q(0));
    for (std::size_t j = 0; j < w.size(); ++j)
        f[j % m] += w[j];
    v.reduce(f);
    v.c_ = std::move(f);
    return v;
}

void CycValue::reduce(std::vector<Q> & v) const
{
    auto const & phi = cyclotomic_poly(m_);
    std::size_t d = phi.size() - 1;
    if (v.size() <= d) {
        v.resize(d, Q(0));
        return;
    }
    /* phi is monic with mostly 0, +-1 coefficients */
    std::vector<std::pair<std::size_t, long>> small;
    std::vector<std::pair<std::size_t, Z>> big;
    for (std::size_t j = 0; j < d; ++j) {
        if (phi[j] == 0)
            continue;
        if (phi[j].fits_slong_p())
            small.emplace_back(j, phi[j].get_si());
        else
            big.emplace_back(j, phi[j]);
    }
    Q c, t;
    for (std::size_t i = v.size(); i-- > d;) {
        if (sgn(v[i]) == 0)
            continue;
        c = v[i];
        v[i] = 0;
        std::size_t base = i - d;
        for (auto const & [j, e] : small) {
            if (e == 1)
                v[base + j] -= c;
            else if (e == -1)
                v[base + j] += c;
            else {
                t = c * e;
                v[base + j] -= t;
            }
        }
        for (auto const & [j, e] : big) {
            t = c * e;
            v[base + j] -= t;
        }
    }
    v.resize(d, Q(0));
}

bool CycValue::is_zero() const
{
    for (auto const & q : c_)
        if (sgn(q) != 0)
            return false;
    return true;
}

bool CycValue::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            return false;
    return true;
}

Q CycValue::rational_value() const
{
    if (!is_rational())
        throw std::domain_error("cyclotomic value is not rational");
    return c_[0];
}

CycValue CycValue::lift(long mp) const
{
    if (mp == m_)
        return *this;
    if (mp % m_ != 0)
        throw std::invalid_argument("lift: m does not divide target");
    long s = mp / m_;
    CycValue r(mp);
    std::vector<Q> w(s * c_.size() + 1, Q(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        w[i * s] = c_[i];
    r.reduce(w);
    r.c_ = std::move(w);
    return r;
}

CycValue CycValue::normalized() const
{
    if (m_ > 1 && is_rational())
        return rational(c_[0]);
    return *this;
}

static void common(CycValue const & a, CycValue const & b, CycValue & x, CycValue & y)
{
    long m = lcm_long(a.conductor(), b.conductor());
    x = a.lift(m);
    y = b.lift(m);
}

CycValue CycValue::operator+(CycValue const & o) const
{
    CycValue r = *this;
    r += o;
    return r;
}

CycValue & CycValue::operator+=(CycValue const & o)
{
    if (o.m_ != m_) {
        CycValue x, y;
        common(*this, o, x, y);
        *this = x;
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += y.c_[i];
        return *this;
    }
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

CycValue CycValue::operator-(CycValue const & o) const
{
    CycValue r = *this;
    r -= o;
    return r;
}

CycValue & CycValue::operator-=(CycValue const & o)
{
    *this += -o;
    return *this;
}

CycValue CycValue::operator-() const
{
    CycValue r = *this;
    for (auto & q : r.c_)
        q = -q;
    return r;
}

CycValue CycValue::operator*(CycValue const & o) const
{
    if (o.m_ != m_) {
        CycValue x, y;
        common(*this, o, x, y);
        return x * y;
    }
    if (m_ <= 2)
        return rational(c_[0] * o.c_[0], m_);
    std::vector<Q> w(c_.size() + o.c_.size() - 1, Q(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (sgn(o.c_[j]) != 0)
                w[i + j] += c_[i] * o.c_[j];
    }
    CycValue r(m_);
    reduce(w);
    r.c_ = std::move(w);
    return r;
}

CycValue CycValue::operator*(Q const & q) const
{
    CycValue r = *this;
    for (auto & c : r.c_)
        c *= q;
    return r;
}

CycValue & CycValue::operator*=(CycValue const & o)
{
    *this = *this * o;
    return *this;
}

bool CycValue::operator==(CycValue const & o) const
{
    if (o.m_ == m_)
        return c_ == o.c_;
    CycValue x, y;
    common(*this, o, x, y);
    return x.c_ == y.c_;
}

CycValue CycValue::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero cyclotomic value");
    if (is_rational())
        return rational(Q(1) / c_[0], m_);
    /* extended Euclid of c(x) against Phi_m over Q */
    using P = std::vector<Q>;
    auto trim = [](P & p) {
        while (!p.empty() && sgn(p.back()) == 0)
            p.pop_back();
    };
    auto const & phz = cyclotomic_poly(m_);
    P r0(phz.begin(), phz.end()), r1 = c_;
    trim(r1);
    P s0{}, s1{Q(1)};
    auto sub_mul = [&](P a, P const & q, P const & b) {
        /* a - q*b */
        P prod(q.size() + b.size(), Q(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] += q[i] * b[j];
        if (a.size() < prod.size())
            a.resize(prod.size(), Q(0));
        for (std::size_t i = 0; i < prod.size(); ++i)
            a[i] -= prod[i];
        trim(a);
        return a;
    };
    while (r1.size() > 1) {
        /* q = r0 div r1 */
        P a = r0, q(a.size() >= r1.size() ? a.size() - r1.size() + 1 : 0, Q(0));
        while (a.size() >= r1.size()) {
            Q f = a.back() / r1.back();
            std::size_t sh = a.size() - r1.size();
            q[sh] = f;
            for (std::size_t i = 0; i < r1.size(); ++i)
                a[sh + i] -= f * r1[i];
            a.pop_back();
            trim(a);
        }
        P s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(a);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    /* r1 is a nonzero constant: s1 * c = r1 mod Phi */
    Q k = r1[0];
    CycValue r(m_);
    std::vector<Q> w = s1;
    for (auto & x : w)
        x /= k;
    if (w.size() < 1)
        w.resize(1, Q(0));
    reduce(w);
    r.c_ = std::move(w);
    return r;
}

CycValue CycValue::galois(long a) const
{
    if (std::gcd(mod_pos(a, m_), m_) != 1 && m_ > 1)
        throw std::invalid_argument("galois: exponent not coprime to m");
    std::vector<Q> w(m_, Q(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        w[mod_pos(static_cast<long>(i) * a, m_)] += c_[i];
    CycValue r(m_);
    reduce(w);
    r.c_ = std::move(w);
    return r;
}

std::complex<long double> CycValue::to_complex() const
{
    std::complex<long double> s = 0;
    long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        long double ang = two_pi * static_cast<long double>(i) / static_cast<long double>(m_);
        long double q = static_cast<long double>(c_[i].get_d());
        if (c_[i].get_den() != 1 || abs(c_[i].get_num()) > Z(1) << 50) {
            /* keep long double accuracy for rationals */
            q = static_cast<long double>(c_[i].get_num().get_d()) / static_cast<long double>(c_[i].get_den().get_d());
        }
        s += q * std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::string CycValue::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        if (!first)
            os << (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0)
            os << "-";
        Q a = abs(c_[i]);
        if (i == 0)
            os << a.get_str();
        else {
            if (a != 1)
                os << a.get_str() << "*";
            os << "z" << m_;
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace shintani
