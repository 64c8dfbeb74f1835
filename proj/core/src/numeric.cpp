#include "shintani/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <sstream>

namespace shintani {

static unsigned g_bits = 192;

static unsigned bits_to_digits(unsigned bits)
{
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1;
}

void set_precision_bits(unsigned bits)
{
    g_bits = bits < 64 ? 64 : bits;
    Real::default_precision(bits_to_digits(g_bits));
}

unsigned precision_bits()
{
    return g_bits;
}

namespace {
struct PrecisionInit {
    PrecisionInit() { Real::default_precision(bits_to_digits(g_bits)); }
} precision_init;
} // namespace

BigComplex BigComplex::operator/(BigComplex const & o) const
{
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

Real BigComplex::abs() const
{
    return sqrt(re * re + im * im);
}

BigComplex to_big(std::complex<long double> const & z)
{
    return {Real(z.real()), Real(z.imag())};
}

Real pi_real()
{
    return boost::math::constants::pi<Real>();
}

BigComplex to_big(CycValue const & v)
{
    long m = v.conductor();
    Real two_pi = 2 * pi_real();
    BigComplex s;
    auto const & c = v.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (sgn(c[j]) == 0)
            continue;
        Real q = Real(c[j].get_num().get_str()) / Real(c[j].get_den().get_str());
        Real th = two_pi * Real(static_cast<long>(j)) / Real(m);
        s.re += q * cos(th);
        s.im += q * sin(th);
    }
    return s;
}

BigComplex i_pow(long e)
{
    switch (((e % 4) + 4) % 4) {
    case 0:
        return {Real(1), Real(0)};
    case 1:
        return {Real(0), Real(1)};
    case 2:
        return {Real(-1), Real(0)};
    default:
        return {Real(0), Real(-1)};
    }
}

BigComplex pow(BigComplex z, long e)
{
    if (e < 0)
        return BigComplex(Real(1)) / pow(z, -e);
    BigComplex r(Real(1));
    while (e > 0) {
        if (e & 1)
            r = r * z;
        z = z * z;
        e >>= 1;
    }
    return r;
}

Real gamma_R(Real const & s)
{
    return pow(pi_real(), -s / 2) * tgamma(s / 2);
}

std::string to_string(Real const & x, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

std::string to_string(BigComplex const & z, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << z.re << (z.im < 0 ? " - " : " + ") << boost::multiprecision::abs(z.im) << "i";
    return os.str();
}

double to_double(Real const & x)
{
    return x.convert_to<double>();
}

/* LLL over integer rows with floating Gram-Schmidt */
static void lll(std::vector<std::vector<__int128>> & b)
{
    std::size_t n = b.size(), d = b[0].size();
    auto dot = [&](std::vector<long double> const & x, std::vector<long double> const & y) {
        long double s = 0;
        for (std::size_t i = 0; i < d; ++i)
            s += x[i] * y[i];
        return s;
    };
    auto tofl = [&](std::vector<__int128> const & x) {
        std::vector<long double> y(d);
        for (std::size_t i = 0; i < d; ++i)
            y[i] = static_cast<long double>(x[i]);
        return y;
    };
    std::vector<std::vector<long double>> bs(n), mu(n, std::vector<long double>(n, 0));
    std::vector<long double> B(n);
    auto gso = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            bs[i] = tofl(b[i]);
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(tofl(b[i]), bs[j]) / B[j];
                for (std::size_t t = 0; t < d; ++t)
                    bs[i][t] -= mu[i][j] * bs[j][t];
            }
            B[i] = dot(bs[i], bs[i]);
        }
    };
    gso();
    std::size_t k = 1;
    long guard = 0;
    while (k < n && ++guard < 100000) {
        for (std::size_t j = k; j-- > 0;) {
            long double q = std::round(mu[k][j]);
            if (q != 0) {
                __int128 qi = static_cast<__int128>(q);
                for (std::size_t t = 0; t < d; ++t)
                    b[k][t] -= qi * b[j][t];
                gso();
            }
        }
        if (B[k] >= (0.75L - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gso();
            k = k > 1 ? k - 1 : 1;
        }
    }
}

std::optional<Recognition> recognize_cyclotomic(std::complex<long double> z, long m, long double scale)
{
    long ph = euler_phi(m);
    long double const tau = 6.283185307179586476925286766559L;
    std::size_t n = static_cast<std::size_t>(ph) + 1;
    std::vector<std::vector<__int128>> b(n, std::vector<__int128>(n + 2, 0));
    b[0][0] = 1;
    b[0][n] = static_cast<__int128>(std::llround(scale * z.real()));
    b[0][n + 1] = static_cast<__int128>(std::llround(scale * z.imag()));
    for (long j = 0; j < ph; ++j) {
        b[j + 1][j + 1] = 1;
        b[j + 1][n] = static_cast<__int128>(std::llround(scale * std::cos(tau * j / m)));
        b[j + 1][n + 1] = static_cast<__int128>(std::llround(scale * std::sin(tau * j / m)));
    }
    lll(b);
    for (auto const & v : b) {
        if (v[0] == 0)
            continue;
        CycValue r(m);
        for (long j = 0; j < ph; ++j)
            if (v[j + 1] != 0)
                r += CycValue::root_of_unity(m, j) * (Q(-static_cast<long>(v[j + 1])) / Q(static_cast<long>(v[0])));
        std::complex<long double> w = r.to_complex();
        Recognition out{r, std::abs(w - z)};
        if (out.residual * scale < 1e3L * static_cast<long double>(n))
            return out;
    }
    return std::nullopt;
}

} // namespace shintani
