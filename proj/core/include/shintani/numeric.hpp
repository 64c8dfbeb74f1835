#pragma once

#include "shintani/cyclotomic.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace shintani {

using Real = boost::multiprecision::mpfr_float;

/* working precision of Real, in bits (default 192) */
void set_precision_bits(unsigned bits);
unsigned precision_bits();

struct BigComplex {
    Real re = 0, im = 0;

    BigComplex() = default;
    BigComplex(Real r, Real i = 0) : re(std::move(r)), im(std::move(i)) {}
    BigComplex operator+(BigComplex const & o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(BigComplex const & o) const { return {re - o.re, im - o.im}; }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator*(BigComplex const & o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    BigComplex operator*(Real const & x) const { return {re * x, im * x}; }
    BigComplex operator/(BigComplex const & o) const;
    BigComplex & operator+=(BigComplex const & o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex conj() const { return {re, -im}; }
    Real abs() const;
};

BigComplex to_big(std::complex<long double> const & z);
BigComplex to_big(CycValue const & v);
BigComplex i_pow(long e);          /* i^e */
BigComplex pow(BigComplex z, long e);
Real pi_real();
Real gamma_R(Real const & s); /* pi^{-s/2} Gamma(s/2) */
std::string to_string(Real const & x, int digits = 20);
std::string to_string(BigComplex const & z, int digits = 20);
double to_double(Real const & x);

/* z ~ sum_j c_j zeta_m^j (j < phi(m)) with small rational c_j, by lattice
 * reduction; nullopt when no relation is found */
struct Recognition {
    CycValue value;
    long double residual = 0;
};
std::optional<Recognition> recognize_cyclotomic(std::complex<long double> z, long m, long double scale = 1e12L);

} // namespace shintani
