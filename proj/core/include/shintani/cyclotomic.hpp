#pragma once

#include "shintani/linalg.hpp"

#include <complex>
#include <string>
#include <vector>

namespace shintani {

/* Element of Q(zeta_m) as a polynomial in zeta_m of degree < phi(m). */
class CycValue
{
  public:
    CycValue() : m_(1), c_{Q(0)} {}
    explicit CycValue(long m);
    static CycValue rational(Q const & q, long m = 1);
    /* zeta_m^e */
    static CycValue root_of_unity(long m, long e);
    /* sum_j w_j zeta_m^j, j < w.size(), one reduction */
    static CycValue from_powers(long m, std::vector<Q> w);

    long conductor() const { return m_; }
    std::vector<Q> const & coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Q rational_value() const;

    /* same element viewed in Q(zeta_{m'}), m | m' */
    CycValue lift(long mp) const;
    /* smallest m' | m such that the value lies in Q(zeta_{m'}) is not
     * searched; this only drops to m=1 for rationals */
    CycValue normalized() const;

    CycValue operator+(CycValue const & o) const;
    CycValue operator-(CycValue const & o) const;
    CycValue operator-() const;
    CycValue operator*(CycValue const & o) const;
    CycValue operator*(Q const & q) const;
    CycValue & operator+=(CycValue const & o);
    CycValue & operator-=(CycValue const & o);
    CycValue & operator*=(CycValue const & o);
    CycValue inverse() const;
    CycValue operator/(CycValue const & o) const { return *this * o.inverse(); }
    bool operator==(CycValue const & o) const;
    bool operator!=(CycValue const & o) const { return !(*this == o); }

    /* zeta_m -> zeta_m^a, gcd(a, m) = 1 */
    CycValue galois(long a) const;
    CycValue conj() const { return galois(-1); }
    std::complex<long double> to_complex() const;

    std::string to_string() const;

  private:
    long m_;
    std::vector<Q> c_;
    void reduce(std::vector<Q> & v) const;
};

long euler_phi(long m);
std::vector<Z> const & cyclotomic_poly(long m);
long lcm_long(long a, long b);
long mod_pos(long a, long m);

} // namespace shintani
