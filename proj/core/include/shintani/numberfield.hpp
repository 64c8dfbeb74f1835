#pragma once

#include "shintani/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shintani {

/* Element of F, coordinates in the integral basis. */
struct FieldElement {
    std::vector<Q> coords;

    bool operator==(FieldElement const & o) const { return coords == o.coords; }
    bool is_zero() const;
};

struct RationalInterval {
    Q lo;
    Q hi;
    bool contains(Q const & x) const { return lo <= x && x <= hi; }
    Q width() const { return hi - lo; }
};

/* Rational polynomials, ascending coefficients. */
namespace poly {
using Poly = std::vector<Q>;
void trim(Poly & p);
Poly mul(Poly const & a, Poly const & b);
Poly derivative(Poly const & p);
Poly rem(Poly a, Poly const & b);
Poly gcd(Poly a, Poly b);
Q eval(Poly const & p, Q const & x);
RationalInterval eval(Poly const & p, RationalInterval const & x);
int sign_at(Poly const & p, Q const & x);
std::vector<Poly> sturm_sequence(Poly const & p);
/* number of distinct real roots in (a, b] */
int count_roots(std::vector<Poly> const & sturm, Q const & a, Q const & b);
} // namespace poly

/* A totally real number field F = Q[x]/(f), with an integral basis and the
 * real embeddings numbered in ascending order tau_1 < ... < tau_g. */
class NumberField
{
  public:
    static NumberField create(std::vector<Z> const & min_poly,
                              std::optional<QMatrix> const & basis = std::nullopt);

    int degree() const { return g_; }
    std::vector<Z> const & min_poly() const { return min_poly_; }
    QMatrix const & basis() const { return basis_; }
    Z const & discriminant() const { return disc_; }
    std::string const & id() const { return id_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long n) const;
    FieldElement from_rational(Q const & q) const;
    FieldElement from_power_basis(std::vector<Q> const & p) const;
    std::vector<Q> to_power_basis(FieldElement const & a) const;
    FieldElement basis_element(int i) const;
    FieldElement theta() const;

    FieldElement add(FieldElement const & a, FieldElement const & b) const;
    FieldElement sub(FieldElement const & a, FieldElement const & b) const;
    FieldElement neg(FieldElement const & a) const;
    FieldElement mul(FieldElement const & a, FieldElement const & b) const;
    FieldElement scale(FieldElement const & a, Q const & q) const;
    FieldElement inv(FieldElement const & a) const;
    FieldElement div(FieldElement const & a, FieldElement const & b) const;
    FieldElement pow(FieldElement const & a, long e) const;

    /* columns are coordinates of a * b_j */
    QMatrix mult_matrix(FieldElement const & a) const;
    Q trace(FieldElement const & a) const;
    Q norm(FieldElement const & a) const;
    bool is_integral(FieldElement const & a) const;

    RationalInterval root_interval(int tau, long prec) const;
    RationalInterval embed(FieldElement const & a, int tau, long prec) const;
    double embed_d(FieldElement const & a, int tau) const;
    long double embed_ld(FieldElement const & a, int tau) const;
    std::vector<long double> const & basis_embeddings(int tau) const { return emb_[tau]; }
    int sign(FieldElement const & a, int tau) const;
    bool is_totally_positive(FieldElement const & a) const;
    std::vector<int> sign_vector(FieldElement const & a) const;

    /* Automorphisms s_r with tau_1 o s_r = tau_r, as matrices acting on
     * integral-basis coordinates; empty if F is not Galois over Q. */
    bool is_galois() const { return !autos_.empty(); }
    FieldElement apply_automorphism(int r, FieldElement const & a) const;
    /* a monogenic generator of O_F when one is known (omega for g=2) */
    std::optional<FieldElement> const & ring_generator() const { return ring_gen_; }

    QMatrix const & trace_form() const { return trace_form_; }

  private:
    int g_ = 0;
    std::vector<Z> min_poly_;
    poly::Poly f_;
    QMatrix basis_;     /* row i: power-basis coordinates of b_i */
    QMatrix basis_inv_; /* power -> integral */
    std::vector<std::vector<FieldElement>> table_;
    std::vector<Q> one_;
    Z disc_;
    QMatrix trace_form_;
    std::vector<RationalInterval> roots_;
    std::vector<std::vector<long double>> emb_;
    std::vector<QMatrix> autos_;
    std::optional<FieldElement> ring_gen_;
    std::string id_;

    void find_automorphisms();
};

std::string to_string(NumberField const & F, FieldElement const & a);

} // namespace shintani
