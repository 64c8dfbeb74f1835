#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace shintani {

using Q = mpq_class;
using Z = mpz_class;

/* Dense row-major matrix. Small sizes only (g <= 3, relation matrices of a
 * few dozen rows), so no attempt at blocking. */
template <class T>
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

    T & operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    T const & operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> v(rows);
        for (std::size_t i = 0; i < rows; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    void set_column(std::size_t j, std::vector<T> const & v)
    {
        for (std::size_t i = 0; i < rows; ++i)
            (*this)(i, j) = v[i];
    }

    bool operator==(Matrix const & o) const
    {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

using QMatrix = Matrix<Q>;
using ZMatrix = Matrix<Z>;

QMatrix to_q(ZMatrix const & m);
QMatrix transpose(QMatrix const & m);
ZMatrix transpose(ZMatrix const & m);
QMatrix mul(QMatrix const & x, QMatrix const & y);
ZMatrix mul(ZMatrix const & x, ZMatrix const & y);
std::vector<Q> mul(QMatrix const & m, std::vector<Q> const & v);
std::vector<Z> mul(ZMatrix const & m, std::vector<Z> const & v);

Q det(QMatrix m);
Z det(ZMatrix const & m);
std::size_t rank(QMatrix m);
/* throws std::domain_error when singular */
QMatrix inverse(QMatrix m);
std::vector<Q> solve(QMatrix const & m, std::vector<Q> const & b);

/* Column-style Hermite normal form of the lattice spanned by the columns of
 * `gens` (full row rank required). Result is square upper triangular with
 * positive diagonal and 0 <= H(i,j) < H(i,i) for j > i. */
ZMatrix hnf(ZMatrix const & gens);

struct HnfTransform {
    ZMatrix H; /* rows x rows */
    ZMatrix U; /* cols x cols unimodular, gens * U = [H | 0] */
};
HnfTransform hnf_with_transform(ZMatrix const & gens);

/* P * A * Qt = diag(d) with P, Qt unimodular; d_i | d_{i+1}. */
struct SmithForm {
    std::vector<Z> diag;
    ZMatrix P;
    ZMatrix Qt;
};
SmithForm smith(ZMatrix const & A);

/* H x = v for upper triangular H; nullopt when x is not integral. */
std::optional<std::vector<Z>> solve_upper_integral(ZMatrix const & H, std::vector<Z> const & v);
std::vector<Q> solve_upper(ZMatrix const & H, std::vector<Q> const & v);

/* Canonical coset representative of v modulo the column lattice of the
 * HNF matrix H: 0 <= result_i < H(i,i). */
std::vector<Z> reduce_mod_hnf(ZMatrix const & H, std::vector<Z> v);

/* A full-rank lattice of Q^g as (den, hnf) with hnf/den a basis. */
struct Lattice {
    Z den;
    ZMatrix hnf;
};
Lattice lattice_from_columns(QMatrix const & cols);
/* {x : <v, x> in Z for every row v of `rows`}; rows must span Q^g. */
QMatrix dual_lattice_basis(QMatrix const & rows);

Z lcm_of_denominators(std::vector<Q> const & v);
Z gcd_of(std::vector<Z> const & v);
Z floor_div(Z const & a, Z const & b);
Q frac(Q const & x);

std::string to_string(Q const & q);
Q parse_rational(std::string const & s);

} // namespace shintani
