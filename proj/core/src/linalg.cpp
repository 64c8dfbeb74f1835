#include "shintani/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace shintani {

QMatrix to_q(ZMatrix const & m)
{
    QMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i)
        r.a[i] = m.a[i];
    return r;
}

template <class T>
static Matrix<T> transpose_impl(Matrix<T> const & m)
{
    Matrix<T> r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            r(j, i) = m(i, j);
    return r;
}
QMatrix transpose(QMatrix const & m) { return transpose_impl(m); }
ZMatrix transpose(ZMatrix const & m) { return transpose_impl(m); }

template <class T>
static Matrix<T> mul_impl(Matrix<T> const & x, Matrix<T> const & y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("matrix dimension mismatch");
    Matrix<T> r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (sgn(x(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}
QMatrix mul(QMatrix const & x, QMatrix const & y) { return mul_impl(x, y); }
ZMatrix mul(ZMatrix const & x, ZMatrix const & y) { return mul_impl(x, y); }

template <class T>
static std::vector<T> mulv_impl(Matrix<T> const & m, std::vector<T> const & v)
{
    std::vector<T> r(m.rows, T(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            r[i] += m(i, j) * v[j];
    return r;
}
std::vector<Q> mul(QMatrix const & m, std::vector<Q> const & v) { return mulv_impl(m, v); }
std::vector<Z> mul(ZMatrix const & m, std::vector<Z> const & v) { return mulv_impl(m, v); }

Q det(QMatrix m)
{
    std::size_t n = m.rows;
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(m(r, c)) == 0)
                continue;
            Q f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

Z det(ZMatrix const & m)
{
    Q d = det(to_q(m));
    return d.get_num();
}

std::size_t rank(QMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && sgn(m(p, c)) == 0)
            ++p;
        if (p == m.rows)
            continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (sgn(m(i, c)) == 0)
                continue;
            Q f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

QMatrix inverse(QMatrix m)
{
    std::size_t n = m.rows;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0)
            ++p;
        if (p == n)
            throw std::domain_error("singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Q piv = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(m(r, c)) == 0)
                continue;
            Q f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::vector<Q> solve(QMatrix const & m, std::vector<Q> const & b)
{
    return mul(inverse(m), b);
}

Z floor_div(Z const & a, Z const & b)
{
    Z q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Q frac(Q const & x)
{
    Z f = floor_div(x.get_num(), x.get_den());
    Q r = x - Q(f);
    r.canonicalize();
    return r;
}

static void col_combine(ZMatrix & W, std::size_t p, std::size_t j, Z const & x, Z const & y,
                        Z const & u, Z const & v)
{
    /* (col_p, col_j) <- (x col_p + y col_j, u col_p + v col_j) */
    for (std::size_t i = 0; i < W.rows; ++i) {
        Z cp = W(i, p), cj = W(i, j);
        W(i, p) = x * cp + y * cj;
        W(i, j) = u * cp + v * cj;
    }
}

static void col_swap(ZMatrix & W, std::size_t p, std::size_t j)
{
    if (p == j)
        return;
    for (std::size_t i = 0; i < W.rows; ++i)
        std::swap(W(i, p), W(i, j));
}

static void col_addmul(ZMatrix & W, std::size_t dst, std::size_t src, Z const & q)
{
    for (std::size_t i = 0; i < W.rows; ++i)
        W(i, dst) -= q * W(i, src);
}

HnfTransform hnf_with_transform(ZMatrix const & gens)
{
    std::size_t g = gens.rows, n = gens.cols;
    ZMatrix W = gens;
    ZMatrix U = ZMatrix::identity(n);
    /* pivots are moved to the right end: column n-g+i holds the pivot of
     * row i, remaining columns [0, n-g) end up zero */
    std::size_t active = n;
    for (std::size_t ii = g; ii-- > 0;) {
        std::size_t p = active;
        for (std::size_t j = 0; j < active; ++j)
            if (sgn(W(ii, j)) != 0) {
                p = j;
                break;
            }
        if (p == active)
            throw std::domain_error("hnf: lattice not of full rank");
        for (std::size_t j = p + 1; j < active; ++j) {
            if (sgn(W(ii, j)) == 0)
                continue;
            Z a = W(ii, p), b = W(ii, j), d, x, y;
            mpz_gcdext(d.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Z u = -(b / d), v = a / d;
            col_combine(W, p, j, x, y, u, v);
            col_combine(U, p, j, x, y, u, v);
        }
        if (sgn(W(ii, p)) < 0) {
            for (std::size_t i = 0; i < g; ++i)
                W(i, p) = -W(i, p);
            for (std::size_t i = 0; i < n; ++i)
                U(i, p) = -U(i, p);
        }
        col_swap(W, p, active - 1);
        col_swap(U, p, active - 1);
        --active;
    }
    std::size_t off = n - g;
    for (std::size_t j = 0; j < g; ++j)
        for (std::size_t i = j; i-- > 0;) {
            Z q = floor_div(W(i, off + j), W(i, off + i));
            if (sgn(q) != 0) {
                col_addmul(W, off + j, off + i, q);
                col_addmul(U, off + j, off + i, q);
            }
        }
    HnfTransform r;
    r.H = ZMatrix(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            r.H(i, j) = W(i, off + j);
    /* reorder U so that its first g columns produce H */
    r.U = ZMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < g; ++j)
            r.U(i, j) = U(i, off + j);
        for (std::size_t j = 0; j < off; ++j)
            r.U(i, g + j) = U(i, j);
    }
    return r;
}

ZMatrix hnf(ZMatrix const & gens)
{
    std::size_t g = gens.rows, n = gens.cols;
    ZMatrix W = gens;
    std::size_t active = n;
    for (std::size_t ii = g; ii-- > 0;) {
        std::size_t p = active;
        for (std::size_t j = 0; j < active; ++j)
            if (sgn(W(ii, j)) != 0) {
                p = j;
                break;
            }
        if (p == active)
            throw std::domain_error("hnf: lattice not of full rank");
        for (std::size_t j = p + 1; j < active; ++j) {
            if (sgn(W(ii, j)) == 0)
                continue;
            Z a = W(ii, p), b = W(ii, j), d, x, y;
            mpz_gcdext(d.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            col_combine(W, p, j, x, y, -(b / d), a / d);
        }
        if (sgn(W(ii, p)) < 0)
            for (std::size_t i = 0; i < g; ++i)
                W(i, p) = -W(i, p);
        col_swap(W, p, active - 1);
        --active;
    }
    std::size_t off = n - g;
    ZMatrix H(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            H(i, j) = W(i, off + j);
    for (std::size_t j = 0; j < g; ++j)
        for (std::size_t i = j; i-- > 0;) {
            Z q = floor_div(H(i, j), H(i, i));
            if (sgn(q) != 0)
                col_addmul(H, j, i, q);
        }
    return H;
}

static void row_swap(ZMatrix & M, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < M.cols; ++j)
        std::swap(M(a, j), M(b, j));
}

static void row_addmul(ZMatrix & M, std::size_t dst, std::size_t src, Z const & q)
{
    for (std::size_t j = 0; j < M.cols; ++j)
        M(dst, j) -= q * M(src, j);
}

SmithForm smith(ZMatrix const & A)
{
    ZMatrix D = A;
    std::size_t m = A.rows, n = A.cols;
    ZMatrix P = ZMatrix::identity(m), Qt = ZMatrix::identity(n);
    std::size_t t = 0;
    while (t < m && t < n) {
        /* smallest nonzero entry of the trailing block */
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (sgn(D(i, j)) != 0 && (bi == m || abs(D(i, j)) < abs(D(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == m)
            break;
        row_swap(D, t, bi);
        row_swap(P, t, bi);
        col_swap(D, t, bj);
        col_swap(Qt, t, bj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(D(i, t)) == 0)
                    continue;
                Z q = floor_div(D(i, t), D(t, t));
                row_addmul(D, i, t, q);
                row_addmul(P, i, t, q);
                if (sgn(D(i, t)) != 0) {
                    row_swap(D, t, i);
                    row_swap(P, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(D(t, j)) == 0)
                    continue;
                Z q = floor_div(D(t, j), D(t, t));
                col_addmul(D, j, t, q);
                col_addmul(Qt, j, t, q);
                if (sgn(D(t, j)) != 0) {
                    col_swap(D, t, j);
                    col_swap(Qt, t, j);
                    clean = false;
                }
            }
            if (clean) {
                /* enforce divisibility of the remaining block */
                for (std::size_t i = t + 1; i < m && clean; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (D(i, j) % D(t, t) != 0) {
                            for (std::size_t c = 0; c < n; ++c)
                                D(t, c) += D(i, c);
                            for (std::size_t c = 0; c < m; ++c)
                                P(t, c) += P(i, c);
                            clean = false;
                            break;
                        }
            }
        }
        if (sgn(D(t, t)) < 0) {
            for (std::size_t c = 0; c < n; ++c)
                D(t, c) = -D(t, c);
            for (std::size_t c = 0; c < m; ++c)
                P(t, c) = -P(t, c);
        }
        ++t;
    }
    SmithForm s;
    for (std::size_t i = 0; i < std::min(m, n); ++i)
        s.diag.push_back(D(i, i));
    s.P = std::move(P);
    s.Qt = std::move(Qt);
    return s;
}

std::optional<std::vector<Z>> solve_upper_integral(ZMatrix const & H, std::vector<Z> const & v)
{
    std::size_t g = H.rows;
    std::vector<Z> x(g), r = v;
    for (std::size_t i = g; i-- > 0;) {
        if (r[i] % H(i, i) != 0)
            return std::nullopt;
        x[i] = r[i] / H(i, i);
        for (std::size_t k = 0; k <= i; ++k)
            r[k] -= x[i] * H(k, i);
    }
    return x;
}

std::vector<Q> solve_upper(ZMatrix const & H, std::vector<Q> const & v)
{
    std::size_t g = H.rows;
    std::vector<Q> x(g), r = v;
    for (std::size_t i = g; i-- > 0;) {
        x[i] = r[i] / Q(H(i, i));
        for (std::size_t k = 0; k <= i; ++k)
            r[k] -= x[i] * H(k, i);
    }
    return x;
}

std::vector<Z> reduce_mod_hnf(ZMatrix const & H, std::vector<Z> v)
{
    for (std::size_t i = H.rows; i-- > 0;) {
        Z q = floor_div(v[i], H(i, i));
        if (sgn(q) != 0)
            for (std::size_t k = 0; k <= i; ++k)
                v[k] -= q * H(k, i);
    }
    return v;
}

Z lcm_of_denominators(std::vector<Q> const & v)
{
    Z l = 1;
    for (auto const & x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Z gcd_of(std::vector<Z> const & v)
{
    Z g = 0;
    for (auto const & x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Lattice lattice_from_columns(QMatrix const & cols)
{
    std::vector<Q> all(cols.a.begin(), cols.a.end());
    Z d = lcm_of_denominators(all);
    ZMatrix Zc(cols.rows, cols.cols);
    for (std::size_t i = 0; i < cols.a.size(); ++i) {
        Q t = cols.a[i] * Q(d);
        Zc.a[i] = t.get_num();
    }
    ZMatrix H = hnf(Zc);
    std::vector<Z> ent(H.a.begin(), H.a.end());
    ent.push_back(d);
    Z c = gcd_of(ent);
    if (c != 1) {
        for (auto & x : H.a)
            x /= c;
        d /= c;
    }
    return {d, H};
}

QMatrix dual_lattice_basis(QMatrix const & rows)
{
    /* the rows span a lattice R; its dual is B^{-T} Z^g for a basis B of R */
    Lattice L = lattice_from_columns(transpose(rows));
    QMatrix B = to_q(L.hnf);
    for (auto & x : B.a)
        x /= Q(L.den);
    return transpose(inverse(B));
}

std::string to_string(Q const & q)
{
    return q.get_str();
}

Q parse_rational(std::string const & s)
{
    Q q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

} // namespace shintani
