#include "shintani/ideals.hpp"

#include "shintani/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace shintani {

bool FractionalIdeal::operator<(FractionalIdeal const & o) const
{
    if (norm != o.norm)
        return norm < o.norm;
    if (den != o.den)
        return den < o.den;
    return std::lexicographical_compare(hnf.a.begin(), hnf.a.end(), o.hnf.a.begin(), o.hnf.a.end());
}

static FractionalIdeal finish(Lattice const & L)
{
    FractionalIdeal I;
    I.den = L.den;
    I.hnf = L.hnf;
    Z d = 1;
    for (std::size_t i = 0; i < L.hnf.rows; ++i)
        d *= L.hnf(i, i);
    Z dg = 1;
    for (std::size_t i = 0; i < L.hnf.rows; ++i)
        dg *= L.den;
    I.norm = Q(d, dg);
    I.norm.canonicalize();
    return I;
}

FractionalIdeal ideal_from_lattice(NumberField const &, QMatrix const & cols)
{
    return finish(lattice_from_columns(cols));
}

FractionalIdeal unit_ideal(NumberField const & F)
{
    return ideal_from_lattice(F, QMatrix::identity(F.degree()));
}

FractionalIdeal ideal_from_generators(NumberField const & F, std::vector<FieldElement> const & gens)
{
    int g = F.degree();
    std::vector<FieldElement> zgens;
    for (auto const & x : gens) {
        if (x.is_zero())
            continue;
        for (int i = 0; i < g; ++i)
            zgens.push_back(F.mul(x, F.basis_element(i)));
    }
    if (zgens.empty())
        throw Error(ErrorCode::ZeroIdeal, "no nonzero generator");
    QMatrix cols(g, zgens.size());
    for (std::size_t j = 0; j < zgens.size(); ++j)
        for (int i = 0; i < g; ++i)
            cols(i, j) = zgens[j].coords[i];
    return ideal_from_lattice(F, cols);
}

FractionalIdeal principal_ideal(NumberField const & F, FieldElement const & x)
{
    return ideal_from_generators(F, {x});
}

FieldElement ideal_basis_element(FractionalIdeal const & a, int j)
{
    FieldElement e;
    for (std::size_t i = 0; i < a.hnf.rows; ++i)
        e.coords.push_back(Q(a.hnf(i, j), a.den));
    for (auto & c : e.coords)
        c.canonicalize();
    return e;
}

std::vector<FieldElement> ideal_basis(FractionalIdeal const & a)
{
    std::vector<FieldElement> r;
    for (std::size_t j = 0; j < a.hnf.cols; ++j)
        r.push_back(ideal_basis_element(a, static_cast<int>(j)));
    return r;
}

FractionalIdeal multiply(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & b)
{
    int g = F.degree();
    auto A = ideal_basis(a), B = ideal_basis(b);
    QMatrix cols(g, g * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            FieldElement p = F.mul(A[i], B[j]);
            for (int k = 0; k < g; ++k)
                cols(k, i * g + j) = p.coords[k];
        }
    return ideal_from_lattice(F, cols);
}

FractionalIdeal invert(NumberField const & F, FractionalIdeal const & a)
{
    /* a^{-1} = {x : M_{a_j} x integral for all j} */
    int g = F.degree();
    auto A = ideal_basis(a);
    QMatrix rows(g * g, g);
    for (int j = 0; j < g; ++j) {
        QMatrix M = F.mult_matrix(A[j]);
        for (int r = 0; r < g; ++r)
            for (int c = 0; c < g; ++c)
                rows(j * g + r, c) = M(r, c);
    }
    return ideal_from_lattice(F, dual_lattice_basis(rows));
}

FractionalIdeal ideal_sum(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & b)
{
    int g = F.degree();
    QMatrix cols(g, 2 * g);
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i) {
            cols(i, j) = Q(a.hnf(i, j), a.den);
            cols(i, g + j) = Q(b.hnf(i, j), b.den);
        }
    for (auto & x : cols.a)
        x.canonicalize();
    return ideal_from_lattice(F, cols);
}

FractionalIdeal ideal_pow(NumberField const & F, FractionalIdeal const & a, long e)
{
    FractionalIdeal base = e < 0 ? invert(F, a) : a;
    long n = e < 0 ? -e : e;
    FractionalIdeal r = unit_ideal(F);
    while (n) {
        if (n & 1)
            r = multiply(F, r, base);
        n >>= 1;
        if (n)
            base = multiply(F, base, base);
    }
    return r;
}

FractionalIdeal scale(NumberField const & F, FractionalIdeal const & a, FieldElement const & x)
{
    int g = F.degree();
    auto A = ideal_basis(a);
    QMatrix cols(g, g);
    for (int j = 0; j < g; ++j) {
        FieldElement p = F.mul(x, A[j]);
        for (int i = 0; i < g; ++i)
            cols(i, j) = p.coords[i];
    }
    return ideal_from_lattice(F, cols);
}

std::vector<Q> ideal_coords(FractionalIdeal const & a, FieldElement const & x)
{
    std::vector<Q> v(x.coords.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = x.coords[i] * Q(a.den);
    return solve_upper(a.hnf, v);
}

std::optional<std::vector<Z>> ideal_coords_integral(FractionalIdeal const & a, FieldElement const & x)
{
    auto c = ideal_coords(a, x);
    std::vector<Z> r;
    for (auto const & q : c) {
        if (q.get_den() != 1)
            return std::nullopt;
        r.push_back(q.get_num());
    }
    return r;
}

bool contains(FractionalIdeal const & a, FieldElement const & x)
{
    return ideal_coords_integral(a, x).has_value();
}

bool contains(FractionalIdeal const & a, FractionalIdeal const & b)
{
    for (auto const & e : ideal_basis(b))
        if (!contains(a, e))
            return false;
    return true;
}

bool coprime(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & b)
{
    return ideal_sum(F, a, b) == unit_ideal(F);
}

ZMatrix relative_hnf(FractionalIdeal const & a, FractionalIdeal const & b)
{
    std::size_t g = a.hnf.rows;
    ZMatrix M(g, g);
    for (std::size_t j = 0; j < g; ++j) {
        auto c = ideal_coords_integral(a, ideal_basis_element(b, static_cast<int>(j)));
        if (!c)
            throw Error(ErrorCode::NotInIdeal, "relative_hnf: b is not contained in a");
        for (std::size_t i = 0; i < g; ++i)
            M(i, j) = (*c)[i];
    }
    return hnf(M);
}

std::vector<std::vector<Z>> residue_coords(ZMatrix const & H)
{
    std::size_t g = H.rows;
    std::vector<std::vector<Z>> out;
    std::vector<Z> c(g, Z(0));
    for (;;) {
        out.push_back(c);
        /* lexicographic: last coordinate varies fastest */
        std::size_t i = g;
        while (i-- > 0) {
            c[i] += 1;
            if (c[i] < H(i, i))
                break;
            c[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1))
            break;
    }
    return out;
}

std::vector<FieldElement> residues(NumberField const & F, FractionalIdeal const & a, FractionalIdeal const & g)
{
    if (!g.is_integral())
        throw Error(ErrorCode::NotIntegralModulus, "modulus must be integral");
    FractionalIdeal ga = multiply(F, g, a);
    ZMatrix H = relative_hnf(a, ga);
    auto A = ideal_basis(a);
    std::vector<FieldElement> out;
    for (auto const & c : residue_coords(H)) {
        FieldElement x = F.zero();
        for (std::size_t j = 0; j < c.size(); ++j)
            if (sgn(c[j]) != 0)
                x = F.add(x, F.scale(A[j], Q(c[j])));
        out.push_back(x);
    }
    return out;
}

bool is_primitive(NumberField const & F, FieldElement const & alpha, FractionalIdeal const & a)
{
    auto c = ideal_coords_integral(a, alpha);
    if (!c)
        throw Error(ErrorCode::NotInIdeal, "element not in ideal");
    if (!F.is_totally_positive(alpha))
        throw Error(ErrorCode::NotTotallyPositive, "element not totally positive");
    return gcd_of(*c) == 1;
}

FractionalIdeal different_ideal(NumberField const & F)
{
    /* inverse of the trace dual O^vee = T^{-1} Z^g */
    QMatrix Tinv = inverse(F.trace_form());
    FractionalIdeal dual = ideal_from_lattice(F, Tinv);
    return invert(F, dual);
}

Z ideal_min_integer(NumberField const & F, FractionalIdeal const & a)
{
    std::vector<Q> c = ideal_coords(a, F.one());
    return lcm_of_denominators(c);
}

std::vector<FractionalIdeal> divisors(NumberField const & F, FractionalIdeal const & g)
{
    std::set<FractionalIdeal> seen;
    for (auto const & x : residues(F, unit_ideal(F), g)) {
        if (x.is_zero()) {
            seen.insert(g);
            continue;
        }
        seen.insert(ideal_sum(F, g, principal_ideal(F, x)));
    }
    return {seen.begin(), seen.end()};
}

std::vector<FractionalIdeal> ideals_up_to_norm(NumberField const & F, long bound)
{
    int g = F.degree();
    std::vector<FractionalIdeal> out;
    for (long n = 1; n <= bound; ++n) {
        /* enumerate upper triangular HNF matrices with det n */
        std::vector<long> diag(g, 1);
        std::function<void(int, long)> rec_diag;
        std::vector<FractionalIdeal> found;
        rec_diag = [&](int i, long rest) {
            if (i == g - 1) {
                diag[i] = rest;
                /* off-diagonal entries H(r, c), r < c, in [0, diag[r]) */
                ZMatrix H(g, g);
                for (int k = 0; k < g; ++k)
                    H(k, k) = diag[k];
                std::vector<std::pair<int, int>> pos;
                for (int c = 0; c < g; ++c)
                    for (int r = 0; r < c; ++r)
                        pos.push_back({r, c});
                std::function<void(std::size_t)> rec_off = [&](std::size_t p) {
                    if (p == pos.size()) {
                        QMatrix cols = to_q(H);
                        FractionalIdeal I = ideal_from_lattice(F, cols);
                        /* O-module test */
                        bool ok = true;
                        for (int bi = 0; bi < g && ok; ++bi)
                            for (auto const & e : ideal_basis(I))
                                if (!contains(I, F.mul(F.basis_element(bi), e))) {
                                    ok = false;
                                    break;
                                }
                        if (ok)
                            found.push_back(I);
                        return;
                    }
                    auto [r, c] = pos[p];
                    for (long v = 0; v < diag[r]; ++v) {
                        H(r, c) = v;
                        rec_off(p + 1);
                    }
                };
                rec_off(0);
                return;
            }
            for (long d = 1; d <= rest; ++d)
                if (rest % d == 0) {
                    diag[i] = d;
                    rec_diag(i + 1, rest / d);
                }
        };
        rec_diag(0, n);
        std::sort(found.begin(), found.end());
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

std::string to_string(FractionalIdeal const & a)
{
    std::ostringstream os;
    os << "(" << a.den << ";[";
    for (std::size_t i = 0; i < a.hnf.a.size(); ++i)
        os << (i ? "," : "") << a.hnf.a[i];
    os << "])";
    return os.str();
}

} // namespace shintani
