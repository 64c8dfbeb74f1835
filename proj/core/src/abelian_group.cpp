#include "shintani/abelian_group.hpp"

#include <numeric>
#include <stdexcept>

namespace shintani {

long AbelianGroup::size() const
{
    long n = 1;
    for (long d : orders)
        n *= d;
    return n;
}

long AbelianGroup::exponent() const
{
    long e = 1;
    for (long d : orders)
        e = std::lcm(e, d);
    return e;
}

std::vector<long> AbelianGroup::reduce(std::vector<long> a) const
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] %= orders[i];
        if (a[i] < 0)
            a[i] += orders[i];
    }
    return a;
}

std::vector<long> AbelianGroup::add(std::vector<long> const & a, std::vector<long> const & b) const
{
    std::vector<long> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return reduce(c);
}

std::vector<long> AbelianGroup::neg(std::vector<long> const & a) const
{
    return scale(a, -1);
}

std::vector<long> AbelianGroup::scale(std::vector<long> const & a, long n) const
{
    std::vector<long> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = (a[i] % orders[i]) * (n % orders[i]);
    return reduce(c);
}

std::vector<std::vector<long>> AbelianGroup::elements() const
{
    std::vector<std::vector<long>> out;
    std::vector<long> c(orders.size(), 0);
    for (;;) {
        out.push_back(c);
        std::size_t i = orders.size();
        while (i-- > 0) {
            if (++c[i] < orders[i])
                break;
            c[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1))
            break;
    }
    return out;
}

long AbelianGroup::index_of(std::vector<long> const & a) const
{
    long idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
        idx = idx * orders[i] + a[i];
    return idx;
}

GroupPresentation present_group(long n, std::function<long(long, long)> const & op)
{
    /* greedy generators: each new generator x_j has a relation
     * t_j x_j = (combination of earlier generators) */
    std::vector<std::vector<long>> ex(n);
    std::vector<char> in(n, 0);
    std::vector<long> members{0};
    in[0] = 1;
    std::vector<long> gens;
    std::vector<std::vector<long>> rels;
    for (long x = 1; x < n; ++x) {
        if (in[x])
            continue;
        long j = static_cast<long>(gens.size());
        gens.push_back(x);
        long cur = x, t = 1;
        while (!in[cur]) {
            cur = op(cur, x);
            ++t;
        }
        std::vector<long> rel(j + 1, 0);
        for (std::size_t i = 0; i < ex[cur].size(); ++i)
            rel[i] = -ex[cur][i];
        rel[j] += t;
        rels.push_back(rel);
        std::vector<long> old = members;
        for (long s : old) {
            long y = s;
            for (long k = 1; k < t; ++k) {
                y = op(y, x);
                auto v = ex[s];
                v.resize(j + 1, 0);
                v[j] = k;
                ex[y] = v;
                in[y] = 1;
                members.push_back(y);
            }
        }
    }
    if (static_cast<long>(members.size()) != n)
        throw std::logic_error("present_group: operation is not a group law");

    std::size_t r = gens.size();
    GroupPresentation P;
    P.coords.assign(n, {});
    if (r == 0) {
        for (long i = 0; i < n; ++i)
            P.coords[i] = {};
        return P;
    }
    ZMatrix R(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < rels[i].size(); ++k)
            R(i, k) = rels[i][k];
    SmithForm S = smith(R);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r; ++i)
        if (S.diag[i] != 1) {
            keep.push_back(i);
            P.group.orders.push_back(S.diag[i].get_si());
        }
    for (long e = 0; e < n; ++e) {
        std::vector<Z> v(r, Z(0));
        for (std::size_t i = 0; i < ex[e].size(); ++i)
            v[i] = ex[e][i];
        std::vector<long> w;
        for (std::size_t kk = 0; kk < keep.size(); ++kk) {
            std::size_t c = keep[kk];
            Z s = 0;
            for (std::size_t i = 0; i < r; ++i)
                s += v[i] * S.Qt(i, c);
            Z d = S.diag[c];
            s %= d;
            if (s < 0)
                s += d;
            w.push_back(s.get_si());
        }
        P.coords[e] = w;
    }
    P.generators.assign(keep.size(), -1);
    for (long e = 0; e < n; ++e) {
        auto const & w = P.coords[e];
        int nz = -1, cnt = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) {
                nz = static_cast<int>(i);
                ++cnt;
            }
        if (cnt == 1 && w[nz] == 1 && P.generators[nz] < 0)
            P.generators[nz] = e;
    }
    return P;
}

} // namespace shintani
