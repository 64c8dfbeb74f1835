#include "shintani/koszul.hpp"

#include "shintani/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace shintani {

void SparseMatrix::set(NumberField const &, long i, long j, FieldElement const & x)
{
    if (x.is_zero())
        data[i].erase(j);
    else
        data[i][j] = x;
}

SparseMatrix sparse_identity(NumberField const & K, long n)
{
    SparseMatrix I(n, n);
    for (long i = 0; i < n; ++i)
        I.set(K, i, i, K.one());
    return I;
}

SparseMatrix sparse_from_dense(NumberField const & K, std::vector<std::vector<Q>> const & m)
{
    long r = static_cast<long>(m.size()), c = r ? static_cast<long>(m[0].size()) : 0;
    SparseMatrix A(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j)
            if (sgn(m[i][j]) != 0)
                A.set(K, i, j, K.from_rational(m[i][j]));
    return A;
}

SparseMatrix sparse_mul(NumberField const & K, SparseMatrix const & A, SparseMatrix const & B)
{
    if (A.cols != B.rows)
        throw Error(ErrorCode::ConfigError, "matrix size mismatch");
    SparseMatrix C(A.rows, B.cols);
    for (long i = 0; i < A.rows; ++i) {
        std::map<long, FieldElement> row;
        for (auto const & [k, a] : A.data[i])
            for (auto const & [j, b] : B.data[k]) {
                auto it = row.find(j);
                FieldElement p = K.mul(a, b);
                if (it == row.end())
                    row.emplace(j, p);
                else
                    it->second = K.add(it->second, p);
            }
        for (auto & [j, x] : row)
            C.set(K, i, j, x);
    }
    return C;
}

bool sparse_is_zero(SparseMatrix const & A)
{
    for (auto const & r : A.data)
        if (!r.empty())
            return false;
    return true;
}

long sparse_rank(NumberField const & K, SparseMatrix const & A)
{
    /* row echelon form; pivots[col] holds a normalized row with leading entry 1 */
    std::map<long, std::map<long, FieldElement>> pivots;
    for (auto row : A.data) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto pv = pivots.find(lead->first);
            if (pv == pivots.end()) {
                FieldElement inv = K.inv(lead->second);
                for (auto & [j, x] : row)
                    x = K.mul(x, inv);
                long c = lead->first;
                pivots.emplace(c, std::move(row));
                break;
            }
            FieldElement f = lead->second;
            for (auto const & [j, x] : pv->second) {
                FieldElement y = K.mul(f, x);
                auto it = row.find(j);
                if (it == row.end()) {
                    row.emplace(j, K.neg(y));
                } else {
                    it->second = K.sub(it->second, y);
                    if (it->second.is_zero())
                        row.erase(it);
                }
            }
        }
    }
    return static_cast<long>(pivots.size());
}

bool check_module(DeltaModule const & M)
{
    NumberField const & K = M.K;
    for (auto const & X : M.action)
        if (X.rows != M.dim || X.cols != M.dim)
            return false;
    for (std::size_t i = 0; i < M.action.size(); ++i) {
        if (sparse_rank(K, M.action[i]) != M.dim)
            return false;
        for (std::size_t j = i + 1; j < M.action.size(); ++j) {
            auto AB = sparse_mul(K, M.action[i], M.action[j]);
            auto BA = sparse_mul(K, M.action[j], M.action[i]);
            for (long r = 0; r < M.dim; ++r)
                if (!(AB.data[r] == BA.data[r]))
                    return false;
        }
    }
    return true;
}

long binomial_long(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

KoszulComplex koszul_complex(DeltaModule const & M)
{
    NumberField const & K = M.K;
    KoszulComplex C;
    C.r = static_cast<int>(M.action.size());
    int r = C.r;
    C.subsets.assign(r + 1, {});
    for (unsigned S = 0; S < (1u << r); ++S)
        C.subsets[std::popcount(S)].push_back(S);
    for (int q = 0; q <= r; ++q)
        C.dims.push_back(static_cast<long>(C.subsets[q].size()) * M.dim);
    std::vector<SparseMatrix> xm1;
    for (auto const & X : M.action) {
        SparseMatrix Y = X;
        for (long i = 0; i < M.dim; ++i) {
            auto it = Y.data[i].find(i);
            FieldElement v = it == Y.data[i].end() ? K.zero() : it->second;
            Y.set(K, i, i, K.sub(v, K.one()));
        }
        xm1.push_back(std::move(Y));
    }
    for (int q = 0; q < r; ++q) {
        SparseMatrix D(C.dims[q + 1], C.dims[q]);
        auto const & src = C.subsets[q];
        auto const & dst = C.subsets[q + 1];
        for (std::size_t a = 0; a < src.size(); ++a) {
            unsigned S = src[a];
            for (int j = 0; j < r; ++j) {
                if (S & (1u << j))
                    continue;
                unsigned T = S | (1u << j);
                long b = std::find(dst.begin(), dst.end(), T) - dst.begin();
                bool neg = std::popcount(S & ((1u << j) - 1)) % 2 != 0;
                for (long i = 0; i < M.dim; ++i)
                    for (auto const & [c, x] : xm1[j].data[i])
                        D.set(K, b * M.dim + i, static_cast<long>(a) * M.dim + c, neg ? K.neg(x) : x);
            }
        }
        C.d.push_back(std::move(D));
    }
    return C;
}

bool check_dd_zero(DeltaModule const & M, KoszulComplex const & C)
{
    for (std::size_t q = 0; q + 1 < C.d.size(); ++q)
        if (!sparse_is_zero(sparse_mul(M.K, C.d[q + 1], C.d[q])))
            return false;
    return true;
}

std::vector<long> koszul_cohomology_dims(DeltaModule const & M)
{
    auto C = koszul_complex(M);
    std::vector<long> rk;
    for (auto const & D : C.d)
        rk.push_back(sparse_rank(M.K, D));
    std::vector<long> h;
    for (int q = 0; q <= C.r; ++q) {
        long in = q > 0 ? rk[q - 1] : 0;
        long out = q < C.r ? rk[q] : 0;
        h.push_back(C.dims[q] - in - out);
    }
    return h;
}

/* multi-indices of total degree k in g parts, lexicographic */
static void compositions(int g, long k, std::vector<long> & cur, std::vector<std::vector<long>> & out)
{
    if (static_cast<int>(cur.size()) == g - 1) {
        cur.push_back(k);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long a = 0; a <= k; ++a) {
        cur.push_back(a);
        compositions(g, k - a, cur, out);
        cur.pop_back();
    }
}

DeltaModule sym_module(NumberField const & F, UnitGroupPlus const & U, long k)
{
    int g = F.degree();
    if (g > 1 && !F.is_galois())
        throw Error(ErrorCode::NeedGaloisClosure, "unit conjugates need a Galois field");
    std::vector<std::vector<long>> idx;
    std::vector<long> cur;
    compositions(g, k, cur, idx);
    DeltaModule M{F, static_cast<long>(idx.size()), {}};
    for (auto const & eps : U.generators) {
        std::vector<FieldElement> conj;
        for (int r = 0; r < g; ++r)
            conj.push_back(g == 1 ? eps : F.apply_automorphism(r, eps));
        SparseMatrix X(M.dim, M.dim);
        for (long i = 0; i < M.dim; ++i) {
            FieldElement v = F.one();
            for (int r = 0; r < g; ++r)
                v = F.mul(v, F.pow(conj[r], -idx[i][r]));
            X.set(F, i, i, v);
        }
        M.action.push_back(std::move(X));
    }
    return M;
}

SymTateDims sym_tate_dims(NumberField const & F, UnitGroupPlus const & U, long k)
{
    if (k < 0)
        throw Error(ErrorCode::ConfigError, "k must be non-negative");
    int g = F.degree();
    SymTateDims R;
    R.computed = koszul_cohomology_dims(sym_module(F, U, k));
    for (int m = 0; m < g; ++m)
        R.predicted.push_back(k % g == 0 ? binomial_long(g - 1, m) : 0);
    return R;
}

LogCohomologyTable log_cohomology_table(int g, long N, long h_plus, bool plectic)
{
    if (g < 1 || N < 0 || N % g != 0)
        throw Error(ErrorCode::NotDivisible, "table needs g | N");
    LogCohomologyTable T;
    T.g = g;
    T.N = N;
    T.h_plus = h_plus;
    T.plectic = plectic;
    for (int m = 0; m < 2 * g; ++m) {
        LogCohomologyRow row;
        row.m = m;
        if (m < g) {
            long c = h_plus * binomial_long(g - 1, m);
            if (c)
                row.weights.push_back({N, c});
        }
        if (m >= g && m < 2 * g - 1) {
            long c = h_plus * binomial_long(g - 1, m - g);
            if (c)
                row.weights.push_back({-g, c});
        }
        if (m == 2 * g - 1) {
            row.weights.push_back({-g, h_plus});
            for (long n = 0; n <= N / g; ++n)
                row.weights.push_back({(n - 1) * g, h_plus});
        }
        for (auto const & w : row.weights)
            row.dim += w.second;
        T.rows.push_back(row);
    }
    T.top_minus_g = h_plus;
    T.top_tower = h_plus * (N / g + 1);
    for (auto const & w : T.rows[2 * g - 1].weights)
        if (w.first == 0)
            T.deligne_hom += w.second;
    /* Ext^1(R(0), R(n)) is one-dimensional exactly for n > 0 */
    for (auto const & w : T.rows[2 * g - 2].weights)
        if (w.first > 0)
            T.deligne_ext += w.second;
    T.deligne_dim = T.deligne_hom + T.deligne_ext;
    if (plectic)
        for (auto const & w : T.rows[g - 1].weights)
            if (w.first > 0)
                T.plectic_ext_g += w.second;
    return T;
}

std::string to_json_string(LogCohomologyTable const & T)
{
    std::ostringstream os;
    os << "{\"g\":" << T.g << ",\"N\":" << T.N << ",\"h_plus\":" << T.h_plus << ",\"dims\":[";
    for (std::size_t i = 0; i < T.rows.size(); ++i)
        os << (i ? "," : "") << T.rows[i].dim;
    os << "],\"deligne\":" << T.deligne_dim << "}";
    return os.str();
}

} // namespace shintani
