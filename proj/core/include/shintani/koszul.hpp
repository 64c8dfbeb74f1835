#pragma once

#include "shintani/arithmetic.hpp"

#include <map>
#include <string>
#include <vector>

namespace shintani {

/* sparse matrix over a number field K, stored by rows */
struct SparseMatrix {
    long rows = 0, cols = 0;
    std::vector<std::map<long, FieldElement>> data;

    SparseMatrix() = default;
    SparseMatrix(long r, long c) : rows(r), cols(c), data(static_cast<std::size_t>(r)) {}
    void set(NumberField const & K, long i, long j, FieldElement const & x);
};
SparseMatrix sparse_mul(NumberField const & K, SparseMatrix const & A, SparseMatrix const & B);
bool sparse_is_zero(SparseMatrix const & A);
long sparse_rank(NumberField const & K, SparseMatrix const & A);
SparseMatrix sparse_identity(NumberField const & K, long n);
SparseMatrix sparse_from_dense(NumberField const & K, std::vector<std::vector<Q>> const & m);

/* K-vector space with commuting invertible operators x_1 .. x_r (r = rank Delta) */
struct DeltaModule {
    NumberField K;
    long dim = 0;
    std::vector<SparseMatrix> action;
};
/* commuting and (for diagonal actions) invertible */
bool check_module(DeltaModule const & M);

/* cochains C^q = sum over q-subsets S of {0..r-1} of M, with
 * (d f)_{S + j} = sum_j (-1)^{#(i in S, i < j)} (x_j - 1) f_S */
struct KoszulComplex {
    int r = 0;
    std::vector<long> dims;                /* dim C^q */
    std::vector<SparseMatrix> d;           /* d[q] : C^q -> C^{q+1} */
    std::vector<std::vector<unsigned>> subsets; /* per degree, bitmasks in order */
};
KoszulComplex koszul_complex(DeltaModule const & M);
bool check_dd_zero(DeltaModule const & M, KoszulComplex const & C);
std::vector<long> koszul_cohomology_dims(DeltaModule const & M);

long binomial_long(long n, long k);

/* Sym^k of the standard representation: basis e^k (k_1 + .. + k_g = k),
 * eps acting by prod_r (eps^{tau_r})^{-k_r}, entries in F via tau_1 */
DeltaModule sym_module(NumberField const & F, UnitGroupPlus const & U, long k);
struct SymTateDims {
    std::vector<long> computed;
    std::vector<long> predicted; /* binom(g-1, m) if g | k, else 0 */
};
SymTateDims sym_tate_dims(NumberField const & F, UnitGroupPlus const & U, long k);

/* dimension table of H^m(U / F_+^x, Log^N), g | N */
struct LogCohomologyRow {
    int m = 0;
    long dim = 0;
    std::vector<std::pair<long, long>> weights; /* (Tate twist n of R(n), multiplicity) */
};
struct LogCohomologyTable {
    int g = 0;
    long N = 0;
    long h_plus = 1;
    std::vector<LogCohomologyRow> rows;      /* m = 0 .. 2g-1 */
    long top_minus_g = 0;                    /* R(-g) part of H^{2g-1} */
    long top_tower = 0;                      /* prod_{n <= N/g} R((n-1)g) part */
    long deligne_hom = 0;                    /* Hom(R(0), H^{2g-1}) */
    long deligne_ext = 0;                    /* Ext^1(R(0), H^{2g-2}) */
    long deligne_dim = 0;                    /* dim H^{2g-1}_D */
    bool plectic = false;
    long plectic_ext_g = 0; /* Ext^g(R(0_I), H^{g-1}) under the plectic hypotheses */
};
LogCohomologyTable log_cohomology_table(int g, long N, long h_plus, bool plectic = false);
std::string to_json_string(LogCohomologyTable const & T);

} // namespace shintani
