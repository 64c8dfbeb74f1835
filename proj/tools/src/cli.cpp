#include "shintani_cli/cli.hpp"

#include "shintani/errors.hpp"
#include "shintani/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace shintani::cli {

namespace fs = std::filesystem;

std::vector<std::string> const kTasks = {"field",   "cones", "lerch-neg",   "lerch-pos",  "gauss",     "hecke",
                                         "funeq",   "imprimitive", "cohomology", "ler-vector", "verify-all"};

/* ---------------- config ---------------- */

static void check_keys(json const & j, std::set<std::string> const & allowed, std::string const & where)
{
    if (!j.is_object())
        throw Error(ErrorCode::ConfigError, where + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw Error(ErrorCode::ConfigError, "unknown key '" + it.key() + "' in " + where);
}

static json read_json_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ConfigError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (json::exception const & e) {
        throw Error(ErrorCode::ConfigError, path + ": " + e.what());
    }
}

JobConfig parse_config(json const & j, Options const & opt)
{
    check_keys(j, {"field", "modulus", "task", "params", "output", "cache", "prec", "prime_bound"}, "config");
    JobConfig c;
    c.echo = j;
    c.task = opt.command;
    if (j.contains("task") && j.at("task").get<std::string>() != opt.command)
        throw Error(ErrorCode::ConfigError, "config task '" + j.at("task").get<std::string>() +
                                                "' differs from the subcommand '" + opt.command + "'");
    if (std::find(kTasks.begin(), kTasks.end(), c.task) == kTasks.end())
        throw Error(ErrorCode::ConfigError, "unknown task " + c.task);
    if (!j.contains("field"))
        throw Error(ErrorCode::ConfigError, "config needs a field block");
    c.field = j.at("field");
    check_keys(c.field,
               {"min_poly", "basis", "units", "units_full", "cones", "units_file", "units_full_file", "cones_file"},
               "field");
    if (!c.field.contains("min_poly"))
        throw Error(ErrorCode::ConfigError, "field needs min_poly");
    fs::path base = opt.config_path.empty() ? fs::path(".") : fs::path(opt.config_path).parent_path();
    for (std::string k : {"units", "units_full", "cones"}) {
        std::string fk = k + "_file";
        if (c.field.contains(fk)) {
            if (c.field.contains(k))
                throw Error(ErrorCode::ConfigError, "both " + k + " and " + fk + " given");
            c.field[k] = read_json_file((base / c.field.at(fk).get<std::string>()).string());
            c.field.erase(fk);
        }
    }
    c.modulus = j.value("modulus", json::array({1}));
    if (!c.modulus.is_array())
        c.modulus = json::array({c.modulus});
    c.params = j.value("params", json::object());
    check_keys(c.params,
               {"k", "k_max", "s", "n", "N", "h_plus", "plectic", "tol", "character", "point", "ideal", "p",
                "samples", "seed", "method", "decomposition"},
               "params");
    c.output = j.value("output", std::string());
    c.cache_dir = j.value("cache", std::string());
    if (j.contains("prec"))
        c.prec = j.at("prec").get<unsigned>();
    if (j.contains("prime_bound"))
        c.prime_bound = j.at("prime_bound").get<long>();
    if (opt.prec)
        c.prec = *opt.prec;
    if (opt.prime_bound)
        c.prime_bound = *opt.prime_bound;
    if (opt.out)
        c.output = *opt.out;
    if (opt.cache)
        c.cache_dir = *opt.cache;
    return c;
}

JobConfig load_config(Options const & opt)
{
    if (opt.config_path.empty())
        throw Error(ErrorCode::ConfigError, "--config is required");
    return parse_config(read_json_file(opt.config_path), opt);
}

/* ---------------- context ---------------- */

namespace {

struct Context {
    NumberField F;
    UnitGroupPlus U;
    FractionalIdeal g;
    std::optional<ShintaniDecomposition> user;
    std::optional<RayClassGroup> G_;
    json const & params;
    long prime_bound;
    ZetaMethod method = ZetaMethod::Auto;
    DecompositionMethod dmethod = DecompositionMethod::Hull;

    RayClassGroup const & G()
    {
        if (!G_)
            G_ = ray_class_group(F, U, g);
        return *G_;
    }
};

NumberField make_field(json const & f)
{
    std::vector<Z> mp;
    for (auto const & c : f.at("min_poly")) {
        if (c.is_number_integer())
            mp.push_back(Z(c.get<long>()));
        else if (c.is_string())
            mp.push_back(Z(c.get<std::string>()));
        else
            throw Error(ErrorCode::ConfigError, "min_poly entries must be integers");
    }
    std::optional<QMatrix> basis;
    if (f.contains("basis")) {
        auto const & b = f.at("basis");
        std::size_t g = mp.size() - 1;
        if (b.size() != g)
            throw Error(ErrorCode::ConfigError, "basis needs one row per degree");
        QMatrix B(g, g);
        for (std::size_t i = 0; i < g; ++i) {
            if (b[i].size() != g)
                throw Error(ErrorCode::ConfigError, "basis rows need one entry per degree");
            for (std::size_t j = 0; j < g; ++j)
                B(i, j) = parse_q(b[i][j]);
        }
        basis = B;
    }
    return NumberField::create(mp, basis);
}

long get_long(json const & p, char const * k, long dflt)
{
    return p.contains(k) ? p.at(k).get<long>() : dflt;
}

double get_double(json const & p, char const * k, double dflt)
{
    return p.contains(k) ? p.at(k).get<double>() : dflt;
}

std::vector<long> get_longs(json const & p, char const * k, std::vector<long> dflt)
{
    if (!p.contains(k))
        return dflt;
    auto const & v = p.at(k);
    if (v.is_array())
        return v.get<std::vector<long>>();
    return {v.get<long>()};
}

template <class Fn>
void parallel_for(long n, int jobs, Fn f)
{
    if (jobs <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<long>(jobs, n); ++t)
        pool.emplace_back([&]() {
            for (long i; (i = next++) < n;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    for (auto & th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

ShintaniDecomposition decomposition_for(Context & C, FractionalIdeal const & a)
{
    if (C.user && C.user->ideal == a)
        return *C.user;
    return decompose(C.F, a, C.U, C.dmethod);
}

FractionalIdeal ideal_param(Context & C, char const * key)
{
    if (!C.params.contains(key))
        return unit_ideal(C.F);
    return ideal_from_generators(C.F, parse_elements(C.F, C.params.at(key)));
}

/* explicit point, or the torsor T_0[g] (or the trivial point when g = 1 and
 * ray class groups are unavailable) */
std::vector<TorsionPoint> selected_points(Context & C, json & note)
{
    if (C.params.contains("point")) {
        std::vector<Q> r;
        for (auto const & x : C.params.at("point"))
            r.push_back(parse_q(x));
        return {make_point(C.F, ideal_param(C, "ideal"), C.g, r)};
    }
    if (C.F.degree() > 2) {
        if (!(C.g == unit_ideal(C.F)))
            throw Error(ErrorCode::Unsupported, "torsors need ray class groups (degree <= 2); give params.point");
        note = "degree > 2: only the trivial point on O is used";
        return {make_point(C.F, unit_ideal(C.F), C.g, std::vector<Q>(C.F.degree(), Q(0)))};
    }
    return classes_T0(C.F, C.G()).points;
}

std::vector<HeckeCharacter> selected_characters(Context & C, RayClassGroup const & G, bool primitive_only)
{
    if (C.params.contains("character")) {
        auto psi = make_character(G, C.F, C.params.at("character").get<std::vector<long>>());
        if (primitive_only && !is_primitive(psi, G))
            throw Error(ErrorCode::NotPrimitive, "the selected character is not primitive");
        return {psi};
    }
    std::vector<HeckeCharacter> out;
    for (auto const & psi : characters(G, C.F))
        if (!primitive_only || is_primitive(psi, G))
            out.push_back(psi);
    return out;
}

json character_json(HeckeCharacter const & psi)
{
    return {{"exps", psi.exps}, {"m", psi.m}, {"u", psi.u}, {"conductor", ideal_json(psi.conductor)}};
}

json cyc_cache_json(CycValue const & v)
{
    json c = json::array();
    for (auto const & q : v.coeffs())
        c.push_back(to_string(q));
    return {{"m", v.conductor()}, {"c", c}};
}

CycValue cyc_from_cache(json const & j)
{
    long m = j.at("m").get<long>();
    CycValue v(m);
    long e = 0;
    for (auto const & c : j.at("c")) {
        Q q = parse_rational(c.get<std::string>());
        if (sgn(q) != 0)
            v += CycValue::root_of_unity(m, e) * q;
        ++e;
    }
    return v;
}

std::string units_key(NumberField const & F, UnitGroupPlus const & U)
{
    std::string s;
    for (auto const & e : U.generators)
        s += to_string(F, e) + ";";
    return s;
}

/* exact Lerch values for a list of points, through the cache, in parallel */
std::vector<CycValue> lerch_exact_many(Context & C, Cache & cache, std::vector<TorsionPoint> const & pts, long k,
                                       int jobs)
{
    std::vector<CycValue> out(pts.size());
    std::vector<std::string> keys(pts.size());
    std::vector<long> todo;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        keys[i] = "lerch-neg|" + C.F.id() + "|" + units_key(C.F, C.U) + "|" + to_string(pts[i]) + "|k=" +
                  std::to_string(k) + "|m=" + std::to_string(static_cast<int>(C.method)) +
                  (C.user ? "|user" : "|auto");
        if (auto hit = cache.get(keys[i]))
            out[i] = cyc_from_cache(*hit);
        else
            todo.push_back(static_cast<long>(i));
    }
    /* decompositions are shared per ideal */
    std::vector<std::pair<FractionalIdeal, ShintaniDecomposition>> decs;
    for (long i : todo) {
        bool have = false;
        for (auto const & d : decs)
            have = have || d.first == pts[i].ideal;
        if (!have)
            decs.emplace_back(pts[i].ideal, decomposition_for(C, pts[i].ideal));
    }
    parallel_for(static_cast<long>(todo.size()), jobs, [&](long t) {
        long i = todo[t];
        for (auto const & d : decs)
            if (d.first == pts[i].ideal)
                out[i] = lerch_nonpositive(C.F, C.U, pts[i], k, d.second, C.method);
    });
    for (long i : todo)
        cache.put(keys[i], cyc_cache_json(out[i]));
    return out;
}

/* ---------------- tasks ---------------- */

TaskResult task_field(Context & C)
{
    TaskResult R;
    R.provenance = "exact";
    NumberField const & F = C.F;
    json r;
    r["degree"] = F.degree();
    json mp = json::array();
    for (auto const & c : F.min_poly())
        mp.push_back(c.get_str());
    r["min_poly"] = mp;
    r["discriminant"] = F.discriminant().get_str();
    json basis = json::array();
    for (int i = 0; i < F.degree(); ++i)
        basis.push_back(element_json(FieldElement{F.to_power_basis(F.basis_element(i))}));
    r["basis_power_coords"] = basis;
    json emb = json::array();
    for (int t = 0; t < F.degree(); ++t)
        emb.push_back(fmt(F.embed_ld(F.theta(), t)));
    r["theta_embeddings"] = emb;
    r["galois"] = F.is_galois();
    json units = json::array();
    for (auto const & e : C.U.generators)
        units.push_back(element_json(e));
    r["totally_positive_units"] = units;
    json full = json::array();
    for (auto const & e : C.U.fundamental)
        full.push_back(element_json(e));
    r["fundamental_units"] = full;
    r["regulator_delta"] = fmt(regulator(F, C.U));
    if (F.degree() <= 2) {
        r["class_number_one"] = class_number_is_one(F, C.U);
        auto N = ray_class_group(F, C.U, unit_ideal(F));
        r["narrow_class_number"] = N.size();
        r["narrow_class_group"] = N.group.orders;
    }
    R.results = r;
    return R;
}

TaskResult task_cones(Context & C)
{
    TaskResult R;
    R.provenance = "exact";
    FractionalIdeal a = ideal_param(C, "ideal");
    auto D = decomposition_for(C, a);
    json cones = json::array();
    bool ok = true;
    for (auto const & s : D.cones) {
        json gens = json::array();
        for (auto const & x : s.gens)
            gens.push_back(element_json(x));
        long nP = static_cast<long>(parallelepiped_points(C.F, a, s, false).size());
        long nB = static_cast<long>(parallelepiped_points(C.F, a, s, true).size());
        bool inv = nP == nB && Z(nP) == s.index();
        ok = ok && inv;
        cones.push_back({{"generators", gens},
                         {"sign", s.sign},
                         {"index", s.index().get_str()},
                         {"csign", s.csign},
                         {"parallelepiped_points", nP},
                         {"breve_points", nB},
                         {"invariant_ok", inv}});
    }
    long samples = get_long(C.params, "samples", 2000);
    auto S = verify_by_sampling(C.F, C.U, D, samples, static_cast<std::uint64_t>(get_long(C.params, "seed", 1)));
    ok = ok && S.ok();
    R.results = {{"ideal", ideal_json(a)},
                 {"method", D.method},
                 {"cones", cones},
                 {"sampling", {{"samples", S.samples}, {"failures", S.failures}, {"ok", S.ok()}}}};
    R.verified = ok;
    return R;
}

TaskResult task_lerch_neg(Context & C, Cache & cache, int jobs)
{
    TaskResult R;
    R.provenance = "exact";
    if (!C.params.contains("k"))
        throw Error(ErrorCode::ConfigError, "lerch-neg needs params.k");
    json note;
    auto pts = selected_points(C, note);
    json out = json::array();
    for (long k : get_longs(C.params, "k", {})) {
        if (k < 0)
            throw Error(ErrorCode::ConfigError, "k must be non-negative");
        auto vals = lerch_exact_many(C, cache, pts, k, jobs);
        for (std::size_t i = 0; i < pts.size(); ++i)
            out.push_back({{"point", point_json(pts[i])}, {"k", k}, {"s", -k}, {"value", exact_json(vals[i])}});
    }
    R.results = {{"values", out}};
    if (!note.is_null())
        R.results["note"] = note;
    return R;
}

TaskResult task_lerch_pos(Context & C, int jobs)
{
    TaskResult R;
    R.provenance = "numeric";
    double s = get_double(C.params, "s", 0);
    if (!(s > 1))
        throw Error(ErrorCode::ConfigError, "lerch-pos needs params.s > 1");
    double tol = get_double(C.params, "tol", 1e-9);
    json note;
    auto pts = selected_points(C, note);
    std::vector<std::complex<long double>> vals(pts.size());
    std::vector<std::pair<FractionalIdeal, PartialSums>> sums;
    for (auto const & p : pts) {
        bool have = false;
        for (auto const & q : sums)
            have = have || q.first == p.ideal;
        if (!have)
            sums.emplace_back(p.ideal,
                              lerch_partial_sums(C.F, C.U, decomposition_for(C, p.ideal), C.g, s, truncation_for(s, tol)));
    }
    parallel_for(static_cast<long>(pts.size()), jobs, [&](long i) {
        for (auto const & q : sums)
            if (q.first == pts[i].ideal)
                vals[i] = lerch_numeric(C.F, C.U, pts[i], q.second);
    });
    json out = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i)
        out.push_back({{"point", point_json(pts[i])}, {"s", s}, {"value", numeric_json(vals[i], tol)}});
    R.results = {{"values", out}};
    if (!note.is_null())
        R.results["note"] = note;
    R.tolerances = {{"truncation_tol", tol}};
    return R;
}

TaskResult task_gauss(Context & C)
{
    TaskResult R;
    R.provenance = "exact";
    auto const & G = C.G();
    auto T = classes_T0(C.F, G);
    Q Ng = 1;
    for (std::size_t i = 0; i < G.H.rows; ++i)
        Ng *= Q(G.H(i, i));
    json out = json::array();
    for (auto const & psi : selected_characters(C, G, true)) {
        auto pb = conjugate(G, psi);
        CycValue target = psi_O_minus_one(G, psi) * Ng;
        json ids = json::array();
        bool ok = true;
        for (auto const & eta : T.points) {
            CycValue a = gauss_sum(C.F, G, psi, eta), b = gauss_sum(C.F, G, pb, eta);
            bool good = a * b == target;
            ok = ok && good;
            ids.push_back({{"point", point_json(eta)}, {"gauss", exact_json(a)}, {"identity_ok", good}});
        }
        R.verified = R.verified && ok;
        out.push_back({{"character", character_json(psi)},
                       {"gauss_xi_can", exact_json(gauss_sum(C.F, G, psi, xi_can(C.F, C.g)))},
                       {"psi_O_minus_one", exact_json(psi_O_minus_one(G, psi))},
                       {"points", ids},
                       {"identity_ok", ok}});
    }
    R.results = {{"characters", out}, {"modulus_norm", to_string(Ng)}};
    return R;
}

TaskResult task_hecke(Context & C)
{
    TaskResult R;
    auto const & G = C.G();
    bool exact = C.params.contains("k"), numeric = C.params.contains("s");
    if (!exact && !numeric)
        throw Error(ErrorCode::ConfigError, "hecke needs params.k (value at -k) or params.s (> 1)");
    R.provenance = exact && numeric ? "mixed" : exact ? "exact" : "numeric";
    double tol = get_double(C.params, "tol", 1e-6);
    TorsionPoint eta = xi_can(C.F, C.g);
    std::optional<TorsorLerch> TL;
    double s = get_double(C.params, "s", 0);
    if (numeric) {
        if (!(s > 1))
            throw Error(ErrorCode::ConfigError, "params.s must exceed 1");
        TL = torsor_lerch_numeric(C.F, G, eta, s, std::min(1e-11, tol * 1e-3));
    }
    json out = json::array();
    for (auto const & psi : selected_characters(C, G, true)) {
        json e = {{"character", character_json(psi)}};
        if (exact)
            for (long k : get_longs(C.params, "k", {}))
                e["exact"].push_back({{"s", -k}, {"value", exact_json(hecke_exact(C.F, G, psi, eta, k))}});
        if (numeric) {
            auto h = hecke_numeric(C.F, G, psi, *TL);
            auto E = euler_product(C.F, G, psi, s, C.prime_bound);
            std::complex<long double> ev(to_double(E.value.re), to_double(E.value.im));
            long double err = std::abs(h - ev), rel = err / std::max(1e-300L, std::abs(ev));
            bool ok = rel <= tol;
            R.verified = R.verified && ok;
            e["numeric"] = {{"s", s},
                            {"lerch_assembly", numeric_json(h, tol * 1e-3)},
                            {"euler_product", numeric_json(E.value, E.tail)},
                            {"abs_err", fmt(err)},
                            {"rel_err", fmt(rel)},
                            {"ok", ok}};
        }
        out.push_back(e);
    }
    R.results = {{"characters", out}, {"eta", point_json(eta)}};
    R.tolerances = {{"rel_tol", tol}, {"prime_bound", C.prime_bound}};
    return R;
}

TaskResult task_funeq(Context & C)
{
    TaskResult R;
    R.provenance = "mixed";
    auto const & G = C.G();
    long k = get_long(C.params, "k", 2);
    double tol = get_double(C.params, "tol", 1e-6);
    bool explicit_char = C.params.contains("character");
    json out = json::array();
    for (auto const & psi : selected_characters(C, G, true)) {
        bool crit = (k % 2 == 0 && psi.u == 0) || (k % 2 != 0 && psi.u == C.F.degree());
        if (!crit && !explicit_char)
            continue;
        auto rep = functional_equation_check(C.F, G, psi, k, C.prime_bound, tol);
        R.verified = R.verified && rep.ok;
        out.push_back({{"character", character_json(psi)},
                       {"k", k},
                       {"lhs", numeric_json(rep.lhs, 0)},
                       {"rhs", numeric_json(rep.rhs, rep.abs_err)},
                       {"abs_err", fmt(rep.abs_err)},
                       {"rel_err", fmt(rep.rel_err)},
                       {"exact", true},
                       {"lhs_provenance", rep.lhs_source},
                       {"rhs_provenance", rep.rhs_source},
                       {"root_number", rep.info.count("root_number") ? rep.info.at("root_number") : ""},
                       {"ok", rep.ok}});
    }
    R.results = {{"reports", out}};
    R.tolerances = {{"rel_tol", tol}, {"prime_bound", C.prime_bound}};
    return R;
}

TaskResult task_imprimitive(Context & C)
{
    TaskResult R;
    if (!C.params.contains("p"))
        throw Error(ErrorCode::ConfigError, "imprimitive needs params.p (generators of the prime)");
    FractionalIdeal p = ideal_from_generators(C.F, parse_elements(C.F, C.params.at("p")));
    auto const & G0 = C.G();
    RayClassGroup G1 = ray_class_group(C.F, C.U, multiply(C.F, p, C.g));
    TorsionPoint xi1 = xi_can(C.F, G1.modulus);
    double tol = get_double(C.params, "tol", 1e-6);
    std::vector<long> ks = get_longs(C.params, "k", C.params.contains("s") ? std::vector<long>{} : std::vector<long>{1, 2});
    R.provenance = C.params.contains("s") ? (ks.empty() ? "numeric" : "mixed") : "exact";
    json out = json::array();
    for (auto const & psi0 : selected_characters(C, G0, false)) {
        json e = {{"character", character_json(psi0)}};
        for (long k : ks) {
            auto r = imprimitive_check(C.F, G0, G1, p, psi0, xi1, k);
            R.verified = R.verified && r.ok;
            e["exact"].push_back(
                {{"s", -k}, {"lhs", exact_json(r.lhs_exact)}, {"rhs", exact_json(r.rhs_exact)}, {"ok", r.ok}});
        }
        if (C.params.contains("s")) {
            double s = get_double(C.params, "s", 2);
            auto r = imprimitive_check(C.F, G0, G1, p, psi0, xi1, -1, s, tol);
            R.verified = R.verified && r.ok;
            e["numeric"] = {{"s", s},
                            {"lhs", numeric_json(r.lhs, tol)},
                            {"rhs", numeric_json(r.rhs, tol)},
                            {"abs_err", fmt(r.abs_err)},
                            {"ok", r.ok}};
        }
        out.push_back(e);
    }
    R.results = {{"p", ideal_json(p)}, {"g1", ideal_json(G1.modulus)}, {"xi1", point_json(xi1)}, {"characters", out}};
    R.tolerances = {{"abs_tol", tol}};
    return R;
}

json table_json(LogCohomologyTable const & T)
{
    json rows = json::array();
    for (auto const & r : T.rows) {
        json w = json::array();
        for (auto const & [n, c] : r.weights)
            w.push_back({{"twist", n}, {"multiplicity", c}});
        rows.push_back({{"m", r.m}, {"dim", r.dim}, {"weights", w}});
    }
    json j = {{"g", T.g},
              {"N", T.N},
              {"h_plus", T.h_plus},
              {"rows", rows},
              {"top_minus_g", T.top_minus_g},
              {"top_tower", T.top_tower},
              {"deligne_hom", T.deligne_hom},
              {"deligne_ext", T.deligne_ext},
              {"deligne_dim", T.deligne_dim}};
    if (T.plectic)
        j["plectic"] = {{"assumes_plectic_hypotheses", true}, {"ext_g", T.plectic_ext_g}};
    return j;
}

TaskResult task_cohomology(Context & C)
{
    TaskResult R;
    R.provenance = "exact";
    int g = C.F.degree();
    long kmax = get_long(C.params, "k_max", 12);
    json sym = json::array();
    for (long k = 0; k <= kmax; ++k) {
        auto M = sym_module(C.F, C.U, k);
        auto K = koszul_complex(M);
        bool dd = check_dd_zero(M, K);
        auto d = sym_tate_dims(C.F, C.U, k);
        bool ok = dd && d.computed == d.predicted;
        R.verified = R.verified && ok;
        sym.push_back({{"k", k}, {"computed", d.computed}, {"predicted", d.predicted}, {"dd_zero", dd}, {"ok", ok}});
    }
    long h;
    if (C.params.contains("h_plus"))
        h = C.params.at("h_plus").get<long>();
    else if (g <= 2)
        h = ray_class_group(C.F, C.U, unit_ideal(C.F)).size();
    else
        throw Error(ErrorCode::ConfigError, "degree > 2 needs params.h_plus");
    bool plectic = C.params.value("plectic", false);
    json tables = json::array();
    for (long N : get_longs(C.params, "N", {0, static_cast<long>(g), 2L * g}))
        tables.push_back(table_json(log_cohomology_table(g, N, h, plectic)));
    R.results = {{"sym_tate", sym}, {"log_tables", tables}};
    return R;
}

TaskResult task_ler_vector(Context & C)
{
    TaskResult R;
    R.provenance = "numeric";
    if (C.F.degree() > 2)
        throw Error(ErrorCode::Unsupported, "ler-vector needs the torsor (degree <= 2)");
    double tol = get_double(C.params, "tol", 1e-10);
    auto T = classes_T0(C.F, C.G());
    json out = json::array();
    for (long n : get_longs(C.params, "n", {2, 3})) {
        for (auto const & e : ler_vector(C.F, T, n, tol)) {
            bool ok = std::fabs(e.scaled.imag()) <= 1e-10L;
            R.verified = R.verified && ok;
            out.push_back({{"n", n},
                           {"point", point_json(e.eta)},
                           {"lerch", numeric_json(e.lerch, tol)},
                           {"entry", numeric_json(e.scaled, e.error)},
                           {"real_ok", ok}});
        }
    }
    R.results = {{"entries", out}, {"parity_rule", "Re if (n-1)g even, i Im otherwise"}};
    R.tolerances = {{"truncation_tol", tol}, {"imag_tol", 1e-10}};
    return R;
}

TaskResult task_verify_all(Context & C)
{
    TaskResult R;
    R.provenance = "mixed";
    json checks = json::array();
    auto record = [&](std::string const & name, std::function<json()> f) {
        try {
            json d = f();
            bool ok = d.at("ok").get<bool>();
            R.verified = R.verified && ok;
            d["name"] = name;
            checks.push_back(d);
        } catch (Error const & e) {
            if (e.code() == ErrorCode::Unsupported || e.code() == ErrorCode::NeedUserCones) {
                checks.push_back({{"name", name}, {"skipped", e.what()}});
                return;
            }
            throw;
        }
    };
    NumberField const & F = C.F;
    int g = F.degree();
    record("sampling", [&]() {
        auto D = decomposition_for(C, unit_ideal(F));
        auto S = verify_by_sampling(F, C.U, D, 500, 7);
        return json{{"ok", S.ok()}, {"samples", S.samples}, {"failures", S.failures}};
    });
    record("parallelepiped", [&]() {
        auto a = unit_ideal(F);
        bool ok = true;
        for (auto const & s : decomposition_for(C, a).cones) {
            auto n0 = parallelepiped_points(F, a, s, false).size(), n1 = parallelepiped_points(F, a, s, true).size();
            ok = ok && n0 == n1 && Z(static_cast<long>(n0)) == s.index();
        }
        return json{{"ok", ok}};
    });
    if (g > 2) {
        checks.push_back({{"name", "torsor checks"}, {"skipped", "degree > 2"}});
        R.results = {{"checks", checks}};
        return R;
    }
    auto const & G = C.G();
    record("gauss_identity", [&]() {
        auto T = classes_T0(F, G);
        Q Ng = 1;
        for (std::size_t i = 0; i < G.H.rows; ++i)
            Ng *= Q(G.H(i, i));
        bool ok = true;
        for (auto const & psi : characters(G, F)) {
            if (!is_primitive(psi, G))
                continue;
            auto pb = conjugate(G, psi);
            for (auto const & eta : T.points)
                ok = ok && gauss_sum(F, G, psi, eta) * gauss_sum(F, G, pb, eta) == psi_O_minus_one(G, psi) * Ng;
        }
        return json{{"ok", ok}};
    });
    record("functional_equation_trivial_k2", [&]() {
        auto N = ray_class_group(F, C.U, unit_ideal(F));
        auto rep = functional_equation_check(F, N, characters(N, F)[0], 2, C.prime_bound);
        return json{{"ok", rep.ok}, {"rel_err", fmt(rep.rel_err)}};
    });
    if (g == 2) {
        record("decomposition_independence", [&]() {
            auto T = classes_T0(F, G);
            bool ok = true;
            for (auto const & eta : T.points) {
                auto D1 = decompose(F, eta.ideal, C.U, DecompositionMethod::Hull);
                auto D2 = decompose(F, eta.ideal, C.U, DecompositionMethod::Single);
                for (long k = 0; k <= 2; ++k)
                    ok = ok && lerch_nonpositive(F, C.U, eta, k, D1) == lerch_nonpositive(F, C.U, eta, k, D2);
            }
            return json{{"ok", ok}, {"points", T.points.size()}};
        });
        record("cocycle", [&]() {
            std::mt19937_64 rng(11);
            auto a = unit_ideal(F);
            FieldElement eps = C.U.generators[0];
            bool ok = true;
            for (int t = 0; t < 10; ++t) {
                std::vector<FieldElement> tri;
                for (int j = 0; j < 3; ++j) {
                    FieldElement x;
                    long u, v;
                    do {
                        u = static_cast<long>(rng() % 13) - 3;
                        v = static_cast<long>(rng() % 13) - 6;
                        x = FieldElement{{Q(u), Q(v)}};
                    } while (std::gcd(u, v) != 1 || !F.is_totally_positive(x));
                    tri.push_back(F.mul(x, F.pow(eps, static_cast<long>(rng() % 3))));
                }
                std::vector<std::vector<Q>> pts;
                for (int j = 0; j < 5; ++j)
                    pts.push_back({Q(static_cast<long>(rng() % 11) + 2) / Q(3), Q(static_cast<long>(rng() % 11) + 2) / Q(5)});
                try {
                    ok = ok && cocycle_check(F, a, tri, pts);
                } catch (Error const & e) {
                    if (e.code() != ErrorCode::PoleAtTestPoint && e.code() != ErrorCode::DegenerateCone)
                        throw;
                }
            }
            return json{{"ok", ok}};
        });
    }
    record("hecke_vs_euler_s3", [&]() {
        long double worst = 0;
        auto eta = xi_can(F, C.g);
        auto TL = torsor_lerch_numeric(F, G, eta, 3.0);
        for (auto const & psi : characters(G, F)) {
            if (!is_primitive(psi, G))
                continue;
            auto h = hecke_numeric(F, G, psi, TL);
            auto E = euler_product(F, G, psi, 3.0, std::min(C.prime_bound, 200000L));
            std::complex<long double> ev(to_double(E.value.re), to_double(E.value.im));
            worst = std::max(worst, std::abs(h - ev) / std::abs(ev));
        }
        return json{{"ok", worst <= 1e-6L}, {"worst_rel_err", fmt(worst)}};
    });
    R.results = {{"checks", checks}};
    return R;
}

json conventions()
{
    return {{"tau_ordering", "real embeddings in ascending order of the image of the generator"},
            {"breve_rule", "x_i > 0, or x_i = 0 and c_i <= 0, where A c = e_{tau_g}"},
            {"torsion_point", "xi(alpha) = exp(2 pi i <r, coords of alpha in the HNF basis of the ideal>)"},
            {"xi_can", "exp(-2 pi i Tr) on (g D)^{-1}"},
            {"cyclotomic", "exact values in Q(zeta_m), zeta_m = exp(2 pi i / m), power basis of degree phi(m)"}};
}

} // namespace

TaskResult run_task(JobConfig const & cfg, Cache & cache, int jobs)
{
    NumberField F = make_field(cfg.field);
    std::optional<std::vector<FieldElement>> units, full;
    if (cfg.field.contains("units"))
        units = parse_elements(F, cfg.field.at("units"));
    if (cfg.field.contains("units_full"))
        full = parse_elements(F, cfg.field.at("units_full"));
    UnitGroupPlus U = units_plus(F, units, full);
    FractionalIdeal g = ideal_from_generators(F, parse_elements(F, cfg.modulus));
    if (!g.is_integral())
        throw Error(ErrorCode::NotIntegralModulus, "modulus must be integral");
    Context C{F, U, g, std::nullopt, std::nullopt, cfg.params, cfg.prime_bound};
    std::string method = cfg.params.value("method", std::string("auto"));
    if (method == "normform")
        C.method = ZetaMethod::NormForm;
    else if (method == "vertex")
        C.method = ZetaMethod::Vertex;
    else if (method != "auto")
        throw Error(ErrorCode::ConfigError, "method must be auto, normform or vertex");
    std::string dm = cfg.params.value("decomposition", std::string("hull"));
    if (dm == "single")
        C.dmethod = DecompositionMethod::Single;
    else if (dm != "hull")
        throw Error(ErrorCode::ConfigError, "decomposition must be hull or single");
    if (cfg.field.contains("cones")) {
        std::vector<std::vector<FieldElement>> cones;
        for (auto const & c : cfg.field.at("cones"))
            cones.push_back(parse_elements(F, c));
        C.user = user_decomposition(F, unit_ideal(F), cones);
    }
    std::string const & t = cfg.task;
    if (t == "field")
        return task_field(C);
    if (t == "cones")
        return task_cones(C);
    if (t == "lerch-neg")
        return task_lerch_neg(C, cache, jobs);
    if (t == "lerch-pos")
        return task_lerch_pos(C, jobs);
    if (t == "gauss")
        return task_gauss(C);
    if (t == "hecke")
        return task_hecke(C);
    if (t == "funeq")
        return task_funeq(C);
    if (t == "imprimitive")
        return task_imprimitive(C);
    if (t == "cohomology")
        return task_cohomology(C);
    if (t == "ler-vector")
        return task_ler_vector(C);
    return task_verify_all(C);
}

static void emit(json const & doc, std::string const & path, std::ostream & out)
{
    std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw Error(ErrorCode::ConfigError, "cannot write " + path);
    f << text;
}

int run(Options const & opt, std::ostream & out, std::ostream & err)
{
    std::string out_path = opt.out.value_or("");
    try {
        JobConfig cfg = load_config(opt);
        out_path = cfg.output;
        set_precision_bits(cfg.prec);
        auto t0 = std::chrono::steady_clock::now();
        Cache cache(cfg.cache_dir);
        std::string key = "task|" + cfg.task + "|" + cfg.echo.dump() + "|prec=" + std::to_string(cfg.prec) +
                          "|bound=" + std::to_string(cfg.prime_bound);
        json doc;
        if (auto hit = cache.get(key)) {
            doc = *hit;
            err << "cache hit\n";
        } else {
            TaskResult R = run_task(cfg, cache, opt.jobs);
            doc = {{"library_version", library_version()},
                   {"task", cfg.task},
                   {"inputs", cfg.echo},
                   {"precision_bits", cfg.prec},
                   {"prime_bound", cfg.prime_bound},
                   {"results", R.results},
                   {"provenance", R.provenance},
                   {"tolerances", R.tolerances},
                   {"conventions", conventions()},
                   {"verified", R.verified}};
            cache.put(key, doc);
        }
        if (opt.timings)
            doc["timings"] = {
                {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
        emit(doc, out_path, out);
        if (!doc.at("verified").get<bool>()) {
            err << "verification failed\n";
            return 2;
        }
        return 0;
    } catch (Error const & e) {
        err << "error: " << e.what() << "\n";
        json doc = {{"error", {{"code", error_name(e.code())}, {"message", e.what()}}}};
        try {
            emit(doc, out_path, out);
        } catch (...) {
            out << doc.dump(2) << "\n";
        }
        return 1;
    } catch (std::exception const & e) {
        err << "error: " << e.what() << "\n";
        json doc = {{"error", {{"code", "Internal"}, {"message", e.what()}}}};
        out << doc.dump(2) << "\n";
        return 1;
    }
}

} // namespace shintani::cli
