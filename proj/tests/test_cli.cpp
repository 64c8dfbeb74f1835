#include "shintani/errors.hpp"
#include "shintani_cli/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace shintani;
using namespace shintani::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(std::string const & name)
{
    auto p = fs::temp_directory_path() / ("shintani_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string write(fs::path const & dir, std::string const & name, json const & j)
{
    auto p = dir / name;
    std::ofstream(p) << j.dump();
    return p.string();
}

struct Run {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run run_cli(std::string const & command, std::string const & config, int jobs = 1,
            std::optional<std::string> cache = std::nullopt)
{
    Options o;
    o.command = command;
    o.config_path = config;
    o.jobs = jobs;
    o.cache = cache;
    std::ostringstream out, err;
    int c = run(o, out, err);
    return {c, out.str(), err.str()};
}

} // namespace

TEST_CASE("strict configuration parsing")
{
    Options o;
    o.command = "field";
    json good = {{"field", {{"min_poly", {-1, -1, 1}}}}};
    CHECK_NOTHROW(parse_config(good, o));
    auto c = parse_config(good, o);
    CHECK(c.modulus == json::array({1}));
    CHECK(c.prec == 192);

    json extra = good;
    extra["colour"] = "blue";
    CHECK_THROWS_AS(parse_config(extra, o), Error);

    json badparam = good;
    badparam["params"] = {{"kk", 1}};
    CHECK_THROWS_AS(parse_config(badparam, o), Error);

    json mismatch = good;
    mismatch["task"] = "cones";
    CHECK_THROWS_AS(parse_config(mismatch, o), Error);

    o.prec = 256;
    o.prime_bound = 5000;
    auto c2 = parse_config(good, o);
    CHECK(c2.prec == 256);
    CHECK(c2.prime_bound == 5000);
}

TEST_CASE("file references are resolved next to the config")
{
    Options o;
    o.command = "cohomology";
    o.config_path = std::string(SHINTANI_TEST_DATA) + "/qzeta7plus.json";
    auto c = load_config(o);
    CHECK(c.field.contains("units"));
    CHECK_FALSE(c.field.contains("units_file"));
    CHECK(c.field["units"].size() == 2);
}

TEST_CASE("cache round trip, version mismatch and corruption")
{
    auto dir = scratch("cache");
    Cache cache(dir.string());
    CHECK_FALSE(cache.get("alpha"));
    cache.put("alpha", json{{"x", 1}});
    auto v = cache.get("alpha");
    REQUIRE(v);
    CHECK((*v)["x"] == 1);
    CHECK(cache.hits == 1);
    CHECK(cache.misses == 1);

    /* stale version */
    auto path = dir / (Cache::hash_key("beta") + ".json");
    std::ofstream(path) << json{{"version", "0.0.0"}, {"key", "beta"}, {"value", 2}}.dump();
    CHECK_FALSE(cache.get("beta"));

    /* corrupt entry */
    auto bad = dir / (Cache::hash_key("gamma") + ".json");
    std::ofstream(bad) << "{not json";
    CHECK_FALSE(cache.get("gamma"));
    CHECK(cache.warnings == 1);

    CHECK(Cache::hash_key("a") != Cache::hash_key("b"));
    CHECK(Cache::hash_key("a").size() == 32);
    Cache off;
    CHECK_FALSE(off.enabled());
    off.put("x", 1);
    CHECK_FALSE(off.get("x"));
    fs::remove_all(dir);
}

TEST_CASE("exact values through the command")
{
    auto dir = scratch("lerch");
    auto cfg = write(dir, "c.json", {{"field", {{"min_poly", {-1, -1, 1}}}}, {"params", {{"k", 1}}}});
    auto r = run_cli("lerch-neg", cfg);
    REQUIRE(r.code == 0);
    auto d = r.doc();
    CHECK(d["provenance"] == "exact");
    CHECK(d["results"]["values"][0]["value"]["exact"] == "1/30");
    CHECK(d["inputs"]["params"]["k"] == 1);
    CHECK_FALSE(d.contains("timings"));
    fs::remove_all(dir);
}

TEST_CASE("deterministic output, with and without threads and cache")
{
    auto dir = scratch("det");
    auto cfg = std::string(SHINTANI_TEST_DATA) + "/qsqrt5.json";
    auto a = run_cli("lerch-neg", cfg, 1);
    auto b = run_cli("lerch-neg", cfg, 4);
    auto c = run_cli("lerch-neg", cfg, 2, (dir / "cache").string());
    auto d = run_cli("lerch-neg", cfg, 2, (dir / "cache").string());
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out == d.out);
    CHECK(d.err.find("cache hit") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("structured errors")
{
    auto dir = scratch("err");
    auto cfg = write(dir, "c.json", {{"field", {{"min_poly", {-4, 0, 1}}}}});
    auto r = run_cli("field", cfg);
    CHECK(r.code == 1);
    CHECK(r.doc()["error"]["code"] == "Reducible");

    auto cfg2 = write(dir, "d.json", {{"field", {{"min_poly", {1, 0, 1}}}}});
    CHECK(run_cli("field", cfg2).doc()["error"]["code"] == "NotTotallyReal");

    auto missing = run_cli("field", (dir / "nothing.json").string());
    CHECK(missing.code == 1);
    CHECK(missing.doc()["error"]["code"] == "ConfigError");

    auto cfg3 = write(dir, "e.json", {{"field", {{"min_poly", {-1, -1, 1}}}}});
    CHECK(run_cli("lerch-neg", cfg3).doc()["error"]["code"] == "ConfigError"); /* k missing */
    fs::remove_all(dir);
}

TEST_CASE("failed verification exits with 2")
{
    auto dir = scratch("verify");
    auto cfg = write(dir, "c.json",
                     {{"field", {{"min_poly", {0, 1}}}}, {"modulus", {5}}, {"params", {{"s", 3}, {"tol", 1e-30}}}});
    auto r = run_cli("hecke", cfg);
    CHECK(r.code == 2);
    CHECK(r.doc()["verified"] == false);
    fs::remove_all(dir);
}

TEST_CASE("every task runs on a small example")
{
    auto dir = scratch("tasks");
    json field = {{"min_poly", {-1, -1, 1}}};
    std::vector<std::pair<std::string, json>> jobs = {
        {"field", json::object()},
        {"cones", {{"samples", 200}}},
        {"lerch-neg", {{"k", {0, 1}}}},
        {"lerch-pos", {{"s", 2.5}, {"tol", 1e-6}}},
        {"gauss", json::object()},
        {"hecke", {{"k", 1}, {"s", 3}}},
        {"funeq", {{"k", 2}}},
        {"imprimitive", {{"p", {{-1, 2}}}, {"k", {1}}}},
        {"cohomology", {{"k_max", 4}}},
        {"ler-vector", {{"n", {2}}}},
        {"verify-all", json::object()},
    };
    for (auto const & [task, params] : jobs) {
        json modulus = task == "funeq" || task == "imprimitive" ? json::array({2}) : json::array({3});
        auto cfg = write(dir, task + ".json", {{"field", field}, {"modulus", modulus}, {"params", params}});
        auto r = run_cli(task, cfg);
        INFO(task << ": " << r.err);
        CHECK(r.code == 0);
        CHECK(r.doc()["task"] == task);
    }
    fs::remove_all(dir);
}

TEST_CASE("degree three cohomology from the data file")
{
    auto r = run_cli("cohomology", std::string(SHINTANI_TEST_DATA) + "/qzeta7plus.json");
    REQUIRE(r.code == 0);
    auto d = r.doc();
    CHECK(d["verified"] == true);
    CHECK(d["results"]["sym_tate"][3]["computed"] == json::array({1, 2, 1}));
    CHECK(d["results"]["log_tables"][1]["deligne_dim"] == 1);
}

TEST_CASE("the executable parses subcommands")
{
    std::string exe = SHINTANI_EXE;
    auto dir = scratch("exe");
    auto cfg = write(dir, "c.json", {{"field", {{"min_poly", {-2, 0, 1}}}}});
    auto out = (dir / "o.json").string();
    int rc = std::system((exe + " field --config " + cfg + " --out " + out + " --timings > /dev/null 2>&1").c_str());
    CHECK(rc == 0);
    std::ifstream in(out);
    auto d = json::parse(in);
    CHECK(d["results"]["discriminant"] == "8");
    CHECK(d.contains("timings"));
    CHECK(std::system((exe + " nonsense > /dev/null 2>&1").c_str()) != 0);
    fs::remove_all(dir);
}
