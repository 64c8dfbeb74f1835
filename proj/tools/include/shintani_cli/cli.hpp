#pragma once

#include "shintani_cli/cache.hpp"
#include "shintani_cli/json_io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shintani::cli {

extern std::vector<std::string> const kTasks;

struct Options {
    std::string command;
    std::string config_path;
    std::optional<unsigned> prec;
    std::optional<long> prime_bound;
    std::optional<std::string> out;
    std::optional<std::string> cache;
    int jobs = 1;
    bool timings = false;
};

struct JobConfig {
    std::string task;
    json field;   /* min_poly, basis, units, units_full, cones (+ *_file variants) */
    json modulus; /* list of generators */
    json params;
    std::string output;
    std::string cache_dir;
    unsigned prec = 192;
    long prime_bound = 1000000;
    json echo; /* the configuration as read */
};

/* strict parse: unknown keys are errors */
JobConfig parse_config(json const & j, Options const & opt);
JobConfig load_config(Options const & opt);

struct TaskResult {
    json results;
    bool verified = true; /* every identity check held */
    std::string provenance; /* exact | numeric | mixed */
    json tolerances = json::object();
};
TaskResult run_task(JobConfig const & cfg, Cache & cache, int jobs);

/* 0 success, 2 a verification failed, 1 error */
int run(Options const & opt, std::ostream & out, std::ostream & err);

} // namespace shintani::cli
