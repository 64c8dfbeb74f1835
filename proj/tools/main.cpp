#include "shintani_cli/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
    CLI::App app{"Shintani cones, Lerch values and Hecke L-values of totally real fields"};
    app.require_subcommand(1, 1);
    shintani::cli::Options opt;
    unsigned prec = 0;
    long bound = 0;
    std::string out, cache;

    for (auto const & name : shintani::cli::kTasks) {
        auto * sub = app.add_subcommand(name, "run the " + name + " task");
        sub->add_option("--config", opt.config_path, "job configuration (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--prec", prec, "working precision in bits");
        sub->add_option("--prime-bound", bound, "norm bound for Euler products");
        sub->add_option("--out", out, "output file (default stdout)");
        sub->add_option("--cache", cache, "cache directory");
        sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--timings", opt.timings, "add wall-clock timings to the output");
    }
    CLI11_PARSE(app, argc, argv);

    auto * sub = app.get_subcommands().front();
    opt.command = sub->get_name();
    if (sub->count("--prec"))
        opt.prec = prec;
    if (sub->count("--prime-bound"))
        opt.prime_bound = bound;
    if (sub->count("--out"))
        opt.out = out;
    if (sub->count("--cache"))
        opt.cache = cache;
    return shintani::cli::run(opt, std::cout, std::cerr);
}
