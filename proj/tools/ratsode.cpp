// ratsode: decide whether F(z, w, w') = 0 has a rational general solution
// w(z, lambda) and compute one when it does.

#include <CLI11.hpp>
#include <iostream>

#include "ratsode/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rational general solutions of first order algebraic ODEs"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve a problem file");
    std::string path;
    bool json = false, no_verify = false;
    int samples = -1;
    long long seed = -1;
    solve->add_option("file", path, "problem file")->required();
    solve->add_flag("--json", json, "emit the result as JSON");
    solve->add_option("--samples", samples, "genus sample count (overrides the file)");
    solve->add_option("--seed", seed, "genus sampling seed (overrides the file)");
    solve->add_flag("--no-verify", no_verify, "skip the final exact verification");

    CLI11_PARSE(app, argc, argv);

    ratsode::Problem problem;
    try {
        problem = ratsode::load_problem(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    if (samples > 0) problem.samples = samples;
    if (seed >= 0) problem.seed = static_cast<unsigned long>(seed);

    ratsode::PipelineResult result = ratsode::solve_pipeline(problem, !no_verify);
    std::cout << (json ? ratsode::result_to_json(result) : ratsode::result_to_text(result))
              << std::endl;
    return ratsode::exit_code_for(result);
}
