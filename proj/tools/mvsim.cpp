#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mvsim/engine.hpp"
#include "mvsim/render.hpp"
#include "mvsim/scenario.hpp"
#include "mvsim/trace_io.hpp"
#include "mvsim/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mvsim::ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_generate(int n, std::uint64_t seed, double spread, bool collinear,
                 const std::string& out_path) {
    if (spread <= 0.0) spread = 3.0 * std::sqrt(static_cast<double>(n));
    const mvsim::Scenario sc = mvsim::generate_scenario(n, seed, spread, collinear);
    const std::string text = mvsim::scenario_to_text(sc);
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        spill(out_path, text);
    return 0;
}

struct RunFlags {
    std::string trace_path;
    std::string svg_dir;
    int max_rounds = -1;
    bool no_predict = false;
    std::string frames;
    int k_samples = -1;
    bool broken_compute = false;
};

int cmd_run(const std::string& scenario_path, const RunFlags& flags) {
    mvsim::Scenario sc = mvsim::scenario_from_text(slurp(scenario_path));
    if (flags.max_rounds >= 0) sc.params.max_rounds = flags.max_rounds;
    if (flags.no_predict) sc.params.predict = false;
    if (!flags.frames.empty()) sc.params.policy = mvsim::frame_policy_from_name(flags.frames);
    if (flags.k_samples > 0) sc.params.k_samples = flags.k_samples;

    const mvsim::Trace trace = flags.broken_compute
                                   ? mvsim::run(sc, mvsim::ComputeFn(&mvsim::broken_compute))
                                   : mvsim::run(sc);
    const std::string text = mvsim::trace_to_text(trace);
    if (!flags.trace_path.empty()) spill(flags.trace_path, text);
    if (!flags.svg_dir.empty())
        mvsim::render_trace_svgs(mvsim::trace_from_text(text), flags.svg_dir);

    std::cout << "outcome " << mvsim::outcome_name(trace.outcome) << " rounds "
              << trace.total_rounds() << '\n';
    if (trace.outcome != mvsim::Outcome::Solved) {
        for (const auto& round : trace.rounds)
            for (const auto& v : round.events.violations)
                std::cerr << "violation " << v.kind << " robots " << v.i << "," << v.j << '\n';
        return 1;
    }
    return 0;
}

int cmd_verify(const std::string& trace_path, int oracle_k) {
    const mvsim::ParsedTrace trace = mvsim::trace_from_text(slurp(trace_path));
    const mvsim::VerifyReport rep = mvsim::verify_trace(trace, oracle_k);
    std::cout << rep.table();
    return rep.all_pass() ? 0 : 1;
}

int cmd_render(const std::string& trace_path, const std::string& out_dir) {
    const mvsim::ParsedTrace trace = mvsim::trace_from_text(slurp(trace_path));
    const int frames = mvsim::render_trace_svgs(trace, out_dir);
    std::cout << "wrote " << frames << " frames to " << out_dir << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mutual visibility simulator for unit-disk robots with lights"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "sample a scenario file");
    int gen_n = 8;
    std::uint64_t gen_seed = 0;
    double gen_spread = 0.0;
    bool gen_collinear = false;
    std::string gen_out;
    gen->add_option("-n,--robots", gen_n, "number of robots")->required();
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--spread", gen_spread, "side of the sampling square (default 3*sqrt(n))");
    gen->add_flag("--collinear", gen_collinear, "place robots on a line");
    gen->add_option("-o,--output", gen_out, "output path (default stdout)");

    auto* run = app.add_subcommand("run", "execute a scenario");
    std::string run_scenario;
    RunFlags flags;
    run->add_option("scenario", run_scenario, "scenario file")->required();
    run->add_option("--trace", flags.trace_path, "write the trace file here");
    run->add_option("--svg-dir", flags.svg_dir, "render one SVG per round into this directory");
    run->add_option("--max-rounds", flags.max_rounds, "override the scenario round limit");
    run->add_flag("--no-predict", flags.no_predict, "disable corner motion prediction");
    run->add_option("--frames", flags.frames, "aligned|rotated|rotated-reflected");
    run->add_option("--k-samples", flags.k_samples, "visibility sample count");
    run->add_flag("--broken-compute", flags.broken_compute,
                  "self-test: robots charge at each other; the collision check must abort");

    auto* verify = app.add_subcommand("verify", "re-check a trace file");
    std::string verify_trace_path;
    int verify_k = 4096;
    verify->add_option("trace", verify_trace_path, "trace file")->required();
    verify->add_option("--oracle-k", verify_k, "sample count for the visibility oracle");

    auto* render = app.add_subcommand("render", "render a trace to SVG frames");
    std::string render_trace_path, render_dir;
    render->add_option("trace", render_trace_path, "trace file")->required();
    render->add_option("outdir", render_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_n, gen_seed, gen_spread, gen_collinear, gen_out);
        if (run->parsed()) return cmd_run(run_scenario, flags);
        if (verify->parsed()) return cmd_verify(verify_trace_path, verify_k);
        if (render->parsed()) return cmd_render(render_trace_path, render_dir);
    } catch (const mvsim::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
