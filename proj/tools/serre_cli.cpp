// Experiment driver for the periodic Serre solver. Exit codes: 0 success,
// 2 invalid configuration, 3 numerical failure (blow-up or breakdown).
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "serre/experiments.hpp"

namespace {

struct Cli {
    serre::EvolveConfig evolve;
    serre::ConvergeConfig converge;
    serre::CollideConfig collide;
    serre::ResolveConfig resolve;
    serre::AnalyticsConfig analytics;
    serre::StabilityConfig stability;
    std::string out = ".";
};

void add_common(CLI::App* sub, double& L, int& r) {
    sub->add_option("--domain", L, "Domain half-length; the interval is [-L, L]");
    sub->add_option("--order", r, "Spline order r (degree r-1), at least 3")
        ->check(CLI::Range(3, 12));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galerkin spline solver for the periodic Serre system"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file (sections per subcommand)");

    Cli cli;
    app.add_option("--out", cli.out, "Output directory (created if missing)")
        ->capture_default_str();

    CLI::App* conv = app.add_subcommand("converge", "Solitary-wave error/rate sweep over N");
    conv->configurable();
    add_common(conv, cli.converge.L, cli.converge.r);
    conv->add_option("--n", cli.converge.Ns, "Cell counts to sweep")
        ->delimiter(',')
        ->capture_default_str();
    conv->add_option("--courant", cli.converge.courant, "Time step as a fraction of h");
    conv->add_option("--tfinal", cli.converge.T, "Final time");
    conv->add_option("--speed", cli.converge.c, "Solitary-wave speed c > 1");
    conv->add_option("--center", cli.converge.x0, "Initial crest position");

    CLI::App* evo = app.add_subcommand("evolve", "Single solitary-wave run with diagnostics");
    evo->configurable();
    add_common(evo, cli.evolve.L, cli.evolve.r);
    evo->add_option("--n", cli.evolve.N, "Number of cells");
    evo->add_option("--courant", cli.evolve.courant, "Time step as a fraction of h");
    evo->add_option("--step", cli.evolve.k, "Explicit time step (overrides --courant)");
    evo->add_option("--tfinal", cli.evolve.T, "Final time");
    evo->add_option("--speed", cli.evolve.c, "Solitary-wave speed c > 1");
    evo->add_option("--center", cli.evolve.x0, "Initial crest position");
    evo->add_option("--snapshot-stride", cli.evolve.snapshot_stride,
                    "Steps between stored snapshots (-1 auto, 0 endpoints only)");
    evo->add_option("--invariant-stride", cli.evolve.invariant_stride,
                    "Steps between invariant samples (0 disables)");

    CLI::App* col = app.add_subcommand("collide", "Overtaking collision of two solitary waves");
    col->configurable();
    add_common(col, cli.collide.L, cli.collide.r);
    col->add_option("--a1", cli.collide.a1, "Amplitude of the large wave");
    col->add_option("--ratio", cli.collide.ratio, "Amplitude ratio a1/a2, must exceed 1");
    col->add_option("--x-big", cli.collide.x_big, "Initial crest of the large wave");
    col->add_option("--x-small", cli.collide.x_small, "Initial crest of the small wave");
    col->add_option("--spacing", cli.collide.h, "Mesh size h (must divide 2L)");
    col->add_option("--step", cli.collide.k, "Time step");
    col->add_option("--tfinal", cli.collide.T, "Final time");
    col->add_option("--t-measure", cli.collide.t_measure, "Phase-shift measurement time");
    col->add_option("--min-height", cli.collide.min_height, "Peak detection threshold on zeta");
    col->add_option("--window", cli.collide.window_sep,
                    "Interaction window: unperturbed crest separation below this");
    col->add_option("--sample-stride", cli.collide.sample_stride,
                    "Steps between peak-trace samples");

    CLI::App* res = app.add_subcommand("resolve", "Resolution of a Gaussian hump into waves");
    res->configurable();
    add_common(res, cli.resolve.L, cli.resolve.r);
    res->add_option("--a", cli.resolve.a, "Gaussian amplitude");
    res->add_option("--b", cli.resolve.b, "Gaussian width parameter");
    res->add_option("--spacing", cli.resolve.h, "Mesh size h (must divide 2L)");
    res->add_option("--step", cli.resolve.k, "Time step");
    res->add_option("--tfinal", cli.resolve.T, "Final time");
    res->add_option("--snap-times", cli.resolve.snap_times,
                    "Times at which to write state snapshots (default: final time)")
        ->delimiter(',');

    CLI::App* ana = app.add_subcommand("analytics", "Speed-amplitude relations and profiles");
    ana->configurable();
    ana->add_option("--speeds", cli.analytics.cs, "Wave speeds, each > 1")
        ->delimiter(',')
        ->capture_default_str();
    ana->add_option("--halfwidth", cli.analytics.profile_halfwidth,
                    "Half-width of the sampled profile window");
    ana->add_option("--samples", cli.analytics.profile_samples, "Profile sample count");

    CLI::App* sta = app.add_subcommand("stability", "Courant-number sweep on a solitary wave");
    sta->configurable();
    add_common(sta, cli.stability.problem.L, cli.stability.problem.r);
    sta->add_option("--n", cli.stability.problem.N, "Number of cells");
    sta->add_option("--courants", cli.stability.courants, "Courant numbers to probe")
        ->delimiter(',')
        ->capture_default_str();
    sta->add_option("--tfinal", cli.stability.problem.T, "Final time");
    sta->add_option("--speed", cli.stability.problem.c, "Solitary-wave speed c > 1");
    sta->add_option("--center", cli.stability.problem.x0, "Initial crest position");
    sta->add_option("--baseline", cli.stability.problem.baseline_courant,
                    "Reference Courant number for the error comparison");

    // Let app-level options like --out appear after the subcommand name.
    for (CLI::App* sub : {conv, evo, col, res, ana, sta}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(conv)) serre::run_converge(cli.converge, cli.out);
        if (app.got_subcommand(evo)) serre::run_evolve(cli.evolve, cli.out);
        if (app.got_subcommand(col)) serre::run_collide(cli.collide, cli.out);
        if (app.got_subcommand(res)) serre::run_resolve(cli.resolve, cli.out);
        if (app.got_subcommand(ana)) serre::run_analytics(cli.analytics, cli.out);
        if (app.got_subcommand(sta)) serre::run_stability(cli.stability, cli.out);
    } catch (const serre::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const serre::BlowUp& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const serre::SolverBreakdown& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const serre::NumericalFailure& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
