#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "serre/diagnostics.hpp"

namespace serre {

// Invalid experiment parameters (CLI maps this to exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A run that started but could not be completed (CLI maps this to exit
// code 3, alongside BlowUp and SolverBreakdown).
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solitary-wave evolution on [-L, L]; writes invariants.csv, final_state.csv,
// evolve_report.json.
struct EvolveConfig {
    double L = 150.0;
    int N = 600;
    int r = 4;
    double c = 1.2;
    double x0 = -100.0;
    double T = 100.0;
    double courant = 0.1;  // k = courant * h unless k is set
    double k = 0.0;        // explicit step; 0 means derive from courant
    long snapshot_stride = -1;
    long invariant_stride = 1;
};
void run_evolve(const EvolveConfig& cfg, const std::filesystem::path& out_dir);

// Error/rate sweep over resolutions; writes converge_errors.csv,
// converge_drift.csv. Throws on a failed resolution after writing.
struct ConvergeConfig {
    double L = 150.0;
    int r = 4;
    double c = 1.2;
    double x0 = -100.0;
    double T = 100.0;
    double courant = 0.1;
    std::vector<int> Ns = {600, 1200, 2400};
};
void run_converge(const ConvergeConfig& cfg, const std::filesystem::path& out_dir);

// Overtaking collision of two solitary waves (amplitudes a1 and a1/ratio);
// writes collide_trace.csv, collide_report.json.
struct CollideConfig {
    double L = 400.0;
    double a1 = 1.0;
    double ratio = 3.125;  // a1 / a2, must be > 1
    double x_big = -30.0;
    double x_small = 30.0;
    double h = 0.1;
    double k = 0.01;
    int r = 4;
    double T = 300.0;
    double t_measure = 230.0;
    double min_height = 0.02;
    double window_sep = 40.0;
    long sample_stride = 1;  // peak-tracking cadence in steps
};
CollisionReport run_collide(const CollideConfig& cfg, const std::filesystem::path& out_dir);

// Resolution of a Gaussian hump into solitary-wave trains; writes
// state_t*.csv snapshots and resolve_report.json.
struct ResolveConfig {
    double L = 300.0;
    double a = 0.5;
    double b = 0.05;
    double T = 200.0;
    double h = 0.1;
    double k = 0.01;
    int r = 4;
    std::vector<double> snap_times;  // defaults to {T}
};
SolitonCount run_resolve(const ResolveConfig& cfg, const std::filesystem::path& out_dir);

// Speed-amplitude comparison across model equations plus profile samples;
// writes amplitudes.csv, profiles.csv.
struct AnalyticsConfig {
    std::vector<double> cs = {1.1, 1.2};
    double profile_halfwidth = 25.0;
    int profile_samples = 501;
};
void run_analytics(const AnalyticsConfig& cfg, const std::filesystem::path& out_dir);

// Courant-number sweep on the solitary-wave problem; writes stability.csv,
// stability_report.json.
struct StabilityConfig {
    StabilityProblem problem;
    std::vector<double> courants = {0.1, 0.3, 0.5, 1.0, 3.0};
};
std::vector<StabilityResult> run_stability(const StabilityConfig& cfg,
                                           const std::filesystem::path& out_dir);

}  // namespace serre
