#pragma once

#include <functional>
#include <vector>

#include "serre/semidiscrete.hpp"
#include "serre/solutions.hpp"

namespace serre {

struct TimeGrid {
    double T;        // final time
    long M;          // steps
    double k;        // step T/M
    double courant;  // k/h
};

// k is chosen as T/M with M = round(T/k_target), so k*M = T exactly.
TimeGrid make_time_grid(double T, double k_target, double h);

struct BlowUp : std::runtime_error {
    double t;
    long step;
    double max_coeff;
    BlowUp(double t_, long step_, double max_coeff_);
};

inline constexpr double kBlowUpThreshold = 1e6;

// Classical four-stage RK4 update in place; t advances by k. Throws BlowUp
// (step = -1, filled by evolve) when any coefficient magnitude passes the
// threshold, and propagates SolverBreakdown from the stage solves.
class Rk4Stepper {
public:
    explicit Rk4Stepper(SerreOperator& op);
    void step(SerreState& s, double k);

private:
    SerreOperator& op_;
    std::vector<double> ke1_, ku1_, ke2_, ku2_, ke3_, ku3_, ke4_, ku4_, te_, tu_;
};

void rk4_step(SerreOperator& op, SerreState& s, double k);

struct EvolutionRecord {
    TimeGrid grid;
    std::vector<double> snap_t;
    std::vector<SerreState> snapshots;
    std::vector<double> inv_t;
    std::vector<InvariantTriple> invariants;
};

struct EvolveOptions {
    long snapshot_stride = -1;   // -1: max(1, M/200); 0: initial/final only
    long invariant_stride = 1;   // 0 disables
    std::function<void(const SerreState&, long)> on_sample;  // every sample_stride steps
    long sample_stride = 1;
};

// Runs M steps from s0, recording snapshots and invariants at their strides
// (always including step 0 and the final step). on_sample is invoked at step
// 0 and after every sample_stride-th step. Throws BlowUp with diagnostics on
// instability.
EvolutionRecord evolve(SerreOperator& op, SerreState s0, const TimeGrid& grid,
                       const EvolveOptions& opts = {});

enum class StabilityVerdict { stable, degraded, unstable };
const char* to_string(StabilityVerdict v);

struct StabilityResult {
    double courant;
    StabilityVerdict verdict;
    double final_l2_error;  // NaN when the run blew up
};

struct StabilityProblem {
    double L = 150.0;
    int N = 600;
    int r = 4;
    double c = 1.2;
    double x0 = -100.0;
    double T = 100.0;
    double baseline_courant = 0.1;
};

// Runs the solitary-wave problem at each Courant number and classifies:
// blow-up/breakdown -> unstable; final relative L2 eta error within 3x of
// the baseline-courant run -> stable; otherwise degraded.
std::vector<StabilityResult> stability_probe(const StabilityProblem& prob,
                                             const std::vector<double>& courants);

}  // namespace serre
