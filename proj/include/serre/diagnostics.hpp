#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "serre/integrator.hpp"
#include "serre/semidiscrete.hpp"
#include "serre/solutions.hpp"

namespace serre {

struct ExactField {
    std::function<double(double)> f, fx, fxx;
};

// Exact solitary-wave fields at fixed time t, wrapped periodically onto
// [-L, L] (nearest-image evaluation, valid for any crest position).
ExactField exact_eta(const SolitaryWave& w, double t, double L);
ExactField exact_u(const SolitaryWave& w, double t, double L);

struct ErrorNorms {
    double l2 = 0, linf = 0, h1 = 0, h2 = 0, nodal_linf = 0;
};

// L2/H1/H2 by the space's quadrature; L-infinity over quadrature nodes plus
// cell endpoints; nodal over mesh nodes only. With relative=true each value
// is divided by the same norm of the exact field.
ErrorNorms field_error_norms(const FieldCoeffs& num, const ExactField& exact,
                             bool relative = true);

// log(e1/e2) / log(N2/N1): observed order between two resolutions.
double fit_rate(double e_coarse, double e_fine, int n_coarse, int n_fine);

struct ConvergenceRow {
    int N = 0;
    double k = 0;
    ErrorNorms eta, u;
    InvariantTriple rel_drift{};  // (final - initial) / initial, per invariant
    bool ok = false;
    std::string failure;
};

struct NormRates {
    ErrorNorms eta, u;  // fields hold fitted rates between successive rows
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    std::vector<NormRates> rates;  // size rows.size()-1 when all rows ok
};

struct ConvergenceProblem {
    double L = 150.0;
    double c = 1.2;
    double x0 = -100.0;
    double T = 100.0;
    double courant = 0.1;
    int r = 4;
};

ConvergenceReport convergence_study(const ConvergenceProblem& prob, const std::vector<int>& Ns);

// ---- peaks ---------------------------------------------------------------

struct Peak {
    double x = 0;
    double zeta = 0;
    bool converged = true;  // false: Newton fell back to the grid maximum
};

// Strict nodal maxima of zeta = eta - 1 above min_height, Newton-refined on
// zeta_x with analytic spline derivatives; peaks closer than 2h merged
// (higher one kept); sorted by position.
std::vector<Peak> find_peaks(const FieldCoeffs& eta, double min_height);
std::vector<Peak> find_peaks(const SerreState& s, double min_height);

struct PeakTrace {
    std::vector<double> t;
    std::vector<std::vector<Peak>> peaks;  // per time, sorted by x
};

// Per-snapshot find_peaks over a stored record.
PeakTrace track_peaks(const EvolutionRecord& rec, double min_height);

// Streaming observer form for long runs; pass handle() as EvolveOptions::on_sample.
class PeakTracker {
public:
    PeakTracker(double min_height) : min_height_(min_height) {}
    void operator()(const SerreState& s, long step);
    const PeakTrace& trace() const { return trace_; }
    PeakTrace take() { return std::move(trace_); }

private:
    double min_height_;
    PeakTrace trace_;
};

// Links peaks across time to persistent trajectory ids (nearest position,
// periodic wrap, dormant trajectories may reattach). Returns per-sample ids
// aligned with trace.peaks; ids are dense from 0 in order of appearance.
std::vector<std::vector<int>> link_trace(const PeakTrace& trace, double L);

// ---- collisions ----------------------------------------------------------

struct CollisionSetup {
    SolitaryWave big;    // larger amplitude, starts behind
    SolitaryWave small;  // smaller amplitude, starts ahead
    double L;
    double t_measure;        // phase-shift measurement time
    double window_sep = 40.0;  // interaction window: unperturbed crests closer than this
};

struct CollisionReport {
    std::string lax_case;  // "a", "ab", "b", or "c"
    std::vector<std::pair<double, double>> one_peak_intervals;
    double a1_after = 0, a2_after = 0;      // stabilized amplitudes, big/small
    double shift_large = 0, shift_small = 0;  // signed x* - unperturbed at t_measure
    double t_measure = 0;
    double entry_gap_rel = 0;  // (rear-front)/max crest gap entering a single-peak phase
};

// Case from the single-peak interval structure inside the interaction
// window (intervals shorter than 0.5 are dropped as detector noise):
// none -> a; two or more -> b; exactly one -> ab when it is brief, c when
// it spans the exchange (length >= 5 time units).
// Stabilized amplitudes are medians over the final tenth of the trace;
// phase shifts compare against the exact unperturbed trajectories.
// Throws std::invalid_argument for traces that never show two peaks.
CollisionReport classify_collision(const PeakTrace& trace, const CollisionSetup& setup);

// ---- resolution into solitary waves --------------------------------------

struct SolitonCount {
    int n = 0;
    double tail_amplitude = 0;
    double min_height = 0;
    std::vector<Peak> peaks;
};

// Counts emerged solitary waves on the right-traveling half x > 0. The
// height threshold max(10 * tail, 0.05 * max zeta) is iterated to a fixed
// point. The tail is the radiation floor: the quietest 10-unit window
// behind the slowest counted peak. Emerged waves stand well above that
// floor, while the shelf and undular bore trailing the last wave never
// contain a quiet window; baseline_tail seeds the floor from below.
SolitonCount count_solitary_waves(const SerreState& s, double baseline_tail = 0.0);

// ---- manufactured solutions ----------------------------------------------

struct ManufacturedReport {
    std::vector<ConvergenceRow> rows;
    std::vector<NormRates> rates;
};

// Forced run against eta* = 2 + 0.3 cos(2 pi x / L - t),
// u* = 0.2 sin(2 pi x / L) cos t, forcing applied in weak form.
ManufacturedReport manufactured_convergence(double L, const std::vector<int>& Ns, int r,
                                            double courant, double T);

// Forced run whose eta-equation forcing has mean 0.2 L cos t; returns the
// absolute mismatch between the measured mass drift and its exact integral
// 0.2 L sin T.
double manufactured_mass_drift_mismatch(double L, int N, int r, double k, double T);

// ---- temporal order -------------------------------------------------------

struct TemporalOrderReport {
    std::vector<double> ks;
    std::vector<double> errors;  // vs the k_ref run on the same mesh
    std::vector<double> rates;
};

TemporalOrderReport temporal_order_check(double L, int N, int r, double c, double x0, double T,
                                         const std::vector<double>& ks, double k_ref);

}  // namespace serre
