#include "serre/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace serre {

TimeGrid make_time_grid(double T, double k_target, double h) {
    if (!(T >= 0) || !(k_target > 0)) throw std::invalid_argument("make_time_grid: bad T or k");
    long M = std::max<long>(1, std::lround(T / k_target));
    if (T == 0.0) M = 0;
    double k = (M > 0) ? T / M : k_target;
    return TimeGrid{T, M, k, k / h};
}

BlowUp::BlowUp(double t_, long step_, double max_coeff_)
    : std::runtime_error("blow-up at t = " + std::to_string(t_) + " (step " +
                         std::to_string(step_) + "), max coefficient " +
                         std::to_string(max_coeff_)),
      t(t_), step(step_), max_coeff(max_coeff_) {}

Rk4Stepper::Rk4Stepper(SerreOperator& op) : op_(op) {}

namespace {
inline void axpy(const std::vector<double>& x, double a, const std::vector<double>& y,
                 std::vector<double>& out) {
    const size_t n = x.size();
    out.resize(n);
    for (size_t i = 0; i < n; ++i) out[i] = x[i] + a * y[i];
}
}  // namespace

void Rk4Stepper::step(SerreState& s, double k) {
    const double t = s.t;
    auto& e = s.eta.c;
    auto& u = s.u.c;

    op_.rhs(e, u, t, ke1_, ku1_);
    axpy(e, 0.5 * k, ke1_, te_);
    axpy(u, 0.5 * k, ku1_, tu_);
    op_.rhs(te_, tu_, t + 0.5 * k, ke2_, ku2_);
    axpy(e, 0.5 * k, ke2_, te_);
    axpy(u, 0.5 * k, ku2_, tu_);
    op_.rhs(te_, tu_, t + 0.5 * k, ke3_, ku3_);
    axpy(e, k, ke3_, te_);
    axpy(u, k, ku3_, tu_);
    op_.rhs(te_, tu_, t + k, ke4_, ku4_);

    const double w = k / 6.0;
    double maxc = 0.0;
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] += w * (ke1_[i] + 2.0 * ke2_[i] + 2.0 * ke3_[i] + ke4_[i]);
        u[i] += w * (ku1_[i] + 2.0 * ku2_[i] + 2.0 * ku3_[i] + ku4_[i]);
        maxc = std::max(maxc, std::max(std::fabs(e[i]), std::fabs(u[i])));
    }
    s.t = t + k;
    if (!(maxc < kBlowUpThreshold)) throw BlowUp(s.t, -1, maxc);
}

void rk4_step(SerreOperator& op, SerreState& s, double k) {
    Rk4Stepper(op).step(s, k);
}

EvolutionRecord evolve(SerreOperator& op, SerreState s0, const TimeGrid& grid,
                       const EvolveOptions& opts) {
    EvolutionRecord rec;
    rec.grid = grid;
    long snap = opts.snapshot_stride;
    if (snap < 0) snap = std::max<long>(1, grid.M / 200);

    auto record = [&](const SerreState& s, long step) {
        bool final_step = (step == grid.M);
        if (snap > 0 ? (step % snap == 0 || final_step) : (step == 0 || final_step)) {
            rec.snap_t.push_back(s.t);
            rec.snapshots.push_back(s);
        }
        if (opts.invariant_stride > 0 && (step % opts.invariant_stride == 0 || final_step)) {
            rec.inv_t.push_back(s.t);
            rec.invariants.push_back(invariants(s));
        }
        if (opts.on_sample && (step % std::max<long>(1, opts.sample_stride) == 0 || final_step))
            opts.on_sample(s, step);
    };

    record(s0, 0);
    Rk4Stepper stepper(op);
    for (long n = 1; n <= grid.M; ++n) {
        try {
            stepper.step(s0, grid.k);
        } catch (BlowUp& b) {
            throw BlowUp(b.t, n, b.max_coeff);
        }
        record(s0, n);
    }
    return rec;
}

const char* to_string(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::stable: return "stable";
        case StabilityVerdict::degraded: return "degraded";
        case StabilityVerdict::unstable: return "unstable";
    }
    return "?";
}

std::vector<StabilityResult> stability_probe(const StabilityProblem& prob,
                                             const std::vector<double>& courants) {
    PeriodicSplineSpace sp(prob.L, prob.N, prob.r);
    SolitaryWave wave(prob.c, prob.x0);
    const double L = prob.L;

    auto run_error = [&](double courant) -> double {
        SerreOperator op(sp);
        SerreState s = make_state(sp);
        s.eta = project_l2(sp, [&](double x) { return wave.eta(x); });
        s.u = project_l2(sp, [&](double x) { return wave.u(x); });
        TimeGrid grid = make_time_grid(prob.T, courant * sp.mesh().h, sp.mesh().h);
        Rk4Stepper stepper(op);
        for (long n = 1; n <= grid.M; ++n) stepper.step(s, grid.k);
        // Relative L2 error in eta against the translated wave.
        auto qe = sp.quad_values(s.eta.c, 0);
        const int N = sp.dim(), Q = sp.qpts();
        double err2 = 0.0, nrm2 = 0.0;
        for (int cell = 0; cell < N; ++cell)
            for (int q = 0; q < Q; ++q) {
                double x = sp.quad_x()[cell * Q + q];
                double xi = std::remainder(x - wave.crest(s.t), 2.0 * L);
                double ex = wave.eta(wave.x0 + xi, 0.0);
                double w = sp.rule().weights[q] * sp.mesh().h;
                err2 += w * (qe[cell * Q + q] - ex) * (qe[cell * Q + q] - ex);
                nrm2 += w * ex * ex;
            }
        return std::sqrt(err2 / nrm2);
    };

    double baseline = run_error(prob.baseline_courant);
    std::vector<StabilityResult> out;
    for (double courant : courants) {
        StabilityResult res{courant, StabilityVerdict::stable,
                            std::numeric_limits<double>::quiet_NaN()};
        try {
            double err = run_error(courant);
            res.final_l2_error = err;
            res.verdict =
                (err <= 3.0 * baseline) ? StabilityVerdict::stable : StabilityVerdict::degraded;
        } catch (const BlowUp&) {
            res.verdict = StabilityVerdict::unstable;
        } catch (const SolverBreakdown&) {
            res.verdict = StabilityVerdict::unstable;
        }
        out.push_back(res);
    }
    return out;
}

}  // namespace serre
