#include "serre/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace serre {

namespace {
using nlohmann::json;
namespace fs = std::filesystem;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream f(dir / name);
    if (!f) throw std::runtime_error("cannot open output file: " + (dir / name).string());
    return f;
}

void write_json(const fs::path& dir, const std::string& name, const json& j) {
    auto f = open_out(dir, name);
    f << j.dump(2) << '\n';
}

void write_state_csv(std::ofstream& f, const SerreState& s) {
    const PeriodicSplineSpace& sp = *s.eta.space;
    auto ev = sp.nodal_values(s.eta.c, 0);
    auto uv = sp.nodal_values(s.u.c, 0);
    f << "x,zeta,u\n";
    for (int j = 0; j < sp.dim(); ++j)
        f << num(sp.cell_left(j)) << ',' << num(ev[j] - 1.0) << ',' << num(uv[j]) << '\n';
}

json norms_json(const ErrorNorms& e) {
    return json{{"l2", e.l2}, {"linf", e.linf}, {"h1", e.h1}, {"h2", e.h2},
                {"nodal_linf", e.nodal_linf}};
}

void check(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}

int cells_from_h(double L, double h) {
    check(L > 0 && h > 0, "domain half-length and mesh size must be positive");
    double n = 2.0 * L / h;
    int N = static_cast<int>(std::lround(n));
    check(std::fabs(n - N) < 1e-9, "mesh size must divide the domain evenly");
    return N;
}
}  // namespace

void run_evolve(const EvolveConfig& cfg, const fs::path& out_dir) {
    check(cfg.c > 1.0, "wave speed must exceed 1");
    check(cfg.N >= 2 * cfg.r, "need at least 2r cells");
    PeriodicSplineSpace sp(cfg.L, cfg.N, cfg.r);
    double k_target = cfg.k > 0 ? cfg.k : cfg.courant * sp.mesh().h;
    TimeGrid grid = make_time_grid(cfg.T, k_target, sp.mesh().h);

    SolitaryWave wave(cfg.c, cfg.x0);
    SerreOperator op(sp);
    SerreState s0 = make_state(sp);
    s0.eta = project_l2(sp, [&](double x) { return wave.eta(x); });
    s0.u = project_l2(sp, [&](double x) { return wave.u(x); });

    EvolveOptions opts;
    opts.snapshot_stride = cfg.snapshot_stride;
    opts.invariant_stride = cfg.invariant_stride;
    EvolutionRecord rec = evolve(op, std::move(s0), grid, opts);

    {
        auto f = open_out(out_dir, "invariants.csv");
        f << "t,mass,momentum,energy\n";
        for (size_t i = 0; i < rec.inv_t.size(); ++i)
            f << num(rec.inv_t[i]) << ',' << num(rec.invariants[i].mass) << ','
              << num(rec.invariants[i].momentum) << ',' << num(rec.invariants[i].energy) << '\n';
    }
    const SerreState& fin = rec.snapshots.back();
    {
        auto f = open_out(out_dir, "final_state.csv");
        write_state_csv(f, fin);
    }

    ErrorNorms ee = field_error_norms(fin.eta, exact_eta(wave, fin.t, cfg.L));
    ErrorNorms eu = field_error_norms(fin.u, exact_u(wave, fin.t, cfg.L));
    const InvariantTriple &i0 = rec.invariants.front(), &i1 = rec.invariants.back();
    json rep{{"L", cfg.L},
             {"N", cfg.N},
             {"order", cfg.r},
             {"c", cfg.c},
             {"x0", cfg.x0},
             {"T", grid.T},
             {"k", grid.k},
             {"steps", grid.M},
             {"eta_error", norms_json(ee)},
             {"u_error", norms_json(eu)},
             {"drift",
              {{"mass", (i1.mass - i0.mass) / i0.mass},
               {"momentum", (i1.momentum - i0.momentum) / i0.momentum},
               {"energy", (i1.energy - i0.energy) / i0.energy}}}};
    write_json(out_dir, "evolve_report.json", rep);
}

void run_converge(const ConvergeConfig& cfg, const fs::path& out_dir) {
    check(!cfg.Ns.empty(), "resolution list is empty");
    check(cfg.c > 1.0, "wave speed must exceed 1");
    ConvergenceProblem prob{cfg.L, cfg.c, cfg.x0, cfg.T, cfg.courant, cfg.r};
    ConvergenceReport rep = convergence_study(prob, cfg.Ns);

    {
        auto f = open_out(out_dir, "converge_errors.csv");
        f << "N,k,eta_l2,eta_linf,eta_h1,eta_h2,eta_nodal_linf,"
             "u_l2,u_linf,u_h1,u_h2,u_nodal_linf,"
             "rate_eta_l2,rate_eta_linf,rate_eta_h1,rate_eta_h2,rate_eta_nodal_linf,"
             "rate_u_l2,rate_u_linf,rate_u_h1,rate_u_h2,rate_u_nodal_linf\n";
        // Rates are stored per consecutive pair of completed rows.
        std::vector<int> rate_of_row(rep.rows.size(), -1);
        for (size_t i = 0, ri = 0; i + 1 < rep.rows.size(); ++i)
            if (rep.rows[i].ok && rep.rows[i + 1].ok) rate_of_row[i + 1] = static_cast<int>(ri++);
        for (size_t i = 0; i < rep.rows.size(); ++i) {
            const ConvergenceRow& row = rep.rows[i];
            f << row.N << ',' << num(row.k);
            auto norms = [&](const ErrorNorms& e) {
                f << ',' << num(e.l2) << ',' << num(e.linf) << ',' << num(e.h1) << ','
                  << num(e.h2) << ',' << num(e.nodal_linf);
            };
            norms(row.eta);
            norms(row.u);
            if (rate_of_row[i] < 0) {
                f << ",NA,NA,NA,NA,NA,NA,NA,NA,NA,NA";
            } else {
                const NormRates& r = rep.rates[rate_of_row[i]];
                norms(r.eta);
                norms(r.u);
            }
            f << '\n';
        }
    }
    {
        auto f = open_out(out_dir, "converge_drift.csv");
        f << "N,mass_drift_rel,momentum_drift_rel,energy_drift_rel\n";
        for (const ConvergenceRow& row : rep.rows)
            f << row.N << ',' << num(row.rel_drift.mass) << ',' << num(row.rel_drift.momentum)
              << ',' << num(row.rel_drift.energy) << '\n';
    }
    for (const ConvergenceRow& row : rep.rows)
        if (!row.ok)
            throw NumericalFailure("resolution N=" + std::to_string(row.N) +
                                   " failed: " + row.failure);
}

CollisionReport run_collide(const CollideConfig& cfg, const fs::path& out_dir) {
    check(cfg.ratio > 1.0, "amplitude ratio must exceed 1 (a2 < a1)");
    check(cfg.a1 > 0.0, "leading amplitude must be positive");
    int N = cells_from_h(cfg.L, cfg.h);
    PeriodicSplineSpace sp(cfg.L, N, cfg.r);
    TimeGrid grid = make_time_grid(cfg.T, cfg.k, sp.mesh().h);

    double a2 = cfg.a1 / cfg.ratio;
    SolitaryWave big(std::sqrt(1.0 + cfg.a1), cfg.x_big);
    SolitaryWave small(std::sqrt(1.0 + a2), cfg.x_small);

    SerreOperator op(sp);
    SerreState s0 = make_state(sp);
    s0.eta = project_l2(sp, [&](double x) { return big.eta(x) + small.eta(x) - 1.0; });
    s0.u = project_l2(sp, [&](double x) { return big.u(x) + small.u(x); });

    PeakTracker tracker(cfg.min_height);
    EvolveOptions opts;
    opts.snapshot_stride = 0;
    opts.invariant_stride = 0;
    opts.on_sample = std::ref(tracker);
    opts.sample_stride = cfg.sample_stride;
    EvolutionRecord rec = evolve(op, std::move(s0), grid, opts);

    const PeakTrace& trace = tracker.trace();
    {
        auto f = open_out(out_dir, "collide_trace.csv");
        f << "t,x1,zeta1,x2,zeta2\n";
        for (size_t i = 0; i < trace.t.size(); ++i) {
            auto ps = trace.peaks[i];
            std::sort(ps.begin(), ps.end(),
                      [](const Peak& a, const Peak& b) { return a.zeta > b.zeta; });
            f << num(trace.t[i]);
            for (size_t p = 0; p < 2; ++p) {
                if (p < ps.size())
                    f << ',' << num(ps[p].x) << ',' << num(ps[p].zeta);
                else
                    f << ",NA,NA";
            }
            f << '\n';
        }
    }

    CollisionSetup setup{big, small, cfg.L, cfg.t_measure, cfg.window_sep};
    CollisionReport crep = classify_collision(trace, setup);

    json intervals = json::array();
    for (auto& iv : crep.one_peak_intervals) intervals.push_back({iv.first, iv.second});
    json rep{{"a1", cfg.a1},
             {"ratio", cfg.ratio},
             {"a2", a2},
             {"speed_big", big.c},
             {"speed_small", small.c},
             {"L", cfg.L},
             {"h", cfg.h},
             {"k", cfg.k},
             {"order", cfg.r},
             {"T", grid.T},
             {"lax_case", crep.lax_case},
             {"one_peak_intervals", intervals},
             {"a1_after", crep.a1_after},
             {"a2_after", crep.a2_after},
             {"shift_small", crep.shift_small},
             {"shift_large", crep.shift_large},
             {"t_measure", crep.t_measure},
             {"entry_gap_rel", crep.entry_gap_rel}};
    write_json(out_dir, "collide_report.json", rep);

    {
        auto f = open_out(out_dir, "final_state.csv");
        write_state_csv(f, rec.snapshots.back());
    }
    return crep;
}

SolitonCount run_resolve(const ResolveConfig& cfg, const fs::path& out_dir) {
    check(cfg.a > 0.0 && cfg.b > 0.0, "Gaussian parameters must be positive");
    int N = cells_from_h(cfg.L, cfg.h);
    PeriodicSplineSpace sp(cfg.L, N, cfg.r);
    TimeGrid grid = make_time_grid(cfg.T, cfg.k, sp.mesh().h);

    GaussianProfile g{cfg.a, cfg.b};
    SerreOperator op(sp);
    SerreState s0 = gaussian_initial_state(sp, g);

    std::vector<double> snaps = cfg.snap_times.empty() ? std::vector<double>{cfg.T}
                                                       : cfg.snap_times;
    for (double t : snaps)
        check(t >= 0.0 && t <= cfg.T + 1e-12, "snapshot time outside [0, T]");

    size_t next = 0;
    std::sort(snaps.begin(), snaps.end());
    SerreState last = make_state(sp);
    EvolveOptions opts;
    opts.snapshot_stride = 0;
    opts.invariant_stride = 0;
    opts.on_sample = [&](const SerreState& s, long) {
        while (next < snaps.size() && s.t >= snaps[next] - 0.5 * grid.k) {
            std::ostringstream name;
            name << "state_t" << snaps[next] << ".csv";
            auto f = open_out(out_dir, name.str());
            write_state_csv(f, s);
            ++next;
        }
        last = s;
    };
    evolve(op, std::move(s0), grid, opts);

    SolitonCount right = count_solitary_waves(last);

    // The mirrored state counts the left-going train; reflecting basis j
    // to N - r - j reflects the spline about x = 0.
    SerreState mirror = make_state(sp);
    for (int j = 0; j < N; ++j) {
        int jr = ((N - cfg.r - j) % N + N) % N;
        mirror.eta.c[jr] = last.eta.c[j];
        mirror.u.c[jr] = -last.u.c[j];
    }
    mirror.t = last.t;
    SolitonCount left = count_solitary_waves(mirror);

    json peaks = json::array();
    for (const Peak& p : right.peaks)
        peaks.push_back({{"x", p.x}, {"zeta", p.zeta}, {"converged", p.converged}});
    json rep{{"a", cfg.a},
             {"b", cfg.b},
             {"sqrt_a_over_b", std::sqrt(cfg.a / cfg.b)},
             {"L", cfg.L},
             {"h", cfg.h},
             {"k", cfg.k},
             {"order", cfg.r},
             {"T", grid.T},
             {"n_right", right.n},
             {"n_left", left.n},
             {"tail_amplitude", right.tail_amplitude},
             {"min_height", right.min_height},
             {"peaks_right", peaks}};
    write_json(out_dir, "resolve_report.json", rep);
    return right;
}

void run_analytics(const AnalyticsConfig& cfg, const fs::path& out_dir) {
    check(!cfg.cs.empty(), "speed list is empty");
    for (double c : cfg.cs) check(c > 1.0, "speeds must exceed 1");
    check(cfg.profile_samples >= 2, "need at least two profile samples");

    {
        auto f = open_out(out_dir, "amplitudes.csv");
        f << "c,A_serre,A_cb,A_euler_series\n";
        for (double c : cfg.cs) {
            AmplitudeTriple t = amplitude_ordering_report(c);
            f << num(c) << ',' << num(t.a_s) << ',' << num(t.a_cb) << ',' << num(t.a_euler)
              << '\n';
        }
    }
    {
        auto f = open_out(out_dir, "profiles.csv");
        f << "c,x,zeta,u\n";
        for (double c : cfg.cs) {
            SolitaryWave w(c, 0.0);
            for (int i = 0; i < cfg.profile_samples; ++i) {
                double x = -cfg.profile_halfwidth +
                           2.0 * cfg.profile_halfwidth * i / (cfg.profile_samples - 1);
                f << num(c) << ',' << num(x) << ',' << num(w.eta(x) - 1.0) << ','
                  << num(w.u(x)) << '\n';
            }
        }
    }
}

std::vector<StabilityResult> run_stability(const StabilityConfig& cfg, const fs::path& out_dir) {
    check(!cfg.courants.empty(), "Courant list is empty");
    for (double v : cfg.courants) check(v > 0.0, "Courant numbers must be positive");
    std::vector<StabilityResult> res = stability_probe(cfg.problem, cfg.courants);

    {
        auto f = open_out(out_dir, "stability.csv");
        f << "courant,verdict,final_l2_error\n";
        for (const StabilityResult& r : res) {
            f << num(r.courant) << ',' << to_string(r.verdict) << ',';
            if (std::isnan(r.final_l2_error))
                f << "NA";
            else
                f << num(r.final_l2_error);
            f << '\n';
        }
    }
    json rows = json::array();
    for (const StabilityResult& r : res) {
        json row{{"courant", r.courant}, {"verdict", to_string(r.verdict)}};
        if (std::isnan(r.final_l2_error))
            row["final_l2_error"] = nullptr;
        else
            row["final_l2_error"] = r.final_l2_error;
        rows.push_back(row);
    }
    json rep{{"problem",
              {{"L", cfg.problem.L},
               {"N", cfg.problem.N},
               {"order", cfg.problem.r},
               {"c", cfg.problem.c},
               {"x0", cfg.problem.x0},
               {"T", cfg.problem.T},
               {"baseline_courant", cfg.problem.baseline_courant}}},
             {"results", rows}};
    write_json(out_dir, "stability_report.json", rep);
    return res;
}

}  // namespace serre
