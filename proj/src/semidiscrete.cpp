#include "serre/semidiscrete.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

namespace serre {

SerreState make_state(const PeriodicSplineSpace& space) {
    return SerreState{make_field(space), make_field(space), 0.0};
}

InvariantTriple invariants(const SerreState& s) {
    const PeriodicSplineSpace& sp = *s.eta.space;
    require_same_space(s.u, sp);
    const int N = sp.dim(), Q = sp.qpts();
    const double h = sp.mesh().h;
    auto qe = sp.quad_values(s.eta.c, 0);
    auto qu = sp.quad_values(s.u.c, 0);
    auto qux = sp.quad_values(s.u.c, 1);
    double mass = 0.0, mom = 0.0, en = 0.0;
    for (int cell = 0; cell < N; ++cell)
        for (int q = 0; q < Q; ++q) {
            double w = sp.rule().weights[q] * h;
            double e = qe[cell * Q + q], u = qu[cell * Q + q], ux = qux[cell * Q + q];
            mass += w * e;
            mom += w * e * u;
            en += w * (e * u * u + e * e * e * ux * ux / 3.0 + (e - 1.0) * (e - 1.0));
        }
    return {mass, mom, 0.5 * en};
}

SerreOperator::SerreOperator(const PeriodicSplineSpace& space) : space_(space) {
    std::vector<double> ones(static_cast<size_t>(space.dim()) * space.qpts(), 1.0);
    mass_factor_ = std::make_unique<CyclicBandedFactor>(space.weighted_gram(ones, 0, 0));
}

void SerreOperator::rhs(const std::vector<double>& eta, const std::vector<double>& u, double t,
                        std::vector<double>& eta_dot, std::vector<double>& u_dot) {
    const PeriodicSplineSpace& sp = space_;
    const int N = sp.dim(), Q = sp.qpts();
    const size_t nq = static_cast<size_t>(N) * Q;

    sp.quad_values(eta, 0, q_eta_);
    sp.quad_values(eta, 1, q_etax_);
    sp.quad_values(u, 0, q_u_);
    sp.quad_values(u, 1, q_ux_);
    sp.quad_values(u, 2, q_uxx_);

    double emin = q_eta_[0];
    for (size_t i = 1; i < nq; ++i) emin = std::min(emin, q_eta_[i]);
    if (!(emin > 0.0))
        throw SolverBreakdown("depth positivity lost: min eta = " + std::to_string(emin) +
                              " at t = " + std::to_string(t));

    // Mass equation: M eta' = -((eta u)_x, phi) [+ forcing].
    g0_.resize(nq);
    for (size_t i = 0; i < nq; ++i) g0_[i] = q_eta_[i] * q_ux_[i] + q_etax_[i] * q_u_[i];
    b_.assign(N, 0.0);
    sp.add_load(g0_, 0, -1.0, b_);
    if (forcing_ && forcing_->mass_load) {
        const auto& xs = sp.quad_x();
        for (size_t i = 0; i < nq; ++i) g0_[i] = forcing_->mass_load(xs[i], t);
        sp.add_load(g0_, 0, 1.0, b_);
    }
    eta_dot.resize(N);
    mass_factor_->solve(b_.data(), eta_dot.data());

    // Velocity equation: V(eta) u' = -b2 [+ forcing].
    w3_.resize(nq);
    for (size_t i = 0; i < nq; ++i) w3_[i] = q_eta_[i] * q_eta_[i] * q_eta_[i] / 3.0;
    CyclicBandedMatrix vmat = sp.weighted_gram_pair(q_eta_, w3_);

    g0_.resize(nq);
    g1_.resize(nq);
    for (size_t i = 0; i < nq; ++i) {
        g0_[i] = q_eta_[i] * (q_etax_[i] + q_u_[i] * q_ux_[i]);
        g1_[i] = w3_[i] * (q_u_[i] * q_uxx_[i] - q_ux_[i] * q_ux_[i]);
    }
    b_.assign(N, 0.0);
    sp.add_load(g0_, 0, -1.0, b_);
    sp.add_load(g1_, 1, -1.0, b_);
    if (forcing_ && (forcing_->vel_load || forcing_->vel_load_dx)) {
        const auto& xs = sp.quad_x();
        if (forcing_->vel_load) {
            for (size_t i = 0; i < nq; ++i) g0_[i] = forcing_->vel_load(xs[i], t);
            sp.add_load(g0_, 0, 1.0, b_);
        }
        if (forcing_->vel_load_dx) {
            for (size_t i = 0; i < nq; ++i) g1_[i] = forcing_->vel_load_dx(xs[i], t);
            sp.add_load(g1_, 1, 1.0, b_);
        }
    }
    u_dot.resize(N);
    CyclicBandedFactor vf(vmat);
    vf.solve(b_.data(), u_dot.data());
}

void SerreOperator::rhs(const SerreState& s, SerreState& out) {
    require_same_space(s.eta, space_);
    require_same_space(s.u, space_);
    out.eta.space = &space_;
    out.u.space = &space_;
    rhs(s.eta.c, s.u.c, s.t, out.eta.c, out.u.c);
    out.t = s.t;
}

FieldCoeffs project_l2(const PeriodicSplineSpace& space, const std::function<double(double)>& f) {
    const auto& xs = space.quad_x();
    std::vector<double> fq(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) fq[i] = f(xs[i]);
    std::vector<double> ones(xs.size(), 1.0);
    auto b = space.load(fq, 0);
    FieldCoeffs out{&space, factor_solve(space.weighted_gram(ones, 0, 0), b)};
    return out;
}

FieldCoeffs project_elliptic_u0(const PeriodicSplineSpace& space,
                                const std::function<double(double)>& eta0,
                                const std::function<double(double)>& u0,
                                const std::function<double(double)>& u0_prime) {
    const auto& xs = space.quad_x();
    const size_t nq = xs.size();
    std::vector<double> w0(nq), w3(nq), g0(nq), g1(nq);
    for (size_t i = 0; i < nq; ++i) {
        double e = eta0(xs[i]);
        if (!(e > 0.0))
            throw SolverBreakdown("project_elliptic_u0: eta0 not positive at x = " +
                                  std::to_string(xs[i]));
        w0[i] = e;
        w3[i] = e * e * e / 3.0;
        g0[i] = e * u0(xs[i]);
        g1[i] = w3[i] * u0_prime(xs[i]);
    }
    auto b = space.load(g0, 0);
    space.add_load(g1, 1, 1.0, b);
    FieldCoeffs out{&space, factor_solve(space.weighted_gram_pair(w0, w3), b)};
    return out;
}

SerreState gaussian_initial_state(const PeriodicSplineSpace& space, const GaussianProfile& g) {
    double L = space.mesh().L;
    double tail = g.a * std::exp(-g.b * L * L);
    if (!(std::fabs(tail) < 1e-14))
        std::cerr << "gaussian_initial_state: profile tail " << tail
                  << " at the domain ends is not negligible; periodic wrap will distort it\n";
    SerreState s = make_state(space);
    s.eta = project_l2(space, [&g](double x) { return 1.0 + g.zeta(x); });
    return s;
}

}  // namespace serre
