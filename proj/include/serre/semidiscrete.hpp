#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "serre/solutions.hpp"
#include "serre/spline_space.hpp"

namespace serre {

struct SerreState {
    FieldCoeffs eta, u;
    double t = 0.0;
};

SerreState make_state(const PeriodicSplineSpace& space);

struct InvariantTriple {
    double mass;      // integral of eta
    double momentum;  // integral of eta u
    double energy;    // (1/2) integral of eta u^2 + (1/3) eta^3 u_x^2 + (eta-1)^2
};

InvariantTriple invariants(const SerreState& s);

// Optional nonhomogeneous terms, given in weak form: the eta equation gains
// (mass_load, phi) on its right side; the velocity equation gains
// (vel_load, chi) + (vel_load_dx, chi'). Arguments are (x, t).
struct Forcing {
    std::function<double(double, double)> mass_load;
    std::function<double(double, double)> vel_load;
    std::function<double(double, double)> vel_load_dx;
};

// Galerkin semidiscrete operator. For coefficients (eta, u):
//   M eta' = -b1,            b1[i] = ((eta u)_x, phi_i)
//   V(eta) u' = -b2,         V(eta) = (eta phi_j, phi_i) + (1/3)(eta^3 phi_j', phi_i')
//   b2[i] = (eta eta_x + eta u u_x, phi_i) + (1/3)(eta^3 (u u_xx - u_x^2), phi_i')
// with all weights evaluated pointwise at quadrature nodes. The constant mass
// matrix is factored once; V(eta) is reassembled and refactored per call.
class SerreOperator {
public:
    explicit SerreOperator(const PeriodicSplineSpace& space);

    const PeriodicSplineSpace& space() const { return space_; }

    void set_forcing(Forcing f) { forcing_ = std::move(f); }
    bool has_forcing() const { return forcing_.has_value(); }

    // Throws SolverBreakdown when depth positivity is lost at a quadrature
    // node (the velocity form is then no longer guaranteed definite).
    void rhs(const std::vector<double>& eta, const std::vector<double>& u, double t,
             std::vector<double>& eta_dot, std::vector<double>& u_dot);

    void rhs(const SerreState& s, SerreState& out);

    const CyclicBandedFactor& mass_factor() const { return *mass_factor_; }

private:
    const PeriodicSplineSpace& space_;
    std::unique_ptr<CyclicBandedFactor> mass_factor_;
    std::optional<Forcing> forcing_;
    // Scratch, reused across calls.
    std::vector<double> q_eta_, q_etax_, q_u_, q_ux_, q_uxx_, g0_, g1_, w3_, b_;
};

// L^2 projection: coefficients of the best L^2 approximation of f.
FieldCoeffs project_l2(const PeriodicSplineSpace& space, const std::function<double(double)>& f);

// Weighted (elliptic) projection of the initial velocity: v solving
//   (eta0 v, phi) + (1/3)(eta0^3 v', phi') = (eta0 u0, phi) + (1/3)(eta0^3 u0', phi')
// for all basis phi. u0' is passed explicitly to keep the right side exact.
FieldCoeffs project_elliptic_u0(const PeriodicSplineSpace& space,
                                const std::function<double(double)>& eta0,
                                const std::function<double(double)>& u0,
                                const std::function<double(double)>& u0_prime);

// State with eta the projection of 1 + g.zeta and u identically zero. Warns
// on stderr when the Gaussian tail is not negligible at the domain ends
// (effective periodicity needs a e^{-b L^2} < 1e-14).
SerreState gaussian_initial_state(const PeriodicSplineSpace& space, const GaussianProfile& g);

}  // namespace serre
