#pragma once

#include <array>

namespace serre {

// Exact solitary wave: eta = 1 + A sech^2(K xi), u = c (1 - 1/eta),
// xi = x - x0 - c t, with A = c^2 - 1 and K = sqrt(3A / (4 c^2)).
// Spatial derivatives up to third order are closed-form; time derivatives
// follow from d/dt = -c d/dx.
struct SolitaryWave {
    double c, A, K, x0;

    SolitaryWave(double speed, double center);

    double eta(double x, double t = 0.0) const;
    double eta_x(double x, double t = 0.0) const;
    double eta_xx(double x, double t = 0.0) const;
    double eta_xxx(double x, double t = 0.0) const;
    double u(double x, double t = 0.0) const;
    double u_x(double x, double t = 0.0) const;
    double u_xx(double x, double t = 0.0) const;
    double u_xxx(double x, double t = 0.0) const;
    double eta_t(double x, double t = 0.0) const { return -c * eta_x(x, t); }
    double u_t(double x, double t = 0.0) const { return -c * u_x(x, t); }
    double u_xt(double x, double t = 0.0) const { return -c * u_xx(x, t); }

    // Crest position at time t (no wrap applied).
    double crest(double t) const { return x0 + c * t; }
};

// (eta, u) of the wave at (x, t).
std::array<double, 2> solitary_wave_eval(const SolitaryWave& w, double x, double t);

// Pointwise residuals of the two continuous equations evaluated on the wave;
// both vanish for the exact solution.
std::array<double, 2> solitary_residual(const SolitaryWave& w, double x, double t);

struct GaussianProfile {
    double a, b;  // zeta(x) = a exp(-b x^2), u = 0
    double zeta(double x) const;
};

// Speed-amplitude relation of the classical Boussinesq solitary wave:
// c^2 = [6 (1+A)^2 / (3+2A)] * [((1+A) ln(1+A) - A) / A^2]; series-safe at 0.
double cb_speed_from_amplitude(double A);

// Inverse of the above: unique A > 0 with cb_speed_from_amplitude(A) = c^2.
double cb_amplitude_from_speed(double c);

// Quartic series approximations in y = c^2 - 1.
double cb_amplitude_series(double y);
double euler_amplitude_series(double c);

struct AmplitudeTriple {
    double a_s;      // Serre: exactly y
    double a_euler;  // Euler series value
    double a_cb;     // classical Boussinesq root
};
AmplitudeTriple amplitude_ordering_report(double c);

}  // namespace serre
