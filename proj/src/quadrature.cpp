#include "serre/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace serre {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = (n == 0) ? p0 : p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(int npts) {
    if (npts < 1) throw std::invalid_argument("gauss_legendre: npts must be positive");
    QuadratureRule rule;
    rule.nodes.resize(npts);
    rule.weights.resize(npts);
    for (int i = 0; i < npts; ++i) {
        // Root of P_n on [-1,1]; standard Chebyshev-flavored initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (npts + 0.5));
        double p = 0, dp = 1;
        for (int it = 0; it < 100; ++it) {
            legendre(npts, x, p, dp);
            double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        legendre(npts, x, p, dp);
        // Map [-1,1] -> [0,1]; classical weight 2/((1-x^2) dp^2) halves.
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace serre
