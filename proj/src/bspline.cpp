#include "serre/bspline.hpp"

#include <cassert>
#include <cstdint>

namespace serre {

namespace {

// Cox-de Boor value recursion; B_1 = indicator of [0,1).
double value(int r, double x) {
    // Half-open base case keeps every B_r right-continuous at knots.
    if (r == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
    if (x <= 0.0 || x >= r) return 0.0;
    return (x * value(r - 1, x) + (r - x) * value(r - 1, x - 1.0)) / (r - 1);
}

std::int64_t binom(int n, int k) {
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace

double bspline_value(int r, int deriv, double x) {
    assert(r >= 1 && deriv >= 0 && deriv <= r - 1);
    if (deriv == 0) return value(r, x);
    // B_r^(d)(x) = sum_i (-1)^i C(d,i) B_{r-d}(x - i).
    double s = 0.0;
    double sign = 1.0;
    for (int i = 0; i <= deriv; ++i) {
        s += sign * static_cast<double>(binom(deriv, i)) * value(r - deriv, x - i);
        sign = -sign;
    }
    return s;
}

}  // namespace serre
