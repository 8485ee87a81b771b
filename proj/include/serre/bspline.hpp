#pragma once

namespace serre {

// Cardinal B-spline of order r (piecewise degree r-1), supported on (0, r),
// normalized to unit integral. `deriv` up to r-1; at knots the value is the
// right-limit, which is the continuous value whenever deriv <= r-2.
double bspline_value(int r, int deriv, double x);

}  // namespace serre
