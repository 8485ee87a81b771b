#include "serre/spline_space.hpp"

#include <cmath>
#include <stdexcept>

#include "serre/bspline.hpp"

namespace serre {

PeriodicSplineSpace::PeriodicSplineSpace(double L, int N, int r)
    : mesh_{L, N, 2.0 * L / N}, r_(r), quad_(gauss_legendre(r + 2)) {
    if (r < 3) throw std::invalid_argument("PeriodicSplineSpace: order r must be >= 3");
    if (N < 2 * r) throw std::invalid_argument("PeriodicSplineSpace: need N >= 2r cells");
    if (!(L > 0)) throw std::invalid_argument("PeriodicSplineSpace: L must be positive");

    const int Q = quad_.size();
    const double h = mesh_.h;
    for (int d = 0; d <= 2; ++d) {
        tables_[d].resize(static_cast<size_t>(r) * Q);
        double hs = std::pow(h, -d);
        for (int m = 0; m < r; ++m)
            for (int q = 0; q < Q; ++q)
                tables_[d][m * Q + q] = bspline_value(r, d, quad_.nodes[q] + m) * hs;
        node_table_[d].resize(r);
        for (int m = 0; m < r; ++m) node_table_[d][m] = bspline_value(r, d, m) * hs;
    }

    gidx_.resize(static_cast<size_t>(N) * r);
    for (int cell = 0; cell < N; ++cell)
        for (int m = 0; m < r; ++m)
            gidx_[cell * r + m] = (cell - m + N) % N;

    quad_x_.resize(static_cast<size_t>(N) * Q);
    for (int cell = 0; cell < N; ++cell)
        for (int q = 0; q < Q; ++q)
            quad_x_[cell * Q + q] = -L + (cell + quad_.nodes[q]) * h;
}

double PeriodicSplineSpace::eval(const std::vector<double>& coeff, double x, int deriv) const {
    const double L = mesh_.L, h = mesh_.h;
    const int N = mesh_.N;
    double y = x - 2.0 * L * std::floor((x + L) / (2.0 * L));
    int cell = static_cast<int>((y + L) / h);
    if (cell >= N) cell = N - 1;
    if (cell < 0) cell = 0;
    double s = (y + L) / h - cell;
    double hs = std::pow(h, -deriv);
    double v = 0.0;
    for (int m = 0; m < r_; ++m)
        v += coeff[gidx_[cell * r_ + m]] * bspline_value(r_, deriv, s + m);
    return v * hs;
}

void PeriodicSplineSpace::quad_values(const std::vector<double>& coeff, int deriv,
                                      std::vector<double>& out) const {
    const int N = mesh_.N, Q = quad_.size(), r = r_;
    out.resize(static_cast<size_t>(N) * Q);
    const double* tab = tables_[deriv].data();
    for (int cell = 0; cell < N; ++cell) {
        const int* gi = &gidx_[cell * r];
        double* o = &out[cell * Q];
        for (int q = 0; q < Q; ++q) o[q] = 0.0;
        for (int m = 0; m < r; ++m) {
            double c = coeff[gi[m]];
            const double* t = tab + m * Q;
            for (int q = 0; q < Q; ++q) o[q] += c * t[q];
        }
    }
}

std::vector<double> PeriodicSplineSpace::quad_values(const std::vector<double>& coeff,
                                                     int deriv) const {
    std::vector<double> out;
    quad_values(coeff, deriv, out);
    return out;
}

std::vector<double> PeriodicSplineSpace::nodal_values(const std::vector<double>& coeff,
                                                      int deriv) const {
    const int N = mesh_.N, r = r_;
    std::vector<double> out(N, 0.0);
    const double* nt = node_table_[deriv].data();
    for (int j = 0; j < N; ++j) {
        double v = 0.0;
        // At node x_j only basis j-m, m = 1..r-1 are nonzero (B_r(0) = 0).
        for (int m = 1; m < r; ++m) v += coeff[(j - m + N) % N] * nt[m];
        out[j] = v;
    }
    return out;
}

CyclicBandedMatrix PeriodicSplineSpace::weighted_gram(const std::vector<double>& wq, int du,
                                                      int dv) const {
    const int N = mesh_.N, Q = quad_.size(), r = r_;
    const double h = mesh_.h;
    CyclicBandedMatrix M(N, r - 1);
    const double* tu = tables_[du].data();
    const double* tv = tables_[dv].data();
    std::vector<double> local(static_cast<size_t>(r) * r);
    for (int cell = 0; cell < N; ++cell) {
        std::fill(local.begin(), local.end(), 0.0);
        for (int q = 0; q < Q; ++q) {
            double wsc = wq[cell * Q + q] * quad_.weights[q] * h;
            for (int a = 0; a < r; ++a) {
                double ta = wsc * tv[a * Q + q];
                for (int b = 0; b < r; ++b) local[a * r + b] += ta * tu[b * Q + q];
            }
        }
        const int* gi = &gidx_[cell * r];
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                M.at(gi[a], a - b) += local[a * r + b];
    }
    return M;
}

CyclicBandedMatrix PeriodicSplineSpace::weighted_gram_pair(const std::vector<double>& w0q,
                                                           const std::vector<double>& w1q) const {
    const int N = mesh_.N, Q = quad_.size(), r = r_;
    const double h = mesh_.h;
    CyclicBandedMatrix M(N, r - 1);
    const double* t0 = tables_[0].data();
    const double* t1 = tables_[1].data();
    std::vector<double> local(static_cast<size_t>(r) * r);
    for (int cell = 0; cell < N; ++cell) {
        std::fill(local.begin(), local.end(), 0.0);
        for (int q = 0; q < Q; ++q) {
            double w0 = w0q[cell * Q + q] * quad_.weights[q] * h;
            double w1 = w1q[cell * Q + q] * quad_.weights[q] * h;
            for (int a = 0; a < r; ++a) {
                double va = w0 * t0[a * Q + q];
                double da = w1 * t1[a * Q + q];
                for (int b = 0; b < r; ++b)
                    local[a * r + b] += va * t0[b * Q + q] + da * t1[b * Q + q];
            }
        }
        const int* gi = &gidx_[cell * r];
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                M.at(gi[a], a - b) += local[a * r + b];
    }
    return M;
}

std::vector<double> PeriodicSplineSpace::load(const std::vector<double>& gq, int dv) const {
    std::vector<double> b(mesh_.N, 0.0);
    add_load(gq, dv, 1.0, b);
    return b;
}

void PeriodicSplineSpace::add_load(const std::vector<double>& gq, int dv, double scale,
                                   std::vector<double>& b) const {
    const int N = mesh_.N, Q = quad_.size(), r = r_;
    const double h = mesh_.h;
    const double* tv = tables_[dv].data();
    for (int cell = 0; cell < N; ++cell) {
        const int* gi = &gidx_[cell * r];
        for (int q = 0; q < Q; ++q) {
            double g = gq[cell * Q + q] * quad_.weights[q] * h * scale;
            for (int a = 0; a < r; ++a) b[gi[a]] += g * tv[a * Q + q];
        }
    }
}

FieldCoeffs make_field(const PeriodicSplineSpace& space) {
    return FieldCoeffs{&space, std::vector<double>(space.dim(), 0.0)};
}

void require_same_space(const FieldCoeffs& a, const PeriodicSplineSpace& space) {
    if (a.space != &space)
        throw std::invalid_argument("field belongs to a different spline space");
}

double eval_field(const FieldCoeffs& f, double x, int deriv) {
    return f.space->eval(f.c, x, deriv);
}

namespace {
std::vector<double> values_at_quad(const PeriodicSplineSpace& space,
                                   const std::function<double(double)>& f) {
    const auto& xs = space.quad_x();
    std::vector<double> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
}
}  // namespace

CyclicBandedMatrix assemble_weighted_gram(const PeriodicSplineSpace& space,
                                          const std::function<double(double)>& w, int du, int dv) {
    return space.weighted_gram(values_at_quad(space, w), du, dv);
}

CyclicBandedMatrix assemble_weighted_gram(const PeriodicSplineSpace& space, const FieldCoeffs& w,
                                          int du, int dv) {
    require_same_space(w, space);
    return space.weighted_gram(space.quad_values(w.c, 0), du, dv);
}

std::vector<double> assemble_load(const PeriodicSplineSpace& space,
                                  const std::function<double(double)>& g, int dv) {
    return space.load(values_at_quad(space, g), dv);
}

}  // namespace serre
