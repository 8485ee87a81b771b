#pragma once

#include <functional>
#include <vector>

#include "serre/banded.hpp"
#include "serre/quadrature.hpp"

namespace serre {

struct PeriodicMesh {
    double L;   // domain is [-L, L]
    int N;      // cells
    double h;   // 2L/N
};

// Uniform-mesh periodic B-spline space of order r (degree r-1, smoothness
// C^{r-2}) on [-L, L]. Dimension N. Basis j is the translate supported on
// cells j..j+r-1 (mod N); on cell k the nonzero basis functions are
// j = k - m, m = 0..r-1, with value B_r(s + m) at local coordinate s.
class PeriodicSplineSpace {
public:
    PeriodicSplineSpace(double L, int N, int r);

    const PeriodicMesh& mesh() const { return mesh_; }
    int order() const { return r_; }
    int dim() const { return mesh_.N; }
    int qpts() const { return quad_.size(); }
    const QuadratureRule& rule() const { return quad_; }

    // Physical coordinates of all quadrature nodes, cell-major, length N*qpts.
    const std::vector<double>& quad_x() const { return quad_x_; }
    double cell_left(int cell) const { return -mesh_.L + cell * mesh_.h; }

    int global_index(int cell, int m) const { return gidx_[cell * r_ + m]; }

    // Local basis table for derivative d (0..2): entry (m, q) is
    // B_r^{(d)}(s_q + m) / h^d, i.e. already scaled to physical derivatives.
    const double* table(int d) const { return tables_[d].data(); }

    // Field evaluation at arbitrary x (periodic wrap), deriv 0..2.
    double eval(const std::vector<double>& coeff, double x, int deriv = 0) const;

    // Values of the field at all quadrature nodes, cell-major.
    void quad_values(const std::vector<double>& coeff, int deriv, std::vector<double>& out) const;
    std::vector<double> quad_values(const std::vector<double>& coeff, int deriv = 0) const;

    // Values at the N mesh nodes x_j = -L + j h.
    std::vector<double> nodal_values(const std::vector<double>& coeff, int deriv = 0) const;

    // Gram-type matrix with pointwise weight w at quadrature nodes:
    // M[i][j] = integral w phi_j^{(du)} phi_i^{(dv)}.
    CyclicBandedMatrix weighted_gram(const std::vector<double>& wq, int du, int dv) const;

    // Fused M = gram(w0, 0, 0) + gram(w1, 1, 1); the velocity-form shape.
    CyclicBandedMatrix weighted_gram_pair(const std::vector<double>& w0q,
                                          const std::vector<double>& w1q) const;

    // Load vector b[i] = integral g phi_i^{(dv)} from pointwise values.
    std::vector<double> load(const std::vector<double>& gq, int dv) const;
    void add_load(const std::vector<double>& gq, int dv, double scale, std::vector<double>& b) const;

private:
    PeriodicMesh mesh_;
    int r_;
    QuadratureRule quad_;
    std::vector<double> tables_[3];  // r x qpts row-major, physical scaling
    std::vector<int> gidx_;          // N x r
    std::vector<double> quad_x_;
    std::vector<double> node_table_[3];  // B_r^{(d)}(m)/h^d, m = 0..r-1
};

struct FieldCoeffs {
    const PeriodicSplineSpace* space = nullptr;
    std::vector<double> c;
};

FieldCoeffs make_field(const PeriodicSplineSpace& space);
void require_same_space(const FieldCoeffs& a, const PeriodicSplineSpace& space);

double eval_field(const FieldCoeffs& f, double x, int deriv = 0);

// Free-function assembly entry points; thin wrappers over the space methods.
CyclicBandedMatrix assemble_weighted_gram(const PeriodicSplineSpace& space,
                                          const std::function<double(double)>& w, int du, int dv);
CyclicBandedMatrix assemble_weighted_gram(const PeriodicSplineSpace& space, const FieldCoeffs& w,
                                          int du, int dv);
std::vector<double> assemble_load(const PeriodicSplineSpace& space,
                                  const std::function<double(double)>& g, int dv);

}  // namespace serre
