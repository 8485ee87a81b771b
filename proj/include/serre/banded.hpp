#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace serre {

// Factorization failure: the matrix is not (numerically) symmetric positive
// definite, e.g. the velocity form after loss of depth positivity.
struct SolverBreakdown : std::runtime_error {
    explicit SolverBreakdown(const std::string& what) : std::runtime_error(what) {}
};

// Symmetric-structure cyclic band matrix: entry (i, j) may be nonzero only
// when the cyclic distance between i and j is at most p. Storage is by
// diagonal offset: at(i, d) addresses (i, (i+d) mod n), d in [-p, p].
class CyclicBandedMatrix {
public:
    CyclicBandedMatrix(int n, int p);

    int dim() const { return n_; }
    int half_bandwidth() const { return p_; }

    double& at(int i, int d) { return band_[i * (2 * p_ + 1) + p_ + d]; }
    double at(int i, int d) const { return band_[i * (2 * p_ + 1) + p_ + d]; }

    // Entry by global indices; zero outside the band.
    double entry(int i, int j) const;
    void add_entry(int i, int j, double v);

    void apply(const double* x, double* y) const;  // y = M x
    std::vector<double> apply(const std::vector<double>& x) const;

    double max_abs() const;
    bool is_symmetric(double tol) const;

private:
    int n_, p_;
    std::vector<double> band_;
};

// Cholesky-type factorization of an SPD cyclic band matrix via the bordered
// split M = [[A, B], [B^T, D]] with A the leading (n-p) x (n-p) band block:
// band Cholesky of A, dense Cholesky of the p x p Schur complement.
// Principal submatrices and Schur complements of SPD matrices are SPD, so
// construction fails only when M itself is not SPD.
class CyclicBandedFactor {
public:
    explicit CyclicBandedFactor(const CyclicBandedMatrix& m);

    void solve(const double* b, double* x) const;
    std::vector<double> solve(const std::vector<double>& b) const;
    int dim() const { return n_; }

private:
    int n_, p_, m_;                // m_ = n_ - p_
    std::vector<double> lb_;       // band Cholesky factor of A, lower, m_ x (p_+1)
    std::vector<double> border_;   // B, m_ x p_ row-major
    std::vector<double> w_;        // A^{-1} B, m_ x p_ row-major
    std::vector<double> schur_;    // Cholesky factor of Schur complement, p_ x p_ lower

    void band_solve(double* y) const;  // in place, A y = rhs
};

// One-shot convenience; factor and solve. For repeated solves against the
// same matrix construct a CyclicBandedFactor once.
std::vector<double> factor_solve(const CyclicBandedMatrix& m, const std::vector<double>& b);

}  // namespace serre
