#include "serre/banded.hpp"

#include <algorithm>
#include <cmath>

namespace serre {

CyclicBandedMatrix::CyclicBandedMatrix(int n, int p) : n_(n), p_(p) {
    if (p < 1 || n < 2 * p + 2)
        throw std::invalid_argument("CyclicBandedMatrix: need n >= 2p+2");
    band_.assign(static_cast<size_t>(n) * (2 * p + 1), 0.0);
}

double CyclicBandedMatrix::entry(int i, int j) const {
    int dd = ((j - i) % n_ + n_) % n_;
    if (dd <= p_) return at(i, dd);
    if (dd >= n_ - p_) return at(i, dd - n_);
    return 0.0;
}

void CyclicBandedMatrix::add_entry(int i, int j, double v) {
    int dd = ((j - i) % n_ + n_) % n_;
    if (dd <= p_)
        at(i, dd) += v;
    else if (dd >= n_ - p_)
        at(i, dd - n_) += v;
    else
        throw std::invalid_argument("CyclicBandedMatrix::add_entry outside band");
}

void CyclicBandedMatrix::apply(const double* x, double* y) const {
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int d = -p_; d <= p_; ++d) {
            int j = i + d;
            if (j < 0) j += n_;
            else if (j >= n_) j -= n_;
            s += at(i, d) * x[j];
        }
        y[i] = s;
    }
}

std::vector<double> CyclicBandedMatrix::apply(const std::vector<double>& x) const {
    std::vector<double> y(n_);
    apply(x.data(), y.data());
    return y;
}

double CyclicBandedMatrix::max_abs() const {
    double m = 0.0;
    for (double v : band_) m = std::max(m, std::fabs(v));
    return m;
}

bool CyclicBandedMatrix::is_symmetric(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int d = 1; d <= p_; ++d) {
            int j = (i + d) % n_;
            if (std::fabs(at(i, d) - at(j, -d)) > tol) return false;
        }
    return true;
}

CyclicBandedFactor::CyclicBandedFactor(const CyclicBandedMatrix& m)
    : n_(m.dim()), p_(m.half_bandwidth()), m_(n_ - p_) {
    if (!m.is_symmetric(1e-11 * std::max(1.0, m.max_abs())))
        throw std::invalid_argument("CyclicBandedFactor: matrix not symmetric");

    const int w = p_ + 1;
    lb_.assign(static_cast<size_t>(m_) * w, 0.0);
    border_.assign(static_cast<size_t>(m_) * p_, 0.0);

    // Route band entries of rows 0..m_-1 into A (band, lower part) and B.
    for (int i = 0; i < m_; ++i)
        for (int d = -p_; d <= p_; ++d) {
            double v = m.at(i, d);
            int j = i + d;
            if (j < 0)
                border_[i * p_ + (j + p_)] += v;  // wraps to column n_+j = m_+(j+p_)
            else if (j >= m_)
                border_[i * p_ + (j - m_)] += v;
            else if (d <= 0)
                lb_[i * w + (-d)] = v;  // stage A's lower band in the factor array
        }

    // D block from the trailing rows; entries wrapping to columns < m_ are
    // the transpose of B and are skipped.
    std::vector<double> dblk(static_cast<size_t>(p_) * p_, 0.0);
    for (int a = 0; a < p_; ++a) {
        int i = m_ + a;
        for (int d = -p_; d <= p_; ++d) {
            int j = i + d;
            if (j >= n_) j -= n_;
            if (j >= m_) dblk[a * p_ + (j - m_)] += m.at(i, d);
        }
    }

    // In-place band Cholesky of A; lb_[i*w + k] = L(i, i-k).
    double scale = 0.0;
    for (int i = 0; i < m_; ++i) scale = std::max(scale, std::fabs(lb_[i * w]));
    const double tiny = scale * 1e-14;
    for (int i = 0; i < m_; ++i) {
        int jmin = std::max(0, i - p_);
        for (int j = jmin; j <= i; ++j) {
            double s = lb_[i * w + (i - j)];
            int tmin = std::max(jmin, j - p_);
            for (int t = tmin; t < j; ++t)
                s -= lb_[i * w + (i - t)] * lb_[j * w + (j - t)];
            if (j < i) {
                lb_[i * w + (i - j)] = s / lb_[j * w];
            } else {
                if (!(s > tiny))
                    throw SolverBreakdown("cyclic band factorization: nonpositive pivot at row " +
                                          std::to_string(i));
                lb_[i * w] = std::sqrt(s);
            }
        }
    }

    // W = A^{-1} B column by column.
    w_.assign(static_cast<size_t>(m_) * p_, 0.0);
    std::vector<double> col(m_);
    for (int c = 0; c < p_; ++c) {
        for (int i = 0; i < m_; ++i) col[i] = border_[i * p_ + c];
        band_solve(col.data());
        for (int i = 0; i < m_; ++i) w_[i * p_ + c] = col[i];
    }

    // Schur complement S = D - B^T W, then its dense Cholesky.
    schur_.assign(static_cast<size_t>(p_) * p_, 0.0);
    for (int a = 0; a < p_; ++a)
        for (int b = 0; b <= a; ++b) {
            double s = dblk[a * p_ + b];
            for (int i = 0; i < m_; ++i) s -= border_[i * p_ + a] * w_[i * p_ + b];
            schur_[a * p_ + b] = s;
        }
    for (int a = 0; a < p_; ++a) {
        for (int b = 0; b <= a; ++b) {
            double s = schur_[a * p_ + b];
            for (int t = 0; t < b; ++t) s -= schur_[a * p_ + t] * schur_[b * p_ + t];
            if (b < a) {
                schur_[a * p_ + b] = s / schur_[b * p_ + b];
            } else {
                if (!(s > tiny))
                    throw SolverBreakdown("cyclic band factorization: Schur complement not SPD");
                schur_[a * p_ + b] = std::sqrt(s);
            }
        }
    }
}

void CyclicBandedFactor::band_solve(double* y) const {
    const int w = p_ + 1;
    for (int i = 0; i < m_; ++i) {
        double s = y[i];
        int tmin = std::max(0, i - p_);
        for (int t = tmin; t < i; ++t) s -= lb_[i * w + (i - t)] * y[t];
        y[i] = s / lb_[i * w];
    }
    for (int i = m_ - 1; i >= 0; --i) {
        double s = y[i];
        int tmax = std::min(m_ - 1, i + p_);
        for (int t = i + 1; t <= tmax; ++t) s -= lb_[t * w + (t - i)] * y[t];
        y[i] = s / lb_[i * w];
    }
}

void CyclicBandedFactor::solve(const double* b, double* x) const {
    std::vector<double> y(b, b + m_);
    band_solve(y.data());

    // z solves S z = b2 - B^T y.
    std::vector<double> z(p_);
    for (int c = 0; c < p_; ++c) {
        double s = b[m_ + c];
        for (int i = 0; i < m_; ++i) s -= border_[i * p_ + c] * y[i];
        z[c] = s;
    }
    for (int a = 0; a < p_; ++a) {
        double s = z[a];
        for (int t = 0; t < a; ++t) s -= schur_[a * p_ + t] * z[t];
        z[a] = s / schur_[a * p_ + a];
    }
    for (int a = p_ - 1; a >= 0; --a) {
        double s = z[a];
        for (int t = a + 1; t < p_; ++t) s -= schur_[t * p_ + a] * z[t];
        z[a] = s / schur_[a * p_ + a];
    }

    for (int i = 0; i < m_; ++i) {
        double s = y[i];
        for (int c = 0; c < p_; ++c) s -= w_[i * p_ + c] * z[c];
        x[i] = s;
    }
    for (int c = 0; c < p_; ++c) x[m_ + c] = z[c];
}

std::vector<double> CyclicBandedFactor::solve(const std::vector<double>& b) const {
    std::vector<double> x(n_);
    solve(b.data(), x.data());
    return x;
}

std::vector<double> factor_solve(const CyclicBandedMatrix& m, const std::vector<double>& b) {
    return CyclicBandedFactor(m).solve(b);
}

}  // namespace serre
