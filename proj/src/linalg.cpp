#include "coprime/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coprime::linalg {

double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    const double* a = m.data();
    std::size_t total = static_cast<std::size_t>(m.rows()) * m.cols();
    for (std::size_t i = 0; i < total; ++i) s += a[i] * a[i];
    return std::sqrt(s);
}

double trace(const Matrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i) s += m(i, i);
    return s;
}

double entry_sum(const Matrix& m) {
    const double* a = m.data();
    std::size_t total = static_cast<std::size_t>(m.rows()) * m.cols();
    double s = 0.0;
    for (std::size_t i = 0; i < total; ++i) s += a[i];
    return s;
}

namespace {

double offdiag_norm(const Matrix& a) {
    int n = a.rows();
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
}

}  // namespace

EigenDecomposition symmetric_eigendecomposition(const Matrix& m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("linalg: eigendecomposition needs a square matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > 1e-10)
                throw std::invalid_argument("linalg: matrix is not symmetric within 1e-10");

    Matrix a = m;
    // symmetrize exactly so both triangles agree during the sweeps
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    Matrix v = Matrix::identity(n);

    const double threshold = 1e-12 * std::max(1.0, frobenius_norm(m));
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(a) <= threshold) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) continue;
                double app = a(p, p);
                double aqq = a(q, q);
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = a(r, p);
                    double arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(p, r) = a(r, p);
                    a(r, q) = s * arp + c * arq;
                    a(q, r) = a(r, q);
                }
                for (int r = 0; r < n; ++r) {
                    double vrp = v(r, p);
                    double vrq = v(r, q);
                    v(r, p) = c * vrp - s * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

    EigenDecomposition out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
        for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[static_cast<std::size_t>(k)]);
    }
    return out;
}

Matrix project_psd(const Matrix& m) {
    auto eig = symmetric_eigendecomposition(m);
    int n = m.rows();
    Matrix out(n, n);
    for (int k = 0; k < n; ++k) {
        double lambda = eig.values[static_cast<std::size_t>(k)];
        if (lambda <= 0.0) continue;
        // rank-one accumulate lambda * v_k v_k^T
        for (int i = 0; i < n; ++i) {
            double s = lambda * eig.vectors(i, k);
            if (s == 0.0) continue;
            double* orow = out.row(i);
            for (int j = 0; j < n; ++j) orow[j] += s * eig.vectors(j, k);
        }
    }
    // exact symmetry guards against asymmetric rounding in the accumulation
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double val = 0.5 * (out(i, j) + out(j, i));
            out(i, j) = val;
            out(j, i) = val;
        }
    return out;
}

}  // namespace coprime::linalg
