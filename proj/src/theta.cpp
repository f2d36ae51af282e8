#include "coprime/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coprime/errors.hpp"
#include "coprime/numbertheory.hpp"

namespace coprime::theta {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("theta: rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

OrthRep build_factor_representation(std::int64_t n) {
    if (n < 2) throw std::domain_error("theta: representation needs n >= 2, got " + std::to_string(n));
    auto table = nt::FactorTable::build(n);
    int k = table.prime_count();

    OrthRep rep;
    rep.dim = k;
    rep.handle.assign(static_cast<std::size_t>(k), 1.0 / std::sqrt(static_cast<double>(k)));
    ExactForm exact;
    exact.dim = k;

    for (std::int64_t v = 2; v <= n; ++v) {
        rep.labels.push_back(v);
        auto factors = table.factors_of(v);
        int lv = static_cast<int>(factors.size());
        std::vector<int> support;
        support.reserve(factors.size());
        std::vector<double> vec(static_cast<std::size_t>(k), 0.0);
        double w = 1.0 / std::sqrt(static_cast<double>(lv));
        for (std::int64_t p : factors) {
            int idx = table.prime_index(p);
            support.push_back(idx);
            vec[static_cast<std::size_t>(idx)] = w;
        }
        exact.support.push_back(std::move(support));
        rep.vectors.push_back(std::move(vec));
    }
    rep.exact = std::move(exact);
    return rep;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int position_of_label(const OrthRep& rep, std::int64_t label) {
    auto it = std::find(rep.labels.begin(), rep.labels.end(), label);
    if (it == rep.labels.end())
        throw std::invalid_argument("theta: representation has no vertex labeled " + std::to_string(label));
    return static_cast<int>(it - rep.labels.begin());
}

}  // namespace

double rep_value(const OrthRep& rep) {
    double best = 0.0;
    for (std::size_t i = 0; i < rep.vectors.size(); ++i) {
        double ip = dot(rep.handle, rep.vectors[i]);
        if (std::abs(ip) < 1e-12)
            throw DegenerateHandle("theta: handle is orthogonal to the vector of vertex " +
                                   std::to_string(rep.labels[i]));
        best = std::max(best, 1.0 / (ip * ip));
    }
    return best;
}

Rational rep_value_exact(const OrthRep& rep) {
    if (!rep.exact)
        throw std::invalid_argument("theta: representation carries no exact form");
    // (c.x_v)^2 = l_v / dim for uniform handle and equal-weight support,
    // so the vertex score is dim / l_v and the max sits at minimal l_v.
    std::size_t min_l = rep.exact->support.empty() ? 1 : rep.exact->support[0].size();
    for (const auto& s : rep.exact->support) min_l = std::min(min_l, s.size());
    return Rational(rep.exact->dim, static_cast<std::int64_t>(min_l));
}

double vertex_value(const OrthRep& rep, std::int64_t label) {
    int pos = position_of_label(rep, label);
    double ip = dot(rep.handle, rep.vectors[static_cast<std::size_t>(pos)]);
    if (std::abs(ip) < 1e-12)
        throw DegenerateHandle("theta: handle is orthogonal to the vector of vertex " + std::to_string(label));
    return 1.0 / (ip * ip);
}

Rational vertex_value_exact(const OrthRep& rep, std::int64_t label) {
    if (!rep.exact)
        throw std::invalid_argument("theta: representation carries no exact form");
    int pos = position_of_label(rep, label);
    return Rational(rep.exact->dim,
                    static_cast<std::int64_t>(rep.exact->support[static_cast<std::size_t>(pos)].size()));
}

OrthReport verify_orthonormal(const OrthRep& rep, const Graph& g, double tol) {
    if (rep.labels != g.labels())
        throw std::invalid_argument("theta: representation vertex set does not match the graph");
    int n = g.order();

    OrthReport report;
    report.tol = tol;

    if (rep.exact) {
        // Norms are exactly 1 by construction (|support| equal weights
        // 1/sqrt(|support|)); orthogonality is an integer set intersection.
        report.exact_mode = true;
        bool ok = true;
        const auto& sup = rep.exact->support;
        for (int u = 0; u < n && ok; ++u) {
            if (sup[static_cast<std::size_t>(u)].empty()) {
                ok = false;
                report.max_norm_dev = 1.0;  // empty support means the zero vector
                break;
            }
            for (int v = u + 1; v < n; ++v) {
                if (g.adjacent(u, v)) continue;
                const auto& a = sup[static_cast<std::size_t>(u)];
                const auto& b = sup[static_cast<std::size_t>(v)];
                std::size_t shared = 0;
                for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
                    if (a[i] == b[j]) {
                        ++shared;
                        ++i;
                        ++j;
                    } else if (a[i] < b[j]) {
                        ++i;
                    } else {
                        ++j;
                    }
                }
                if (shared > 0) {
                    ok = false;
                    report.max_cross_dev =
                        static_cast<double>(shared) /
                        std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
                    break;
                }
            }
        }
        report.pass = ok;
        return report;
    }

    for (int u = 0; u < n; ++u) {
        double norm = std::sqrt(dot(rep.vectors[static_cast<std::size_t>(u)],
                                    rep.vectors[static_cast<std::size_t>(u)]));
        report.max_norm_dev = std::max(report.max_norm_dev, std::abs(norm - 1.0));
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            double ip = dot(rep.vectors[static_cast<std::size_t>(u)],
                            rep.vectors[static_cast<std::size_t>(v)]);
            report.max_cross_dev = std::max(report.max_cross_dev, std::abs(ip));
        }
    report.pass = report.max_norm_dev <= tol && report.max_cross_dev <= tol;
    return report;
}

// ---------------------------------------------------------------------------
// SDP solver
// ---------------------------------------------------------------------------

namespace {

using linalg::Matrix;

struct EdgeList {
    std::vector<int> u, v;
};

EdgeList edges_of(const Graph& g) {
    EdgeList e;
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) {
                e.u.push_back(u);
                e.v.push_back(v);
            }
    return e;
}

// Projection onto {X : X_ij = 0 for edges ij, trace(X) = 1}. Coordinates are
// independent: edge entries clamp to zero, the diagonal shifts onto the
// trace hyperplane, everything else stays.
void project_affine(Matrix& x, const EdgeList& e) {
    int n = x.rows();
    for (std::size_t k = 0; k < e.u.size(); ++k) {
        x(e.u[k], e.v[k]) = 0.0;
        x(e.v[k], e.u[k]) = 0.0;
    }
    double shift = (linalg::trace(x) - 1.0) / static_cast<double>(n);
    for (int i = 0; i < n; ++i) x(i, i) -= shift;
}

double frob_diff(const Matrix& a, const Matrix& b) {
    double s = 0.0;
    const double* pa = a.data();
    const double* pb = b.data();
    std::size_t total = static_cast<std::size_t>(a.rows()) * a.cols();
    for (std::size_t i = 0; i < total; ++i) {
        double d = pa[i] - pb[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

ThetaResult theta_sdp(const Graph& g, const SolverOptions& opts) {
    int n = g.order();
    if (n > opts.vertex_cap)
        throw CapExceeded("theta: graph has " + std::to_string(n) + " vertices, over the SDP cap " +
                          std::to_string(opts.vertex_cap));
    if (opts.tol <= 0.0 || opts.max_iter < 1 || opts.rho <= 0.0)
        throw std::invalid_argument("theta: solver options need tol > 0, max_iter >= 1, rho > 0");
    ThetaResult res;
    if (n == 0) {
        res.converged = true;
        return res;
    }

    EdgeList e = edges_of(g);
    double rho = opts.rho;

    // Scaled ADMM on  min -<J,X>  s.t.  X in affine set, Y psd, X = Y,
    // with over-relaxation:
    //   X-update: X = P_affine(Y - U + J/rho)        (closed form)
    //   Xh      = relax * X + (1 - relax) * Y
    //   Y-update: Y = P_psd(Xh + U)
    //   U-update: U = U + Xh - Y
    // Once both residuals reach tol the solve is converged; the loop then
    // polishes on to tol/8, which settles the objective value an order of
    // magnitude inside the residual-implied error band (the value error
    // scales like |V| times the residual).
    const double relax = 1.5;
    const double polish_tol = std::max(opts.tol / 8.0, 1e-11);
    Matrix x(n, n), y(n, n), u(n, n), xh(n, n);
    for (int i = 0; i < n; ++i) {
        x(i, i) = 1.0 / n;
        y(i, i) = 1.0 / n;
    }

    double primal = 0.0, dual = 0.0;
    int iter = 0;
    for (iter = 1; iter <= opts.max_iter; ++iter) {
        // X-update
        double jterm = 1.0 / rho;
        for (int i = 0; i < n; ++i) {
            double* xr = x.row(i);
            const double* yr = y.row(i);
            const double* ur = u.row(i);
            for (int j = 0; j < n; ++j) xr[j] = yr[j] - ur[j] + jterm;
        }
        project_affine(x, e);

        // Y-update on the relaxed iterate
        Matrix w(n, n);
        for (int i = 0; i < n; ++i) {
            double* xhr = xh.row(i);
            double* wr = w.row(i);
            const double* xr = x.row(i);
            const double* yr = y.row(i);
            const double* ur = u.row(i);
            for (int j = 0; j < n; ++j) {
                xhr[j] = relax * xr[j] + (1.0 - relax) * yr[j];
                wr[j] = xhr[j] + ur[j];
            }
        }
        Matrix ynew = linalg::project_psd(w);
        dual = rho * frob_diff(ynew, y);
        y = std::move(ynew);

        // U-update and primal residual
        primal = frob_diff(x, y);
        for (int i = 0; i < n; ++i) {
            double* ur = u.row(i);
            const double* xhr = xh.row(i);
            const double* yr = y.row(i);
            for (int j = 0; j < n; ++j) ur[j] += xhr[j] - yr[j];
        }

        if (std::max(primal, dual) <= polish_tol) break;

        // Residual balancing keeps the two residuals within a factor of ten
        // of each other; U is the scaled dual, so it rescales with rho.
        if (iter % 50 == 0) {
            if (primal > 10.0 * dual && rho < 1e6) {
                rho *= 2.0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) u(i, j) *= 0.5;
            } else if (dual > 10.0 * primal && rho > 1e-6) {
                rho *= 0.5;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) u(i, j) *= 2.0;
            }
        }
    }

    res.converged = std::max(primal, dual) <= opts.tol;
    res.iterations = std::min(iter, opts.max_iter);
    res.primal_residual = primal;
    res.dual_residual = dual;
    res.primal_matrix = std::move(x);
    res.value = linalg::entry_sum(res.primal_matrix);
    return res;
}

}  // namespace coprime::theta
