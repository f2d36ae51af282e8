#pragma once

// Lovasz theta certificates for PR[n]: the explicit orthonormal
// representation whose value is pi(n), checked exactly, and a numerical SDP
// solver for theta(G) as an independent witness.

#include <cstdint>
#include <optional>
#include <vector>

#include "coprime/graph.hpp"
#include "coprime/linalg.hpp"

namespace coprime::theta {

inline constexpr int kDefaultSdpVertexCap = 120;

// Exact rational, reduced, denominator > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
    bool operator==(std::int64_t x) const { return den == 1 && num == x; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
};

// Structural form of a representation whose vectors have equal-weight support
// (component 1/sqrt(|support|) on the listed coordinates, 0 elsewhere) and
// whose handle is uniform 1/sqrt(dim). Inner products reduce to integer
// support intersections, so orthogonality and norms check exactly.
struct ExactForm {
    int dim = 0;
    std::vector<std::vector<int>> support;   // per vertex, ascending coordinate indices
};

// Unit vector per vertex plus a handle; non-adjacent vertices must get
// orthogonal vectors. `exact`, when present, is authoritative: the numeric
// vectors are derived from it at construction and never mutated.
struct OrthRep {
    int dim = 0;
    std::vector<std::int64_t> labels;
    std::vector<std::vector<double>> vectors;   // one k-vector per label
    std::vector<double> handle;
    std::optional<ExactForm> exact;
};

// The representation from the pi(n) = theta(PR[n]) construction: dim = k =
// pi(n); vertex v gets 1/sqrt(l_v) at coordinate i for each prime p_i | v;
// the handle is uniform 1/sqrt(k). Throws std::domain_error for n < 2.
OrthRep build_factor_representation(std::int64_t n);

// max over vertices of 1/(c.x_v)^2. Throws DegenerateHandle when some
// |c.x_v| < 1e-12 (the value would blow up).
double rep_value(const OrthRep& rep);

// Exact value for a representation carrying its ExactForm: max_v dim/l_v as a
// reduced rational. Throws std::invalid_argument when no exact form exists.
Rational rep_value_exact(const OrthRep& rep);

// Per-vertex score 1/(c.x_v)^2, numeric and exact variants.
double vertex_value(const OrthRep& rep, std::int64_t label);
Rational vertex_value_exact(const OrthRep& rep, std::int64_t label);

struct OrthReport {
    bool pass = false;
    bool exact_mode = false;      // checked on integer support sets, no rounding
    double max_norm_dev = 0.0;    // max | ||x_v|| - 1 |
    double max_cross_dev = 0.0;   // max |x_v . x_w| over non-adjacent pairs
    double tol = 0.0;
};

// Checks both representation invariants against G. Vertex labels must match
// V(G) exactly (std::invalid_argument otherwise). Representations with an
// ExactForm are verified exactly; deviations are then 0 or genuine.
OrthReport verify_orthonormal(const OrthRep& rep, const Graph& g, double tol = 1e-12);

struct SolverOptions {
    double tol = 1e-6;       // residual target epsilon
    int max_iter = 50'000;
    double rho = 1.0;        // initial ADMM penalty; rebalanced from residual ratios
    int vertex_cap = kDefaultSdpVertexCap;
};

struct ThetaResult {
    double value = 0.0;              // sum of all entries of primal_matrix
    linalg::Matrix primal_matrix;    // trace 1, zero on edges, PSD within tol
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

// theta(G) via the SDP  max <J, X>  s.t.  trace(X) = 1, X_ij = 0 for edges,
// X psd  — solved by ADMM: alternate the closed-form projection onto the
// affine constraints with the PSD-cone projection, plus a scaled dual update.
// Non-convergence returns the best iterate with converged = false.
// Throws CapExceeded when |V(G)| > opts.vertex_cap.
ThetaResult theta_sdp(const Graph& g, const SolverOptions& opts = {});

}  // namespace coprime::theta
