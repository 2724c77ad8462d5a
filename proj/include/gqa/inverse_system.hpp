#pragma once

#include <utility>
#include <vector>

#include "gqa/interval.hpp"
#include "gqa/mean.hpp"

namespace gqa {

/// The target system c_k = v_k(x) rewritten through d_k = F(c_k) and
/// g_k = f_k o F^{-1} evaluated at the average of the d_k.
struct ReducedTarget {
    std::vector<double> d;
    double d_mean;
    std::vector<double> g_at_mean;
};

struct AlphaBounds {
    double lower;
    double upper;
};

/// Candidate solution of the reduced system: alpha is the closed-form unique
/// candidate; it solves the system exactly when each alpha_k lies in f_k(I).
struct SystemSolution {
    std::vector<double> alpha;
    std::vector<double> y;  // equals alpha (the unique candidate)
    std::vector<double> x;  // preimages x_k with f_k(x_k) = alpha_k; empty when infeasible
    bool feasible;
    int infeasible_k;  // first failing index (1-based), 0 when feasible
    std::vector<AlphaBounds> bounds;
};

/// Closed-form inverse of the n x n matrix with zero diagonal and unit
/// off-diagonal entries: diagonal (2-n)/(n-1), off-diagonal 1/(n-1).
std::vector<std::vector<double>> offdiag_inverse(int n);

ReducedTarget reduce_targets(const GQAMean& m, const std::vector<double>& c);

SystemSolution solve_reduced(const GQAMean& m, const ReducedTarget& rt);

/// Sandwich bounds f_k(c_*) + (F(c_*) - F(c^*)) <= alpha_k <= f_k(c^*) +
/// (F(c^*) - F(c_*)) with c_*, c^* the extremes of the targets.
std::vector<AlphaBounds> alpha_bounds(const GQAMean& m, const std::vector<double>& c);

/// An open interval U around p such that every target tuple drawn from U^n is
/// feasible. The radius comes from a grid estimate of the modulus of
/// continuity of F on [a,b]: the largest dyadic step h whose grid increment
/// max stays below min_k eps_k, halved once as a safety factor. Generators
/// with an infinite range margin on a side impose no constraint there; when
/// no generator constrains the radius, the clipped bracket itself is
/// returned.
Interval solvable_neighborhood(const GQAMean& m, double p, std::pair<double, double> bracket);

/// reduce_targets + solve_reduced. When feasible, the returned x satisfies
/// v_k(x) = c_k within the round-trip tolerance.
SystemSolution solve_main(const GQAMean& m, const std::vector<double>& c);

}  // namespace gqa
