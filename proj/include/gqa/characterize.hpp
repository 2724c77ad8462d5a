#pragma once

#include <span>
#include <vector>

#include "gqa/balance.hpp"
#include "gqa/mean.hpp"
#include "gqa/permutation.hpp"

namespace gqa {

/// Estimated constants D_k in f_k = f_1 + D_k, with D_1 = 0 exactly, and the
/// worst grid deviation from that shift form.
struct ShiftProfile {
    std::vector<double> D;
    double max_deviation;
    std::size_t grid_size;
    double argmax_point;  // grid point attaining max_deviation
    int argmax_k;         // generator index attaining it (1-based)
};

/// The double sum sum_j sum_{k != j} [f_j(w_j) - f_k(w_j)] with
/// w_j = v_{sigma(j)}(x), computed as sum_j [n f_j(w_j) - F(w_j)].
/// Vanishes for every x when the mean is sigma-balanced.
double necessary_condition_residual(const GQAMean& m, const Permutation& sigma,
                                    const PointTuple& x);

/// D_k = grid average of f_k - f_1; max_deviation = sup |f_k - f_1 - D_k|.
ShiftProfile estimate_shift_profile(const GQAMean& m, std::span<const double> grid);

/// Two-detector verdict: shift flatness of the generator tuple versus the
/// balance scan. The two must agree on every mean; disagreement is reported
/// as an anomaly, never resolved silently.
struct ClassifyEvidence {
    ShiftProfile profile;               // raw (unnormalized) estimates
    double scale;                       // common tuple scale (F span over the box) / n
    double normalized_max_deviation;    // profile.max_deviation / scale
    BalanceReport balance;
    bool quasi_arithmetic;              // normalized_max_deviation <= shift_tol
    bool balanced;                      // scan verdict
    bool agree;                         // quasi_arithmetic == balanced
};

ClassifyEvidence classify(const GQAMean& m, const Permutation& sigma, const Sampler& sampler,
                          double shift_tol = 1e-8, double tol_zero = 1e-9);

}  // namespace gqa
