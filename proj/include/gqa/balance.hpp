#pragma once

#include <string>

#include "gqa/mean.hpp"
#include "gqa/permutation.hpp"
#include "gqa/point_tuple.hpp"
#include "gqa/sampler.hpp"

namespace gqa {

/// Residual statistics of a balance scan.
struct BalanceReport {
    enum class Verdict { BalancedWithinTol, Violated };

    Permutation sigma;
    long samples_evaluated;
    double max_abs_residual;
    PointTuple argmax_point;
    double tol_zero;
    Verdict verdict;
};

/// v_k(x) = M(x_1,...,x_{k-1}, M(x), x_{k+1},...,x_n). k is 1-based.
double v_k(const Mean& m, const PointTuple& x, int k);

/// Signed residual of the fixed point equation: with u = M(x),
/// rho = M(M(u_{sigma(1)}(x,u)),...,M(u_{sigma(n)}(x,u))) - u.
double balance_residual(const Mean& m, const Permutation& sigma, const PointTuple& x);

/// Generator-space residual sum_j f_j(v_{sigma(j)}(x)) - sum_j f_j(x_j).
/// Vanishes exactly when balance_residual does, with the same sign, since F
/// is strictly increasing.
double f_space_residual(const GQAMean& m, const Permutation& sigma, const PointTuple& x);

/// M(M(s,M(s,t)), M(M(s,t),t)) - M(s,t); the n = 2 reversal case.
double aumann_residual(const Mean& m, double s, double t);

/// Evaluate the balance residual over all sampler tuples. Deterministic for
/// a given sampler: the maximum is reduced with a lexicographic tie-break on
/// the witness point, so the result is independent of evaluation order.
BalanceReport scan_balance(const Mean& m, const Permutation& sigma, const Sampler& sampler,
                           double tol_zero = 1e-9);

std::string balance_csv_header();
std::string balance_csv_row(const BalanceReport& report);

}  // namespace gqa
