#include "gqa/characterize.hpp"

#include <cmath>
#include <stdexcept>

namespace gqa {

double necessary_condition_residual(const GQAMean& m, const Permutation& sigma,
                                    const PointTuple& x) {
    if (sigma.size() != m.arity() || x.size() != m.arity()) {
        throw std::invalid_argument(
            "necessary_condition_residual: permutation/tuple size must match the arity");
    }
    const int n = m.arity();
    const double u = m.evaluate(x);
    double total = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double wj = m.evaluate(substitute(x, sigma(j), u));
        total += n * m.generator(j).eval(wj) - m.F_eval(wj);
    }
    return total;
}

ShiftProfile estimate_shift_profile(const GQAMean& m, std::span<const double> grid) {
    if (grid.size() < 2) {
        throw std::invalid_argument("estimate_shift_profile: grid needs at least 2 points");
    }
    const int n = m.arity();

    ShiftProfile profile;
    profile.D.assign(static_cast<std::size_t>(n), 0.0);
    profile.grid_size = grid.size();
    profile.max_deviation = 0.0;
    profile.argmax_point = grid[0];
    profile.argmax_k = 1;

    std::vector<double> f1(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        f1[i] = m.generator(1).eval(grid[i]);
    }

    std::vector<double> diff(grid.size());
    for (int k = 2; k <= n; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            diff[i] = m.generator(k).eval(grid[i]) - f1[i];
            sum += diff[i];
        }
        const double Dk = sum / static_cast<double>(grid.size());
        profile.D[static_cast<std::size_t>(k - 1)] = Dk;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double dev = std::fabs(diff[i] - Dk);
            if (dev > profile.max_deviation) {
                profile.max_deviation = dev;
                profile.argmax_point = grid[i];
                profile.argmax_k = k;
            }
        }
    }
    return profile;
}

ClassifyEvidence classify(const GQAMean& m, const Permutation& sigma, const Sampler& sampler,
                          double shift_tol, double tol_zero) {
    const auto [lo, hi] = resolve_box(sampler, m.domain());
    const std::vector<double> grid = linspace(lo, hi, 512);

    ClassifyEvidence ev{estimate_shift_profile(m, grid),
                        0.0,
                        0.0,
                        scan_balance(m, sigma, sampler, tol_zero),
                        false,
                        false,
                        false};

    // one common scale for the whole tuple, so that a * f + b leaves the
    // verdict unchanged while scalar-multiple tuples like (id, 2*id) stay
    // distinguishable
    ev.scale = (m.F_eval(hi) - m.F_eval(lo)) / m.arity();
    ev.normalized_max_deviation = ev.profile.max_deviation / ev.scale;
    ev.quasi_arithmetic = ev.normalized_max_deviation <= shift_tol;
    ev.balanced = ev.balance.verdict == BalanceReport::Verdict::BalancedWithinTol;
    ev.agree = ev.quasi_arithmetic == ev.balanced;
    return ev;
}

}  // namespace gqa
