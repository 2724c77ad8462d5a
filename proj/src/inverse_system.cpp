#include "gqa/inverse_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gqa {

namespace {

constexpr double kFeasibilityTolFrac = 1e-10;

void check_targets(const GQAMean& m, const std::vector<double>& c) {
    if (static_cast<int>(c.size()) != m.arity()) {
        throw std::invalid_argument("inverse_system: target tuple size must match the arity");
    }
    for (double ck : c) {
        if (!contains(m.domain(), ck, 1e-9 * (1.0 + std::fabs(ck)))) {
            throw std::domain_error("inverse_system: target outside the interval");
        }
    }
}

std::vector<AlphaBounds> bounds_from_targets(const GQAMean& m, const std::vector<double>& c) {
    const int n = m.arity();
    const double c_lo = *std::min_element(c.begin(), c.end());
    const double c_hi = *std::max_element(c.begin(), c.end());
    const double F_lo = m.F_eval(c_lo);
    const double F_hi = m.F_eval(c_hi);
    std::vector<AlphaBounds> bounds(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const auto& f = m.generator(k);
        bounds[static_cast<std::size_t>(k - 1)] = {f.eval(c_lo) + (F_lo - F_hi),
                                                   f.eval(c_hi) + (F_hi - F_lo)};
    }
    return bounds;
}

}  // namespace

std::vector<std::vector<double>> offdiag_inverse(int n) {
    if (n < 2) throw std::invalid_argument("offdiag_inverse: n must be at least 2");
    const double diag = (2.0 - n) / (n - 1.0);
    const double off = 1.0 / (n - 1.0);
    std::vector<std::vector<double>> inv(static_cast<std::size_t>(n),
                                         std::vector<double>(static_cast<std::size_t>(n), off));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = diag;
    return inv;
}

ReducedTarget reduce_targets(const GQAMean& m, const std::vector<double>& c) {
    check_targets(m, c);
    const int n = m.arity();
    ReducedTarget rt;
    rt.d.resize(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double dk = m.F_eval(c[static_cast<std::size_t>(k - 1)]);
        rt.d[static_cast<std::size_t>(k - 1)] = dk;
        sum += dk;
    }
    rt.d_mean = sum / n;
    const double x_bar = m.F_inverse(rt.d_mean);
    rt.g_at_mean.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        rt.g_at_mean[static_cast<std::size_t>(k - 1)] = m.generator(k).eval(x_bar);
    }
    return rt;
}

SystemSolution solve_reduced(const GQAMean& m, const ReducedTarget& rt) {
    const int n = m.arity();
    if (static_cast<int>(rt.d.size()) != n || static_cast<int>(rt.g_at_mean.size()) != n) {
        throw std::invalid_argument("solve_reduced: reduced target size must match the arity");
    }

    double sum_d = 0.0;
    double sum_g = 0.0;
    for (int k = 0; k < n; ++k) {
        sum_d += rt.d[static_cast<std::size_t>(k)];
        sum_g += rt.g_at_mean[static_cast<std::size_t>(k)];
    }
    const double common = sum_d - sum_g;

    SystemSolution sol;
    sol.alpha.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double dk = rt.d[static_cast<std::size_t>(k)];
        const double gk = rt.g_at_mean[static_cast<std::size_t>(k)];
        // alpha_k = [ (n-2)(g_k - d_k) + sum_{j != k} (d_j - g_j) ] / (n-1)
        sol.alpha[static_cast<std::size_t>(k)] =
            ((n - 2.0) * (gk - dk) + (common - (dk - gk))) / (n - 1.0);
    }
    sol.y = sol.alpha;

    sol.feasible = true;
    sol.infeasible_k = 0;
    for (int k = 1; k <= n; ++k) {
        const double ak = sol.alpha[static_cast<std::size_t>(k - 1)];
        const double band = kFeasibilityTolFrac * (1.0 + std::fabs(ak));
        if (!m.generator(k).range().contains(ak, band)) {
            sol.feasible = false;
            sol.infeasible_k = k;
            break;
        }
    }

    // bounds need the c_k = F^{-1}(d_k)
    std::vector<double> c(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        c[static_cast<std::size_t>(k)] = m.F_inverse(rt.d[static_cast<std::size_t>(k)]);
    }
    sol.bounds = bounds_from_targets(m, c);

    if (sol.feasible) {
        sol.x.resize(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) {
            sol.x[static_cast<std::size_t>(k - 1)] =
                m.generator(k).generalized_inverse(sol.alpha[static_cast<std::size_t>(k - 1)],
                                                   m.eval_tol());
        }
    }
    return sol;
}

std::vector<AlphaBounds> alpha_bounds(const GQAMean& m, const std::vector<double>& c) {
    check_targets(m, c);
    return bounds_from_targets(m, c);
}

Interval solvable_neighborhood(const GQAMean& m, double p, std::pair<double, double> bracket) {
    const auto [a, b] = bracket;
    if (!(a < p && p < b)) {
        throw std::invalid_argument("solvable_neighborhood: bracket must satisfy a < p < b");
    }
    const Interval interior = m.domain().interior();
    if (!contains(interior, a) || !contains(interior, b)) {
        throw std::invalid_argument(
            "solvable_neighborhood: bracket must lie inside the interval interior");
    }

    // eps_k = min { f_k(a) - a_k, b_k - f_k(b) }, dropping terms with an
    // infinite range endpoint on that side
    bool constrained = false;
    double eps_min = 0.0;
    for (int k = 1; k <= m.arity(); ++k) {
        const auto& f = m.generator(k);
        const GeneratorRange r = f.range();
        bool have = false;
        double eps_k = 0.0;
        if (r.lo.is_finite()) {
            eps_k = f.eval(a) - r.lo.value();
            have = true;
        }
        if (r.hi.is_finite()) {
            const double margin = r.hi.value() - f.eval(b);
            eps_k = have ? std::min(eps_k, margin) : margin;
            have = true;
        }
        if (have) {
            eps_min = constrained ? std::min(eps_min, eps_k) : eps_k;
            constrained = true;
        }
    }

    if (!constrained) {
        return {a, b, false, false};
    }
    if (!(eps_min > 0)) {
        throw std::invalid_argument(
            "solvable_neighborhood: degenerate bracket (a generator reaches its range edge); "
            "choose a wider bracket");
    }

    // largest dyadic step h with max_grid |F(t+h) - F(t)| < eps_min, then
    // halved once as a safety factor
    const int grid_points = 4096;
    for (int j = 0; j <= 60; ++j) {
        const double h = (b - a) / std::pow(2.0, j);
        double worst = 0.0;
        const double t_hi = b - h;
        for (int i = 0; i < grid_points; ++i) {
            const double t =
                (i == grid_points - 1)
                    ? t_hi
                    : a + (t_hi - a) * static_cast<double>(i) / (grid_points - 1);
            worst = std::max(worst, m.F_eval(t + h) - m.F_eval(t));
        }
        if (worst < eps_min) {
            const double radius = h / 4.0;  // diameter h/2 = (h halved once)
            const double lo = std::max(a, p - radius);
            const double hi = std::min(b, p + radius);
            return {lo, hi, false, false};
        }
    }
    throw std::invalid_argument(
        "solvable_neighborhood: no admissible modulus step found; choose a wider bracket");
}

SystemSolution solve_main(const GQAMean& m, const std::vector<double>& c) {
    return solve_reduced(m, reduce_targets(m, c));
}

}  // namespace gqa
