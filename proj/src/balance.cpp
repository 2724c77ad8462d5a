#include "gqa/balance.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gqa/csv.hpp"

namespace gqa {

namespace {

void check_sizes(const Mean& m, const Permutation& sigma, const PointTuple& x) {
    if (sigma.size() != m.arity() || x.size() != m.arity()) {
        throw std::invalid_argument("balance: permutation/tuple size must match the mean arity");
    }
}

}  // namespace

double v_k(const Mean& m, const PointTuple& x, int k) {
    if (k < 1 || k > m.arity()) {
        throw std::out_of_range("v_k: index out of range");
    }
    const double u = m.evaluate(x);
    return m.evaluate(substitute(x, k, u));
}

double balance_residual(const Mean& m, const Permutation& sigma, const PointTuple& x) {
    check_sizes(m, sigma, x);
    const int n = m.arity();
    const double u = m.evaluate(x);
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        w[static_cast<std::size_t>(i - 1)] = m.evaluate(substitute(x, sigma(i), u));
    }
    return m.evaluate(PointTuple(std::move(w))) - u;
}

double f_space_residual(const GQAMean& m, const Permutation& sigma, const PointTuple& x) {
    check_sizes(m, sigma, x);
    const int n = m.arity();
    const double u = m.evaluate(x);
    double lhs = 0.0;
    double rhs = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double vsj = m.evaluate(substitute(x, sigma(j), u));
        lhs += m.generator(j).eval(vsj);
        rhs += m.generator(j).eval(x.coord(j));
    }
    return lhs - rhs;
}

double aumann_residual(const Mean& m, double s, double t) {
    if (m.arity() != 2) {
        throw std::invalid_argument("aumann_residual: requires a two-variable mean");
    }
    auto M = [&m](double a, double b) { return m.evaluate(PointTuple({a, b})); };
    const double u = M(s, t);
    return M(M(s, u), M(u, t)) - u;
}

BalanceReport scan_balance(const Mean& m, const Permutation& sigma, const Sampler& sampler,
                           double tol_zero) {
    if (sigma.size() != m.arity()) {
        throw std::invalid_argument("scan_balance: permutation size must match the mean arity");
    }
    const std::vector<PointTuple> samples = materialize(sampler, m.domain(), m.arity());

    double best = -1.0;
    const PointTuple* witness = nullptr;
    for (const auto& x : samples) {
        const double r = std::fabs(balance_residual(m, sigma, x));
        if (r > best || (r == best && witness && x.coords() < witness->coords())) {
            best = r;
            witness = &x;
        }
    }
    BalanceReport report{sigma,
                         static_cast<long>(samples.size()),
                         best,
                         *witness,
                         tol_zero,
                         best > tol_zero ? BalanceReport::Verdict::Violated
                                         : BalanceReport::Verdict::BalancedWithinTol};
    return report;
}

std::string balance_csv_header() {
    return "sigma,n,samples,max_abs_residual,argmax,verdict";
}

std::string balance_csv_row(const BalanceReport& report) {
    return csv_row({report.sigma.str(), std::to_string(report.sigma.size()),
                    std::to_string(report.samples_evaluated),
                    csv_double(report.max_abs_residual), csv_join(report.argmax_point.coords()),
                    report.verdict == BalanceReport::Verdict::Violated ? "violated"
                                                                       : "balanced_within_tol"});
}

}  // namespace gqa
