// Test-only oracles, deliberately independent of the library's numerics:
// dense scan-and-refine inversion instead of bracketed bisection, and a
// partial-pivot Gaussian elimination for linear systems.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;

/// Invert a non-decreasing f on [lo, hi] by repeated dense scanning: find the
/// first grid cell whose right value reaches y and refine into it.
inline double invert(const Fn& f, double lo, double hi, double y) {
    double a = lo;
    double b = hi;
    for (int round = 0; round < 12; ++round) {
        const int cells = 64;
        double next_a = a;
        double next_b = b;
        for (int i = 0; i < cells; ++i) {
            const double r = a + (b - a) * static_cast<double>(i + 1) / cells;
            if (f(r) >= y || i == cells - 1) {
                next_a = a + (b - a) * static_cast<double>(i) / cells;
                next_b = r;
                break;
            }
        }
        a = next_a;
        b = next_b;
        if (b - a <= 1e-15 * (std::fabs(a) + 1.0)) break;
    }
    return 0.5 * (a + b);
}

struct Gqa {
    std::vector<Fn> f;
    double lo;
    double hi;

    double F(double t) const {
        double s = 0.0;
        for (const auto& fk : f) s += fk(t);
        return s;
    }

    double mean(const std::vector<double>& x) const {
        double s = 0.0;
        for (std::size_t k = 0; k < f.size(); ++k) s += f[k](x[k]);
        return invert([this](double t) { return F(t); }, lo, hi, s);
    }
};

/// sigma is 1-based, as everywhere else.
inline double balance_residual(const Gqa& m, const std::vector<int>& sigma,
                               const std::vector<double>& x) {
    const double u = m.mean(x);
    std::vector<double> w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<double> y = x;
        y[static_cast<std::size_t>(sigma[i] - 1)] = u;
        w[i] = m.mean(y);
    }
    return m.mean(w) - u;
}

/// Partial-pivot Gaussian elimination; A is row-major n x n.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> A,
                                       std::vector<double> rhs) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::fabs(A[r][col]) > std::fabs(A[pivot][col])) pivot = r;
        }
        if (std::fabs(A[pivot][col]) < 1e-300) {
            throw std::runtime_error("dense_solve: singular matrix");
        }
        std::swap(A[col], A[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= m * A[col][c];
            rhs[r] -= m * rhs[col];
        }
    }
    std::vector<double> sol(n);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = rhs[ri];
        for (std::size_t c = ri + 1; c < n; ++c) s -= A[ri][c] * sol[c];
        sol[ri] = s / A[ri][ri];
    }
    return sol;
}

/// Dense inverse via n solves against unit vectors.
inline std::vector<std::vector<double>> dense_inverse(const std::vector<std::vector<double>>& A) {
    const std::size_t n = A.size();
    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<double> e(n, 0.0);
        e[c] = 1.0;
        const auto col = dense_solve(A, e);
        for (std::size_t r = 0; r < n; ++r) inv[r][c] = col[r];
    }
    return inv;
}

inline std::vector<std::vector<double>> matmul(const std::vector<std::vector<double>>& A,
                                               const std::vector<std::vector<double>>& B) {
    const std::size_t n = A.size();
    std::vector<std::vector<double>> C(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    }
    return C;
}

/// The zero-diagonal all-ones matrix A from the reduced system.
inline std::vector<std::vector<double>> offdiag_matrix(int n) {
    std::vector<std::vector<double>> A(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 1.0));
    for (int i = 0; i < n; ++i) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
    return A;
}

}  // namespace oracle
