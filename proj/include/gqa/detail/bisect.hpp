#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "gqa/interval.hpp"

namespace gqa::detail {

struct BisectSpec {
    /// Residual contract: |f(x) - y| <= tol * (1 + |y|).
    double tol = 1e-12;
    /// Plateau convention: return the infimum of the preimage. Disabling it
    /// allows early exit, valid only for strictly increasing f.
    bool leftmost = false;
    int max_iter = 200;
};

/// Solve f(x) = y for a continuous non-decreasing f on `domain`.
///
/// Finite closed endpoints are used as brackets directly. Infinite sides are
/// bracketed by step doubling from a finite anchor (cap 2^60); open finite
/// endpoints are approached by halving the gap. Throws std::range_error when
/// y lies outside the range of f beyond the tolerance band.
template <class F>
double invert_nondecreasing(F&& f, const Interval& domain, double y, const BisectSpec& spec) {
    if (!std::isfinite(y)) {
        throw std::range_error("invert: target must be finite");
    }
    const double tol_abs = spec.tol * (1.0 + std::fabs(y));

    const auto [wlo, whi] = finite_probe_window(domain);
    const double anchor = 0.5 * (wlo + whi);

    // Lower bracket: a with f(a) < y. May instead resolve the query at the
    // lower range edge (return) or reject it (range_error).
    double a;
    double fa;
    bool resolved = false;
    double resolved_x = 0.0;
    if (domain.lo().is_finite() && domain.lo_closed()) {
        a = domain.lo().value();
        fa = f(a);
        if (fa >= y) {
            // y at or below the attained minimum; the endpoint is also the
            // leftmost preimage when f sits exactly at level y there.
            if (std::fabs(fa - y) <= tol_abs) {
                resolved = true;
                resolved_x = a;
            } else {
                throw std::range_error("invert: target below the function range");
            }
        }
    } else {
        a = anchor;
        fa = f(a);
        if (fa >= y) {
            bool found = false;
            if (domain.lo().is_finite()) {
                // Open endpoint: halve the gap toward it.
                const double lo = domain.lo().value();
                double prev = a;
                for (int j = 0; j < 1200; ++j) {
                    double c = lo + (prev - lo) * 0.5;
                    if (!(c > lo) || c == prev) break;
                    double fc = f(c);
                    prev = c;
                    if (fc < y) {
                        a = c;
                        fa = fc;
                        found = true;
                        break;
                    }
                    a = c;
                    fa = fc;
                }
            } else {
                // Unbounded side: geometric expansion, cap 2^60.
                double step = 1.0;
                for (int j = 0; j <= 60; ++j) {
                    double c = anchor - step;
                    double fc = f(c);
                    a = c;
                    fa = fc;
                    if (fc < y) {
                        found = true;
                        break;
                    }
                    step *= 2.0;
                }
            }
            if (!found) {
                if (std::fabs(fa - y) <= tol_abs) {
                    resolved = true;
                    resolved_x = a;
                } else {
                    throw std::range_error("invert: target below the function range");
                }
            }
        }
    }
    if (resolved) return resolved_x;

    // Upper bracket: b with f(b) >= y.
    double b;
    double fb;
    if (domain.hi().is_finite() && domain.hi_closed()) {
        b = domain.hi().value();
        fb = f(b);
        if (fb < y) {
            if (std::fabs(fb - y) <= tol_abs) return b;
            throw std::range_error("invert: target above the function range");
        }
    } else {
        b = std::max(a, anchor);
        fb = f(b);
        if (fb < y) {
            bool found = false;
            if (domain.hi().is_finite()) {
                const double hi = domain.hi().value();
                double prev = b;
                for (int j = 0; j < 1200; ++j) {
                    double c = hi - (hi - prev) * 0.5;
                    if (!(c < hi) || c == prev) break;
                    double fc = f(c);
                    prev = c;
                    b = c;
                    fb = fc;
                    if (fc >= y) {
                        found = true;
                        break;
                    }
                }
            } else {
                double step = 1.0;
                const double base = b;
                for (int j = 0; j <= 60; ++j) {
                    double c = base + step;
                    double fc = f(c);
                    b = c;
                    fb = fc;
                    if (fc >= y) {
                        found = true;
                        break;
                    }
                    step *= 2.0;
                }
            }
            if (!found) {
                if (std::fabs(fb - y) <= tol_abs) return b;
                throw std::range_error("invert: target above the function range");
            }
        }
    }

    // Bisection; invariant f(a) < y <= f(b).
    for (int it = 0; it < spec.max_iter; ++it) {
        const double m = a + (b - a) * 0.5;
        if (m <= a || m >= b) break;
        const double fm = f(m);
        if (!spec.leftmost && std::fabs(fm - y) <= tol_abs) return m;
        if (fm >= y) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    if (std::fabs(fb - y) <= tol_abs) return b;
    throw std::runtime_error("invert: bisection did not reach the requested tolerance");
}

}  // namespace gqa::detail
