#include "gqa/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gqa {

Interval::Interval(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed)
    : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (!(lo_ < hi_)) {
        throw std::invalid_argument("Interval: requires lo < hi (non-trivial interval)");
    }
    if ((lo_.is_infinite() && lo_closed_) || (hi_.is_infinite() && hi_closed_)) {
        throw std::invalid_argument("Interval: an infinite endpoint cannot be closed");
    }
}

std::string Interval::str() const {
    std::string s;
    s += lo_closed_ ? '[' : '(';
    s += lo_.str();
    s += ", ";
    s += hi_.str();
    s += hi_closed_ ? ']' : ')';
    return s;
}

bool contains(const Interval& iv, double t, double tol) {
    if (std::isnan(t)) return false;
    if (tol < 0) throw std::invalid_argument("contains: tol must be non-negative");

    bool lo_ok = true;
    if (iv.lo().is_finite()) {
        const double lo = iv.lo().value();
        lo_ok = iv.lo_closed() ? (t >= lo - tol) : (t > lo);
    }
    bool hi_ok = true;
    if (iv.hi().is_finite()) {
        const double hi = iv.hi().value();
        hi_ok = iv.hi_closed() ? (t <= hi + tol) : (t < hi);
    }
    return lo_ok && hi_ok;
}

std::pair<double, double> finite_probe_window(const Interval& iv, double span) {
    const double nudge_frac = 1e-9;
    if (iv.bounded()) {
        const double lo = iv.lo().value();
        const double hi = iv.hi().value();
        const double w = hi - lo;
        double a = iv.lo_closed() ? lo : lo + w * nudge_frac;
        double b = iv.hi_closed() ? hi : hi - w * nudge_frac;
        return {a, b};
    }
    if (iv.lo().is_finite()) {
        const double lo = iv.lo().value();
        double a = iv.lo_closed() ? lo : lo + nudge_frac * std::max(1.0, std::fabs(lo));
        return {a, a + span};
    }
    if (iv.hi().is_finite()) {
        const double hi = iv.hi().value();
        double b = iv.hi_closed() ? hi : hi - nudge_frac * std::max(1.0, std::fabs(hi));
        return {b - span, b};
    }
    return {-span / 2, span / 2};
}

}  // namespace gqa
