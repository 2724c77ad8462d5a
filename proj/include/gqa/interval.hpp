#pragma once

#include <string>
#include <utility>

#include "gqa/ext_real.hpp"

namespace gqa {

/// A non-trivial real interval, possibly unbounded, with open/closed endpoints.
class Interval {
public:
    Interval(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed);

    static Interval closed(double a, double b) { return {a, b, true, true}; }
    static Interval open(double a, double b) { return {a, b, false, false}; }
    static Interval open_closed(double a, double b) { return {a, b, false, true}; }
    static Interval closed_open(double a, double b) { return {a, b, true, false}; }
    static Interval real_line() { return {ExtReal::neg_inf(), ExtReal::pos_inf(), false, false}; }

    const ExtReal& lo() const { return lo_; }
    const ExtReal& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }

    bool bounded() const { return lo_.is_finite() && hi_.is_finite(); }

    /// Both endpoints opened.
    Interval interior() const { return {lo_, hi_, false, false}; }

    bool operator==(const Interval& other) const = default;

    std::string str() const;

private:
    ExtReal lo_;
    ExtReal hi_;
    bool lo_closed_;
    bool hi_closed_;
};

/// Membership test. Closed-endpoint comparison is relaxed by tol; open
/// endpoints stay strict; infinite endpoints always pass on their side.
bool contains(const Interval& iv, double t, double tol = 0.0);

/// A finite closed window inside the interval, used for validation grids on
/// possibly unbounded or open domains. Open finite endpoints are nudged
/// inward; infinite sides are cut at `span` from the nearest finite anchor.
std::pair<double, double> finite_probe_window(const Interval& iv, double span = 16.0);

}  // namespace gqa
