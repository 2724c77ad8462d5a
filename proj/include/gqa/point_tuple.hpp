#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gqa/interval.hpp"

namespace gqa {

/// A point of I^n. Coordinates are accessed 1-based, mirroring the subscripts
/// used throughout the public interfaces.
class PointTuple {
public:
    explicit PointTuple(std::vector<double> coords) : coords_(std::move(coords)) {
        if (coords_.size() < 2) {
            throw std::invalid_argument("PointTuple: needs at least 2 coordinates");
        }
        for (double c : coords_) {
            if (!std::isfinite(c)) {
                throw std::invalid_argument("PointTuple: coordinates must be finite");
            }
        }
    }

    int size() const { return static_cast<int>(coords_.size()); }

    double coord(int k) const {
        if (k < 1 || k > size()) {
            throw std::out_of_range("PointTuple: index out of range");
        }
        return coords_[static_cast<std::size_t>(k - 1)];
    }

    const std::vector<double>& coords() const { return coords_; }

    bool operator==(const PointTuple& other) const = default;

private:
    std::vector<double> coords_;
};

/// u_k(x,t): coordinate k replaced by t, the rest untouched.
inline PointTuple substitute(const PointTuple& x, int k, double t) {
    if (k < 1 || k > x.size()) {
        throw std::out_of_range("substitute: index out of range");
    }
    std::vector<double> c = x.coords();
    c[static_cast<std::size_t>(k - 1)] = t;
    return PointTuple(std::move(c));
}

/// Domain-checked variant: also requires t in `domain`.
inline PointTuple substitute(const PointTuple& x, int k, double t, const Interval& domain,
                             double tol = 0.0) {
    if (!contains(domain, t, tol)) {
        throw std::domain_error("substitute: replacement value outside the interval");
    }
    return substitute(x, k, t);
}

}  // namespace gqa
