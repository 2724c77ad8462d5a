#pragma once

#include <string>
#include <vector>

#include "gqa/interval.hpp"

namespace gqa {

enum class GeneratorFamily { Identity, Affine, Power, Logarithm, Exponential, MonotoneTable };

struct TablePoint {
    double t;
    double value;
    bool operator==(const TablePoint&) const = default;
};

/// Numeric range of a generator over its domain: infimum/supremum with
/// attainment flags. Endpoints may be infinite (never attained then).
struct GeneratorRange {
    ExtReal lo;
    ExtReal hi;
    bool lo_attained;
    bool hi_attained;

    /// Membership with a tolerance band at attained finite endpoints; open
    /// (non-attained) finite endpoints stay strict.
    bool contains(double y, double tol = 0.0) const;
};

/// A continuous non-decreasing scalar function on an interval.
///
/// Families: identity, affine(a,b), power(p) (x^p for p>0, ln x for p=0,
/// -x^p for p<0, so the realization is always non-decreasing), logarithm,
/// exponential(lambda) = sign(lambda)*e^(lambda*x), and a piecewise-linear
/// monotone table. An optional affine post-transform scale*f+offset is
/// supported; a descriptor whose realization would decrease is normalized by
/// negation at construction, so a stored generator is never decreasing.
class Generator {
public:
    static Generator identity(const Interval& domain);
    static Generator affine(double a, double b, const Interval& domain);
    static Generator power(double p, const Interval& domain);
    static Generator logarithm(const Interval& domain);
    static Generator exponential(double lambda, const Interval& domain);
    static Generator monotone_table(std::vector<TablePoint> points, const Interval& domain);

    /// scale*f + offset on top of this generator (descriptor-level; the
    /// result is normalized to non-decreasing if scale is negative).
    Generator with_affine(double scale, double offset) const;

    double eval(double t) const;

    GeneratorRange range() const;

    /// Preimage of y by bisection. For a plateau at level y returns the
    /// leftmost solution. Contract: |f(x) - y| <= tol * (1 + |y|).
    double generalized_inverse(double y, double tol = 1e-12) const;

    const Interval& domain() const { return domain_; }
    GeneratorFamily family() const { return family_; }
    double scale() const { return scale_; }
    double offset() const { return offset_; }

    /// Structural identity of the function description (family, parameters,
    /// affine post-transform); the domain is not part of the descriptor.
    bool same_descriptor(const Generator& other) const;

    std::string describe() const;

private:
    explicit Generator(const Interval& domain) : domain_(domain) {}

    double base_eval(double t) const;
    ExtReal base_limit(const ExtReal& endpoint) const;
    void validate_monotone_grid() const;

    GeneratorFamily family_ = GeneratorFamily::Identity;
    double a_ = 1.0;       // affine slope
    double b_ = 0.0;       // affine intercept
    double p_ = 1.0;       // power exponent
    double lambda_ = 1.0;  // exponential rate
    std::vector<TablePoint> table_;
    double scale_ = 1.0;
    double offset_ = 0.0;
    Interval domain_;
};

}  // namespace gqa
