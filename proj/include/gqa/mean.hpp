#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gqa/generator.hpp"
#include "gqa/interval.hpp"
#include "gqa/point_tuple.hpp"

namespace gqa {

/// Minimal evaluation contract shared by every mean: arity, domain, evaluate.
/// The balance machinery runs against this interface only.
class Mean {
public:
    virtual ~Mean() = default;
    virtual int arity() const = 0;
    virtual const Interval& domain() const = 0;
    virtual double evaluate(const PointTuple& x) const = 0;
    virtual std::string describe() const = 0;
};

/// Generalized quasi-arithmetic mean M_f(x) = F^{-1}(f_1(x_1)+...+f_n(x_n))
/// with F = f_1+...+f_n. Construction validates that the generators share
/// one domain and that F is strictly increasing on a 512-point grid (margin
/// 1e-14), the numeric counterpart of "not simultaneously constant".
class GQAMean : public Mean {
public:
    explicit GQAMean(std::vector<Generator> generators, double eval_tol = 1e-12);

    int arity() const override { return static_cast<int>(generators_.size()); }
    const Interval& domain() const override { return domain_; }
    double evaluate(const PointTuple& x) const override;
    std::string describe() const override;

    double F_eval(double t) const;
    double F_inverse(double u) const { return F_inverse(u, eval_tol_); }
    double F_inverse(double u, double tol) const;

    /// k is 1-based.
    const Generator& generator(int k) const;
    const std::vector<Generator>& generators() const { return generators_; }
    double eval_tol() const { return eval_tol_; }

private:
    std::vector<Generator> generators_;
    Interval domain_;
    double eval_tol_;
};

/// M(x,y) = t*min(x,y) + (1-t)*max(x,y), the symmetric min/max combination.
class MinMaxMean : public Mean {
public:
    MinMaxMean(double t, const Interval& domain);

    int arity() const override { return 2; }
    const Interval& domain() const override { return domain_; }
    double evaluate(const PointTuple& x) const override;
    std::string describe() const override;

    double t() const { return t_; }

private:
    double t_;
    Interval domain_;
};

/// The projections M^1(x,y) = x and M^2(x,y) = y.
class CoordinateMean : public Mean {
public:
    CoordinateMean(int index, const Interval& domain);

    int arity() const override { return 2; }
    const Interval& domain() const override { return domain_; }
    double evaluate(const PointTuple& x) const override;
    std::string describe() const override;

    int index() const { return index_; }

private:
    int index_;
    Interval domain_;
};

/// |M(t,...,t) - t| <= tol for every grid point.
bool is_reflexive(const Mean& m, std::span<const double> grid, double tol);

/// Every coordinate permutation of every sample changes the value by at most tol.
bool is_symmetric(const Mean& m, const std::vector<PointTuple>& samples, double tol);

/// All generator descriptors structurally identical (the f_1 = ... = f_n case).
bool is_quasi_arithmetic_exact(const GQAMean& m);

}  // namespace gqa
