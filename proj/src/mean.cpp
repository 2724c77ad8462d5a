#include "gqa/mean.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gqa/detail/bisect.hpp"

namespace gqa {

namespace {

constexpr double kDomainTolFrac = 1e-9;

void check_in_domain(const Interval& domain, const PointTuple& x) {
    for (double c : x.coords()) {
        if (!contains(domain, c, kDomainTolFrac * (1.0 + std::fabs(c)))) {
            throw std::domain_error("Mean: coordinate outside the interval");
        }
    }
}

void check_arity(int arity, const PointTuple& x) {
    if (x.size() != arity) {
        throw std::invalid_argument("Mean: tuple size does not match the arity");
    }
}

}  // namespace

GQAMean::GQAMean(std::vector<Generator> generators, double eval_tol)
    : generators_(std::move(generators)),
      domain_(generators_.empty() ? Interval::closed(0, 1) : generators_.front().domain()),
      eval_tol_(eval_tol) {
    if (generators_.size() < 2) {
        throw std::invalid_argument("GQAMean: needs at least 2 generators");
    }
    if (!(eval_tol_ > 0)) {
        throw std::invalid_argument("GQAMean: eval_tol must be positive");
    }
    for (const auto& g : generators_) {
        if (!(g.domain() == domain_)) {
            throw std::invalid_argument("GQAMean: generators must share one domain");
        }
    }
    // F must be strictly increasing; grid check with margin 1e-14
    const auto [a, b] = finite_probe_window(domain_);
    const int m = 512;
    double prev = F_eval(a);
    for (int i = 1; i < m; ++i) {
        const double t = (i == m - 1) ? b : a + (b - a) * static_cast<double>(i) / (m - 1);
        const double v = F_eval(t);
        if (!(v > prev + 1e-14)) {
            throw std::invalid_argument(
                "GQAMean: F = f_1+...+f_n is not strictly increasing on the validation grid "
                "(generators simultaneously constant?)");
        }
        prev = v;
    }
}

double GQAMean::F_eval(double t) const {
    double s = 0.0;
    for (const auto& g : generators_) s += g.eval(t);
    return s;
}

double GQAMean::F_inverse(double u, double tol) const {
    detail::BisectSpec spec;
    spec.tol = tol;
    spec.leftmost = false;  // F is strictly increasing
    return detail::invert_nondecreasing([this](double t) { return F_eval(t); }, domain_, u, spec);
}

double GQAMean::evaluate(const PointTuple& x) const {
    check_arity(arity(), x);
    check_in_domain(domain_, x);
    double s = 0.0;
    for (int k = 1; k <= arity(); ++k) {
        s += generator(k).eval(x.coord(k));
    }
    return F_inverse(s, eval_tol_);
}

const Generator& GQAMean::generator(int k) const {
    if (k < 1 || k > arity()) {
        throw std::out_of_range("GQAMean: generator index out of range");
    }
    return generators_[static_cast<std::size_t>(k - 1)];
}

std::string GQAMean::describe() const {
    std::string s = "gqa(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i > 0) s += ";";
        s += generators_[i].describe();
    }
    s += ")";
    return s;
}

MinMaxMean::MinMaxMean(double t, const Interval& domain) : t_(t), domain_(domain) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("MinMaxMean: t must lie in [0,1]");
    }
}

double MinMaxMean::evaluate(const PointTuple& x) const {
    check_arity(2, x);
    check_in_domain(domain_, x);
    const double a = x.coord(1);
    const double b = x.coord(2);
    return t_ * std::min(a, b) + (1.0 - t_) * std::max(a, b);
}

std::string MinMaxMean::describe() const {
    return "minmax(t=" + std::to_string(t_) + ")";
}

CoordinateMean::CoordinateMean(int index, const Interval& domain)
    : index_(index), domain_(domain) {
    if (index != 1 && index != 2) {
        throw std::invalid_argument("CoordinateMean: index must be 1 or 2");
    }
}

double CoordinateMean::evaluate(const PointTuple& x) const {
    check_arity(2, x);
    check_in_domain(domain_, x);
    return x.coord(index_);
}

std::string CoordinateMean::describe() const {
    return "coordinate(" + std::to_string(index_) + ")";
}

bool is_reflexive(const Mean& m, std::span<const double> grid, double tol) {
    const int n = m.arity();
    for (double t : grid) {
        PointTuple x(std::vector<double>(static_cast<std::size_t>(n), t));
        if (std::fabs(m.evaluate(x) - t) > tol) return false;
    }
    return true;
}

bool is_symmetric(const Mean& m, const std::vector<PointTuple>& samples, double tol) {
    for (const auto& x : samples) {
        const double base = m.evaluate(x);
        std::vector<double> c = x.coords();
        std::sort(c.begin(), c.end());
        do {
            if (std::fabs(m.evaluate(PointTuple(c)) - base) > tol) return false;
        } while (std::next_permutation(c.begin(), c.end()));
    }
    return true;
}

bool is_quasi_arithmetic_exact(const GQAMean& m) {
    for (int k = 2; k <= m.arity(); ++k) {
        if (!m.generator(1).same_descriptor(m.generator(k))) return false;
    }
    return true;
}

}  // namespace gqa
