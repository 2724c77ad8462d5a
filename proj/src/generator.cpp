#include "gqa/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gqa/detail/bisect.hpp"

namespace gqa {

namespace {

constexpr double kDomainTolFrac = 1e-9;

double domain_tol(double t) { return kDomainTolFrac * (1.0 + std::fabs(t)); }

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("Generator: ") + what + " must be finite");
    }
}

std::string num_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

bool GeneratorRange::contains(double y, double tol) const {
    if (!std::isfinite(y)) return false;
    bool lo_ok = true;
    if (lo.is_finite()) {
        lo_ok = lo_attained ? (y >= lo.value() - tol) : (y > lo.value());
    }
    bool hi_ok = true;
    if (hi.is_finite()) {
        hi_ok = hi_attained ? (y <= hi.value() + tol) : (y < hi.value());
    }
    return lo_ok && hi_ok;
}

Generator Generator::identity(const Interval& domain) {
    Generator g(domain);
    g.family_ = GeneratorFamily::Identity;
    g.validate_monotone_grid();
    return g;
}

Generator Generator::affine(double a, double b, const Interval& domain) {
    require_finite(a, "affine slope");
    require_finite(b, "affine intercept");
    Generator g(domain);
    g.family_ = GeneratorFamily::Affine;
    if (a < 0) {
        // decreasing descriptor: store the negation
        a = -a;
        b = -b;
    }
    g.a_ = a;
    g.b_ = b;
    g.validate_monotone_grid();
    return g;
}

Generator Generator::power(double p, const Interval& domain) {
    require_finite(p, "power exponent");
    const auto& lo = domain.lo();
    const bool positive_domain =
        lo.is_finite() && (lo.value() > 0.0 || (lo.value() == 0.0 && !domain.lo_closed()));
    if (!positive_domain) {
        throw std::invalid_argument("Generator: power family requires a domain inside (0, inf)");
    }
    Generator g(domain);
    g.family_ = GeneratorFamily::Power;
    g.p_ = p;
    g.validate_monotone_grid();
    return g;
}

Generator Generator::logarithm(const Interval& domain) {
    Generator g = power(0.0, domain);
    g.family_ = GeneratorFamily::Logarithm;
    return g;
}

Generator Generator::exponential(double lambda, const Interval& domain) {
    require_finite(lambda, "exponential rate");
    if (lambda == 0.0) {
        throw std::invalid_argument("Generator: exponential rate must be non-zero");
    }
    Generator g(domain);
    g.family_ = GeneratorFamily::Exponential;
    g.lambda_ = lambda;
    g.validate_monotone_grid();
    return g;
}

Generator Generator::monotone_table(std::vector<TablePoint> points, const Interval& domain) {
    if (points.size() < 2) {
        throw std::invalid_argument("Generator: monotone_table needs at least 2 breakpoints");
    }
    for (const auto& pt : points) {
        require_finite(pt.t, "table abscissa");
        require_finite(pt.value, "table ordinate");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].t > points[i - 1].t)) {
            throw std::invalid_argument("Generator: table abscissas must be strictly increasing");
        }
    }
    bool nondecreasing = true;
    bool nonincreasing = true;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].value < points[i - 1].value) nondecreasing = false;
        if (points[i].value > points[i - 1].value) nonincreasing = false;
    }
    if (!nondecreasing && !nonincreasing) {
        throw std::invalid_argument("Generator: table ordinates must be monotone");
    }
    if (!nondecreasing) {
        for (auto& pt : points) pt.value = -pt.value;
    }
    if (!domain.bounded()) {
        throw std::invalid_argument("Generator: monotone_table requires a bounded domain");
    }
    const double span = points.back().t - points.front().t;
    const double slack = 1e-12 * std::max(1.0, span);
    if (domain.lo().value() < points.front().t - slack ||
        domain.hi().value() > points.back().t + slack) {
        throw std::invalid_argument("Generator: domain must lie within the table span");
    }
    Generator g(domain);
    g.family_ = GeneratorFamily::MonotoneTable;
    g.table_ = std::move(points);
    g.validate_monotone_grid();
    return g;
}

Generator Generator::with_affine(double scale, double offset) const {
    require_finite(scale, "scale");
    require_finite(offset, "offset");
    Generator g = *this;
    // compose on top of the existing transform
    double s = scale * scale_;
    double o = scale * offset_ + offset;
    if (s < 0) {
        s = -s;
        o = -o;
    }
    g.scale_ = s;
    g.offset_ = o;
    g.validate_monotone_grid();
    return g;
}

double Generator::base_eval(double t) const {
    switch (family_) {
    case GeneratorFamily::Identity:
        return t;
    case GeneratorFamily::Affine:
        return a_ * t + b_;
    case GeneratorFamily::Power:
        if (p_ > 0) return std::pow(t, p_);
        if (p_ == 0) return std::log(t);
        return -std::pow(t, p_);
    case GeneratorFamily::Logarithm:
        return std::log(t);
    case GeneratorFamily::Exponential:
        return lambda_ > 0 ? std::exp(lambda_ * t) : -std::exp(lambda_ * t);
    case GeneratorFamily::MonotoneTable: {
        const double tc = std::clamp(t, table_.front().t, table_.back().t);
        auto it = std::upper_bound(table_.begin(), table_.end(), tc,
                                   [](double v, const TablePoint& p) { return v < p.t; });
        if (it == table_.begin()) return table_.front().value;
        if (it == table_.end()) return table_.back().value;
        const TablePoint& hi = *it;
        const TablePoint& lo = *(it - 1);
        const double s = (tc - lo.t) / (hi.t - lo.t);
        return lo.value + s * (hi.value - lo.value);
    }
    }
    throw std::logic_error("Generator: unknown family");
}

double Generator::eval(double t) const {
    if (!contains(domain_, t, domain_tol(t))) {
        throw std::domain_error("Generator::eval: argument outside the domain");
    }
    // clamp tolerance-admitted overshoot back onto a closed finite endpoint
    if (domain_.lo().is_finite() && domain_.lo_closed() && t < domain_.lo().value()) {
        t = domain_.lo().value();
    }
    if (domain_.hi().is_finite() && domain_.hi_closed() && t > domain_.hi().value()) {
        t = domain_.hi().value();
    }
    return scale_ * base_eval(t) + offset_;
}

ExtReal Generator::base_limit(const ExtReal& endpoint) const {
    switch (family_) {
    case GeneratorFamily::Identity:
        return endpoint;
    case GeneratorFamily::Affine:
        if (a_ == 0.0) return ExtReal(b_);
        if (endpoint.is_finite()) return ExtReal(a_ * endpoint.value() + b_);
        return endpoint;
    case GeneratorFamily::Power:
    case GeneratorFamily::Logarithm: {
        const double p = family_ == GeneratorFamily::Logarithm ? 0.0 : p_;
        if (endpoint.is_pos_inf()) {
            return p < 0 ? ExtReal(0.0) : ExtReal::pos_inf();
        }
        const double v = endpoint.value();  // >= 0 by construction
        if (v == 0.0) {
            return p > 0 ? ExtReal(0.0) : ExtReal::neg_inf();
        }
        if (p > 0) return ExtReal(std::pow(v, p));
        if (p == 0) return ExtReal(std::log(v));
        return ExtReal(-std::pow(v, p));
    }
    case GeneratorFamily::Exponential:
        if (endpoint.is_neg_inf()) {
            return lambda_ > 0 ? ExtReal(0.0) : ExtReal::neg_inf();
        }
        if (endpoint.is_pos_inf()) {
            return lambda_ > 0 ? ExtReal::pos_inf() : ExtReal(0.0);
        }
        return ExtReal(lambda_ > 0 ? std::exp(lambda_ * endpoint.value())
                                   : -std::exp(lambda_ * endpoint.value()));
    case GeneratorFamily::MonotoneTable:
        return ExtReal(base_eval(endpoint.value()));  // table domains are bounded
    }
    throw std::logic_error("Generator: unknown family");
}

GeneratorRange Generator::range() const {
    if (scale_ == 0.0) {
        return {ExtReal(offset_), ExtReal(offset_), true, true};
    }

    ExtReal lo = base_limit(domain_.lo());
    ExtReal hi = base_limit(domain_.hi());
    bool lo_att = domain_.lo_closed();
    bool hi_att = domain_.hi_closed();

    // a flat edge segment attains the open-endpoint limit at interior points
    if (family_ == GeneratorFamily::MonotoneTable) {
        if (!lo_att) {
            const double e = domain_.lo().value();
            const double probe = std::min(std::nextafter(e, table_.back().t) +
                                              1e-9 * (table_.back().t - table_.front().t),
                                          domain_.hi().value());
            lo_att = base_eval(probe) == lo.value();
        }
        if (!hi_att) {
            const double e = domain_.hi().value();
            const double probe = std::max(std::nextafter(e, table_.front().t) -
                                              1e-9 * (table_.back().t - table_.front().t),
                                          domain_.lo().value());
            hi_att = base_eval(probe) == hi.value();
        }
    }
    if (family_ == GeneratorFamily::Affine && a_ == 0.0) {
        lo_att = hi_att = true;  // constant: the single value is attained
    }
    if (lo.is_infinite()) lo_att = false;
    if (hi.is_infinite()) hi_att = false;

    // apply the post-transform (scale_ > 0 here)
    auto map = [&](const ExtReal& v) -> ExtReal {
        if (v.is_finite()) {
            const double m = scale_ * v.value() + offset_;
            if (std::isinf(m)) return m > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
            return ExtReal(m);
        }
        return v;
    };
    GeneratorRange r{map(lo), map(hi), lo_att, hi_att};
    if (r.lo == r.hi && r.lo.is_finite()) {
        r.lo_attained = r.hi_attained = true;
    }
    if (r.lo.is_infinite()) r.lo_attained = false;
    if (r.hi.is_infinite()) r.hi_attained = false;
    return r;
}

double Generator::generalized_inverse(double y, double tol) const {
    const GeneratorRange r = range();
    const double band = tol * (1.0 + std::fabs(y));
    // reject only beyond the tolerance band; edge queries are resolved by the
    // bisection itself
    if (r.lo.is_finite() && y < r.lo.value() - band) {
        throw std::range_error("generalized_inverse: target below the generator range");
    }
    if (r.hi.is_finite() && y > r.hi.value() + band) {
        throw std::range_error("generalized_inverse: target above the generator range");
    }
    detail::BisectSpec spec;
    spec.tol = tol;
    spec.leftmost = true;
    return detail::invert_nondecreasing([this](double t) { return eval(t); }, domain_, y, spec);
}

bool Generator::same_descriptor(const Generator& other) const {
    if (family_ != other.family_ || scale_ != other.scale_ || offset_ != other.offset_) {
        return false;
    }
    switch (family_) {
    case GeneratorFamily::Identity:
    case GeneratorFamily::Logarithm:
        return true;
    case GeneratorFamily::Affine:
        return a_ == other.a_ && b_ == other.b_;
    case GeneratorFamily::Power:
        return p_ == other.p_;
    case GeneratorFamily::Exponential:
        return lambda_ == other.lambda_;
    case GeneratorFamily::MonotoneTable:
        return table_ == other.table_;
    }
    return false;
}

std::string Generator::describe() const {
    std::string base;
    switch (family_) {
    case GeneratorFamily::Identity:
        base = "identity";
        break;
    case GeneratorFamily::Affine:
        base = "affine(" + num_str(a_) + ";" + num_str(b_) + ")";
        break;
    case GeneratorFamily::Power:
        base = "power(" + num_str(p_) + ")";
        break;
    case GeneratorFamily::Logarithm:
        base = "log";
        break;
    case GeneratorFamily::Exponential:
        base = "exp(" + num_str(lambda_) + ")";
        break;
    case GeneratorFamily::MonotoneTable:
        base = "table[" + std::to_string(table_.size()) + "]";
        break;
    }
    std::string s;
    if (scale_ != 1.0) s += num_str(scale_) + "*";
    s += base;
    if (offset_ != 0.0) s += (offset_ > 0 ? "+" : "") + num_str(offset_);
    return s;
}

void Generator::validate_monotone_grid() const {
    const auto [a, b] = finite_probe_window(domain_);
    const int m = 256;
    double prev = eval(a);
    for (int i = 1; i < m; ++i) {
        const double t = (i == m - 1) ? b : a + (b - a) * static_cast<double>(i) / (m - 1);
        const double v = eval(t);
        if (v < prev - 1e-12) {
            throw std::invalid_argument("Generator: not non-decreasing on the validation grid");
        }
        prev = v;
    }
}

}  // namespace gqa
