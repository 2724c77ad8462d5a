#include "gqa/sampler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace gqa {

namespace {

// portable 53-bit mantissa mapping to [0,1)
double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int m) {
    if (m < 1) throw std::invalid_argument("linspace: m must be positive");
    if (m == 1) return {0.5 * (lo + hi)};
    std::vector<double> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        v[static_cast<std::size_t>(i)] =
            (i == m - 1) ? hi : lo + (hi - lo) * static_cast<double>(i) / (m - 1);
    }
    return v;
}

std::pair<double, double> resolve_box(const Sampler& sampler, const Interval& domain) {
    if (sampler.box) {
        const auto [lo, hi] = *sampler.box;
        if (!(lo < hi)) {
            throw std::invalid_argument("Sampler: box requires lo < hi");
        }
        if (!contains(domain, lo) || !contains(domain, hi)) {
            throw std::invalid_argument("Sampler: box must lie inside the interval");
        }
        return {lo, hi};
    }
    if (!domain.bounded()) {
        throw std::invalid_argument(
            "Sampler: a truncation box is required on an unbounded interval");
    }
    const double lo = domain.lo().value();
    const double hi = domain.hi().value();
    const double nudge = (hi - lo) * 1e-9;
    return {domain.lo_closed() ? lo : lo + nudge, domain.hi_closed() ? hi : hi - nudge};
}

std::vector<PointTuple> materialize(const Sampler& sampler, const Interval& domain, int n) {
    if (n < 2) throw std::invalid_argument("Sampler: n must be at least 2");
    const auto [lo, hi] = resolve_box(sampler, domain);

    std::vector<PointTuple> out;
    if (sampler.mode == Sampler::Mode::Grid) {
        if (sampler.per_axis < 1) {
            throw std::invalid_argument("Sampler: per_axis must be positive");
        }
        double total = std::pow(static_cast<double>(sampler.per_axis), n);
        if (total > 1e7) {
            throw std::invalid_argument("Sampler: grid would exceed 10^7 tuples");
        }
        const std::vector<double> axis = linspace(lo, hi, sampler.per_axis);
        const long count = static_cast<long>(total);
        out.reserve(static_cast<std::size_t>(count));
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        for (long s = 0; s < count; ++s) {
            std::vector<double> coords(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                coords[static_cast<std::size_t>(i)] = axis[idx[static_cast<std::size_t>(i)]];
            }
            out.emplace_back(std::move(coords));
            for (int i = n - 1; i >= 0; --i) {  // last axis fastest
                auto& d = idx[static_cast<std::size_t>(i)];
                if (++d < axis.size()) break;
                d = 0;
            }
        }
    } else {
        if (sampler.count < 1) {
            throw std::invalid_argument("Sampler: count must be positive");
        }
        std::mt19937_64 eng(sampler.seed);
        out.reserve(static_cast<std::size_t>(sampler.count));
        for (long s = 0; s < sampler.count; ++s) {
            std::vector<double> coords(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                coords[static_cast<std::size_t>(i)] = lo + (hi - lo) * uniform01(eng);
            }
            out.emplace_back(std::move(coords));
        }
    }
    return out;
}

}  // namespace gqa
