#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gqa/interval.hpp"
#include "gqa/point_tuple.hpp"

namespace gqa {

/// Deterministic tuple source for scans: either a per-axis equispaced grid or
/// seeded uniform draws, over a truncation box inside the interval. The box
/// is mandatory when the interval is unbounded; when omitted on a bounded
/// interval, open endpoints are nudged inward.
struct Sampler {
    enum class Mode { Grid, Random };

    Mode mode = Mode::Random;
    long count = 10000;  // random mode: number of tuples
    int per_axis = 32;   // grid mode: nodes per axis
    std::uint64_t seed = 0;
    std::optional<std::pair<double, double>> box;
};

/// The effective closed sampling box [lo, hi] on one axis.
std::pair<double, double> resolve_box(const Sampler& sampler, const Interval& domain);

/// All sample tuples, in a deterministic order (grid: row-major with the last
/// axis fastest; random: one uniform draw per coordinate from a single
/// mt19937_64 stream with a fixed 53-bit mantissa mapping).
std::vector<PointTuple> materialize(const Sampler& sampler, const Interval& domain, int n);

/// m equispaced values on [lo, hi] inclusive.
std::vector<double> linspace(double lo, double hi, int m);

}  // namespace gqa
