#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqa/generator.hpp"
#include "gqa/interval.hpp"
#include "gqa/mean.hpp"
#include "gqa/permutation.hpp"
#include "gqa/sampler.hpp"

namespace gqa {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double eval = 1e-12;
    double zero = 1e-9;
    double shift = 1e-8;
};

/// Parsed experiment description (JSON document). Everything needed to build
/// the mean, the permutation and the sampler for one run.
struct ExperimentConfig {
    enum class MeanKind { Gqa, MinMax, Coordinate };

    std::string name;
    Interval interval = Interval::closed(0, 1);
    int n = 2;
    MeanKind kind = MeanKind::Gqa;
    std::vector<Generator> generators;  // gqa kind
    double minmax_t = 0.5;              // minmax kind
    int coordinate_index = 1;           // coordinate kind
    Permutation sigma = Permutation::identity(2);
    Sampler sampler;
    Tolerances tolerances;
    std::string output;                          // optional CSV path
    std::optional<bool> expect_quasi_arithmetic; // verify battery expectation

    std::unique_ptr<Mean> make_mean() const;
    /// The GQA mean; throws ConfigError for other kinds.
    GQAMean make_gqa() const;
};

ExperimentConfig parse_config(const std::string& json_text, const std::string& origin);
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace gqa
