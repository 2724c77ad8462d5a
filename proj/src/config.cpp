#include "gqa/config.hpp"

#include <fstream>

#include <json.hpp>

namespace gqa {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw ConfigError(origin + ": " + what);
}

double get_number(const json& j, const std::string& key, const std::string& origin) {
    if (!j.contains(key)) fail(origin, "missing field '" + key + "'");
    if (!j[key].is_number()) fail(origin, "field '" + key + "' must be a number");
    return j[key].get<double>();
}

double get_number_or(const json& j, const std::string& key, double fallback,
                     const std::string& origin) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) fail(origin, "field '" + key + "' must be a number");
    return j[key].get<double>();
}

ExtReal parse_endpoint(const json& j, const std::string& key, const std::string& origin) {
    if (!j.contains(key)) fail(origin, "interval: missing '" + key + "'");
    const auto& v = j[key];
    if (v.is_number()) return ExtReal(v.get<double>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf" || s == "+inf") return ExtReal::pos_inf();
        if (s == "-inf") return ExtReal::neg_inf();
        fail(origin, "interval: '" + key + "' must be a number, \"inf\" or \"-inf\"");
    }
    fail(origin, "interval: '" + key + "' must be a number or infinity string");
}

Interval parse_interval(const json& j, const std::string& origin) {
    if (!j.is_object()) fail(origin, "interval must be an object");
    const ExtReal lo = parse_endpoint(j, "lo", origin);
    const ExtReal hi = parse_endpoint(j, "hi", origin);
    const bool lo_closed = j.value("lo_closed", lo.is_finite());
    const bool hi_closed = j.value("hi_closed", hi.is_finite());
    try {
        return {lo, hi, lo_closed, hi_closed};
    } catch (const std::invalid_argument& e) {
        fail(origin, std::string("interval: ") + e.what());
    }
}

Generator parse_generator(const json& j, const Interval& domain, int index,
                          const std::string& origin) {
    const std::string where = origin + ": generators[" + std::to_string(index) + "]";
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
        fail(where, "must be an object with a string 'family'");
    }
    const std::string family = j["family"].get<std::string>();
    try {
        Generator g = [&]() {
            if (family == "identity") return Generator::identity(domain);
            if (family == "affine") {
                return Generator::affine(get_number(j, "a", where), get_number(j, "b", where),
                                         domain);
            }
            if (family == "power") return Generator::power(get_number(j, "p", where), domain);
            if (family == "logarithm" || family == "log") return Generator::logarithm(domain);
            if (family == "exponential" || family == "exp") {
                return Generator::exponential(get_number(j, "lambda", where), domain);
            }
            if (family == "monotone_table") {
                if (!j.contains("points") || !j["points"].is_array()) {
                    fail(where, "monotone_table requires a 'points' array");
                }
                std::vector<TablePoint> pts;
                for (const auto& p : j["points"]) {
                    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
                        !p[1].is_number()) {
                        fail(where, "each table point must be [t, value]");
                    }
                    pts.push_back({p[0].get<double>(), p[1].get<double>()});
                }
                return Generator::monotone_table(std::move(pts), domain);
            }
            fail(where, "unknown family '" + family + "'");
        }();
        const double scale = get_number_or(j, "scale", 1.0, where);
        const double offset = get_number_or(j, "offset", 0.0, where);
        if (scale != 1.0 || offset != 0.0) g = g.with_affine(scale, offset);
        return g;
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

Permutation parse_sigma(const json& j, int n, const std::string& origin) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "identity") return Permutation::identity(n);
        if (s == "reversal") return Permutation::reversal(n);
        fail(origin, "sigma: unknown keyword '" + s + "'");
    }
    if (j.is_array()) {
        std::vector<int> map;
        for (const auto& v : j) {
            if (!v.is_number_integer()) fail(origin, "sigma: entries must be integers");
            map.push_back(v.get<int>());
        }
        if (static_cast<int>(map.size()) != n) fail(origin, "sigma: size must equal n");
        try {
            return Permutation(std::move(map));
        } catch (const std::invalid_argument& e) {
            fail(origin, std::string("sigma: ") + e.what());
        }
    }
    fail(origin, "sigma must be \"identity\", \"reversal\" or an index array");
}

Sampler parse_sampler(const json& j, const std::string& origin) {
    Sampler s;
    if (!j.is_object()) fail(origin, "sampler must be an object");
    const std::string mode = j.value("mode", std::string("random"));
    if (mode == "grid") {
        s.mode = Sampler::Mode::Grid;
        s.per_axis = static_cast<int>(get_number(j, "per_axis", origin + ": sampler"));
    } else if (mode == "random") {
        s.mode = Sampler::Mode::Random;
        s.count = static_cast<long>(get_number(j, "count", origin + ": sampler"));
        if (!j.contains("seed")) fail(origin, "sampler: random mode requires a seed");
        if (!j["seed"].is_number_integer()) fail(origin, "sampler: seed must be an integer");
        s.seed = j["seed"].get<std::uint64_t>();
    } else {
        fail(origin, "sampler: mode must be \"grid\" or \"random\"");
    }
    if (j.contains("box")) {
        const auto& b = j["box"];
        if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) {
            fail(origin, "sampler: box must be [lo, hi]");
        }
        s.box = std::make_pair(b[0].get<double>(), b[1].get<double>());
    }
    return s;
}

}  // namespace

std::unique_ptr<Mean> ExperimentConfig::make_mean() const {
    switch (kind) {
    case MeanKind::Gqa:
        return std::make_unique<GQAMean>(generators, tolerances.eval);
    case MeanKind::MinMax:
        return std::make_unique<MinMaxMean>(minmax_t, interval);
    case MeanKind::Coordinate:
        return std::make_unique<CoordinateMean>(coordinate_index, interval);
    }
    throw ConfigError(name + ": unknown mean kind");
}

GQAMean ExperimentConfig::make_gqa() const {
    if (kind != MeanKind::Gqa) {
        throw ConfigError(name + ": this operation requires a gqa mean");
    }
    return GQAMean(generators, tolerances.eval);
}

ExperimentConfig parse_config(const std::string& json_text, const std::string& origin) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!j.is_object()) fail(origin, "top level must be an object");

    ExperimentConfig cfg;
    cfg.name = origin;

    if (!j.contains("interval")) fail(origin, "missing 'interval'");
    cfg.interval = parse_interval(j["interval"], origin);

    if (!j.contains("n") || !j["n"].is_number_integer()) {
        fail(origin, "'n' must be an integer");
    }
    cfg.n = j["n"].get<int>();
    if (cfg.n < 2) fail(origin, "'n' must be at least 2");

    std::string kind = "gqa";
    if (j.contains("mean")) {
        if (!j["mean"].is_object() || !j["mean"].contains("kind") ||
            !j["mean"]["kind"].is_string()) {
            fail(origin, "'mean' must be an object with a string 'kind'");
        }
        kind = j["mean"]["kind"].get<std::string>();
    }
    if (kind == "gqa") {
        cfg.kind = ExperimentConfig::MeanKind::Gqa;
        if (!j.contains("generators") || !j["generators"].is_array()) {
            fail(origin, "gqa mean requires a 'generators' array");
        }
        if (static_cast<int>(j["generators"].size()) != cfg.n) {
            fail(origin, "'generators' length must equal n");
        }
        int idx = 0;
        for (const auto& gj : j["generators"]) {
            cfg.generators.push_back(parse_generator(gj, cfg.interval, idx++, origin));
        }
    } else if (kind == "minmax") {
        cfg.kind = ExperimentConfig::MeanKind::MinMax;
        if (cfg.n != 2) fail(origin, "minmax mean requires n = 2");
        cfg.minmax_t = get_number(j["mean"], "t", origin + ": mean");
        if (!(cfg.minmax_t >= 0 && cfg.minmax_t <= 1)) {
            fail(origin, "mean: 't' must lie in [0,1]");
        }
    } else if (kind == "coordinate") {
        cfg.kind = ExperimentConfig::MeanKind::Coordinate;
        if (cfg.n != 2) fail(origin, "coordinate mean requires n = 2");
        cfg.coordinate_index = static_cast<int>(get_number(j["mean"], "index", origin + ": mean"));
        if (cfg.coordinate_index != 1 && cfg.coordinate_index != 2) {
            fail(origin, "mean: 'index' must be 1 or 2");
        }
    } else {
        fail(origin, "mean: unknown kind '" + kind + "'");
    }

    cfg.sigma = j.contains("sigma") ? parse_sigma(j["sigma"], cfg.n, origin)
                                    : Permutation::identity(cfg.n);

    if (j.contains("sampler")) {
        cfg.sampler = parse_sampler(j["sampler"], origin);
    } else {
        fail(origin, "missing 'sampler'");
    }

    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (!t.is_object()) fail(origin, "'tolerances' must be an object");
        cfg.tolerances.eval = get_number_or(t, "eval", cfg.tolerances.eval, origin);
        cfg.tolerances.zero = get_number_or(t, "zero", cfg.tolerances.zero, origin);
        cfg.tolerances.shift = get_number_or(t, "shift", cfg.tolerances.shift, origin);
    }

    if (j.contains("output")) {
        if (!j["output"].is_string()) fail(origin, "'output' must be a string");
        cfg.output = j["output"].get<std::string>();
    }

    if (j.contains("expect")) {
        if (!j["expect"].is_string()) fail(origin, "'expect' must be a string");
        const auto e = j["expect"].get<std::string>();
        if (e == "quasi_arithmetic") {
            cfg.expect_quasi_arithmetic = true;
        } else if (e == "not_quasi_arithmetic") {
            cfg.expect_quasi_arithmetic = false;
        } else {
            fail(origin, "'expect' must be quasi_arithmetic or not_quasi_arithmetic");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path.string() + ": cannot open config file");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config(text, path.filename().string());
}

}  // namespace gqa
