// gqabal: evaluate generalized quasi-arithmetic means, scan the balancing
// property, solve the inverse target system and classify means, driven by
// JSON configs. CSV goes to --out (or the config's output path) when given,
// otherwise to stdout.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gqa/balance.hpp"
#include "gqa/characterize.hpp"
#include "gqa/config.hpp"
#include "gqa/csv.hpp"
#include "gqa/inverse_system.hpp"

namespace {

constexpr int kExitBalanced = 0;
constexpr int kExitViolated = 1;
constexpr int kExitAnomaly = 2;
constexpr int kExitUsage = 10;
constexpr int kExitConfig = 11;
constexpr int kExitRuntime = 12;

struct Output {
    std::string path;  // empty: CSV to stdout

    void emit(const std::string& csv, const std::string& human) const {
        if (path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + path);
            out << csv;
            std::cout << human;
        }
    }
};

std::vector<double> parse_tuple(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("malformed number: " + item);
        values.push_back(v);
    }
    if (values.size() < 2) throw std::invalid_argument("tuple needs at least 2 values");
    return values;
}

gqa::ExperimentConfig load(const std::string& config_path,
                           const std::optional<std::uint64_t>& seed_override) {
    auto cfg = gqa::load_config(config_path);
    if (seed_override) cfg.sampler.seed = *seed_override;
    return cfg;
}

std::string resolve_out(const gqa::ExperimentConfig& cfg, const std::string& out_flag) {
    return out_flag.empty() ? cfg.output : out_flag;
}

int cmd_eval(const gqa::ExperimentConfig& cfg, const std::vector<double>& xraw,
             const Output& out) {
    const auto mean = cfg.make_mean();
    if (static_cast<int>(xraw.size()) != mean->arity()) {
        throw std::invalid_argument("--x size must equal n");
    }
    const gqa::PointTuple x(xraw);
    const double M = mean->evaluate(x);
    std::vector<double> v(static_cast<std::size_t>(mean->arity()));
    for (int k = 1; k <= mean->arity(); ++k) {
        v[static_cast<std::size_t>(k - 1)] = gqa::v_k(*mean, x, k);
    }

    std::string fterms;
    std::string fsum;
    std::ostringstream human;
    human << mean->describe() << " on " << mean->domain().str() << "\n";
    human << "  M(x) = " << gqa::csv_double(M) << "\n";
    if (cfg.kind == gqa::ExperimentConfig::MeanKind::Gqa) {
        const auto gm = cfg.make_gqa();
        std::vector<double> terms(static_cast<std::size_t>(gm.arity()));
        double sum = 0.0;
        for (int k = 1; k <= gm.arity(); ++k) {
            terms[static_cast<std::size_t>(k - 1)] = gm.generator(k).eval(x.coord(k));
            sum += terms[static_cast<std::size_t>(k - 1)];
        }
        fterms = gqa::csv_join(terms);
        fsum = gqa::csv_double(sum);
        for (int k = 1; k <= gm.arity(); ++k) {
            human << "  f_" << k << "(x_" << k
                  << ") = " << gqa::csv_double(terms[static_cast<std::size_t>(k - 1)]) << "\n";
        }
        human << "  F-sum = " << fsum << "\n";
    }
    for (int k = 1; k <= mean->arity(); ++k) {
        human << "  v_" << k << "(x) = " << gqa::csv_double(v[static_cast<std::size_t>(k - 1)])
              << "\n";
    }

    std::string csv = "mean,x,M,f_terms,f_sum,v_terms\n";
    csv += gqa::csv_row({mean->describe(), gqa::csv_join(x.coords()), gqa::csv_double(M), fterms,
                         fsum, gqa::csv_join(v)}) +
           "\n";
    out.emit(csv, human.str());
    return 0;
}

int cmd_balance(const gqa::ExperimentConfig& cfg, const Output& out) {
    const auto mean = cfg.make_mean();
    const auto report = gqa::scan_balance(*mean, cfg.sigma, cfg.sampler, cfg.tolerances.zero);

    std::string csv = "mean," + gqa::balance_csv_header() + "\n";
    csv += gqa::csv_row({mean->describe()}) + "," + gqa::balance_csv_row(report) + "\n";

    std::ostringstream human;
    const bool violated = report.verdict == gqa::BalanceReport::Verdict::Violated;
    human << mean->describe() << " sigma=(" << report.sigma.str() << ") samples="
          << report.samples_evaluated << "\n"
          << "  max |residual| = " << gqa::csv_double(report.max_abs_residual) << " at ("
          << gqa::csv_join(report.argmax_point.coords()) << ")\n"
          << "  verdict: " << (violated ? "violated" : "balanced_within_tol") << " (tol "
          << gqa::csv_double(report.tol_zero) << ")\n";
    out.emit(csv, human.str());
    return violated ? kExitViolated : kExitBalanced;
}

int cmd_solve(const gqa::ExperimentConfig& cfg, const std::vector<double>& c, const Output& out) {
    const auto gm = cfg.make_gqa();
    if (static_cast<int>(c.size()) != gm.arity()) {
        throw std::invalid_argument("--c size must equal n");
    }
    const auto rt = gqa::reduce_targets(gm, c);
    const auto sol = gqa::solve_reduced(gm, rt);

    double roundtrip = 0.0;
    if (sol.feasible) {
        const gqa::PointTuple x(sol.x);
        for (int k = 1; k <= gm.arity(); ++k) {
            roundtrip = std::max(
                roundtrip, std::fabs(gqa::v_k(gm, x, k) - c[static_cast<std::size_t>(k - 1)]));
        }
    }

    std::string csv = "mean,c,d,alpha,feasible,infeasible_k,x,roundtrip_error\n";
    csv += gqa::csv_row({gm.describe(), gqa::csv_join(c), gqa::csv_join(rt.d),
                         gqa::csv_join(sol.alpha), sol.feasible ? "true" : "false",
                         std::to_string(sol.infeasible_k), gqa::csv_join(sol.x),
                         sol.feasible ? gqa::csv_double(roundtrip) : std::string()}) +
           "\n";

    std::ostringstream human;
    human << gm.describe() << "\n  alpha = (" << gqa::csv_join(sol.alpha) << ")\n";
    if (sol.feasible) {
        human << "  x = (" << gqa::csv_join(sol.x) << ")\n  max_k |v_k(x) - c_k| = "
              << gqa::csv_double(roundtrip) << "\n";
    } else {
        human << "  infeasible: alpha_" << sol.infeasible_k << " outside f_"
              << sol.infeasible_k << "(I)\n";
    }
    out.emit(csv, human.str());
    return 0;
}

std::string classify_csv_header() {
    return "mean,sigma,D,max_deviation,normalized_max_deviation,balance_max_residual,"
           "shift_verdict,balance_verdict,agreement";
}

std::string classify_csv_row(const gqa::GQAMean& gm, const gqa::ClassifyEvidence& ev) {
    return gqa::csv_row(
        {gm.describe(), ev.balance.sigma.str(), gqa::csv_join(ev.profile.D),
         gqa::csv_double(ev.profile.max_deviation),
         gqa::csv_double(ev.normalized_max_deviation),
         gqa::csv_double(ev.balance.max_abs_residual),
         ev.quasi_arithmetic ? "quasi_arithmetic" : "not_quasi_arithmetic",
         ev.balanced ? "balanced_within_tol" : "violated", ev.agree ? "agree" : "anomaly"});
}

int cmd_classify(const gqa::ExperimentConfig& cfg, const Output& out) {
    const auto gm = cfg.make_gqa();
    const auto ev =
        gqa::classify(gm, cfg.sigma, cfg.sampler, cfg.tolerances.shift, cfg.tolerances.zero);

    std::string csv = classify_csv_header() + "\n" + classify_csv_row(gm, ev) + "\n";

    std::ostringstream human;
    human << gm.describe() << "\n  shift: max_deviation = "
          << gqa::csv_double(ev.profile.max_deviation)
          << " (normalized " << gqa::csv_double(ev.normalized_max_deviation) << ") -> "
          << (ev.quasi_arithmetic ? "quasi_arithmetic" : "not_quasi_arithmetic") << "\n"
          << "  balance: max |residual| = " << gqa::csv_double(ev.balance.max_abs_residual)
          << " -> " << (ev.balanced ? "balanced_within_tol" : "violated") << "\n"
          << "  detectors " << (ev.agree ? "agree" : "DISAGREE (anomaly)") << "\n";
    out.emit(csv, human.str());
    return ev.agree ? kExitBalanced : kExitAnomaly;
}

int cmd_verify(const std::string& config_dir, const Output& out) {
    namespace fs = std::filesystem;
    std::vector<fs::path> paths;
    if (!fs::is_directory(config_dir)) {
        throw gqa::ConfigError(config_dir + ": not a directory");
    }
    for (const auto& entry : fs::directory_iterator(config_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            paths.push_back(entry.path());
        }
    }
    if (paths.empty()) {
        throw gqa::ConfigError(config_dir + ": no .json configs found");
    }
    std::sort(paths.begin(), paths.end());

    std::string csv = "config," + classify_csv_header() + ",expected,pass\n";
    std::ostringstream human;
    bool any_fail = false;
    bool any_anomaly = false;
    for (const auto& path : paths) {
        const auto cfg = gqa::load_config(path);
        const auto gm = cfg.make_gqa();
        const auto ev =
            gqa::classify(gm, cfg.sigma, cfg.sampler, cfg.tolerances.shift, cfg.tolerances.zero);

        std::string expected = "-";
        bool pass = ev.agree;
        if (cfg.expect_quasi_arithmetic) {
            expected = *cfg.expect_quasi_arithmetic ? "quasi_arithmetic" : "not_quasi_arithmetic";
            pass = pass && (ev.quasi_arithmetic == *cfg.expect_quasi_arithmetic);
        }
        any_fail = any_fail || !pass;
        any_anomaly = any_anomaly || !ev.agree;

        csv += gqa::csv_row({path.filename().string()}) + "," + classify_csv_row(gm, ev) + "," +
               expected + "," + (pass ? "true" : "false") + "\n";
        human << (pass ? "[PASS] " : "[FAIL] ") << path.filename().string() << ": shift="
              << (ev.quasi_arithmetic ? "quasi_arithmetic" : "not_quasi_arithmetic")
              << " balance=" << (ev.balanced ? "balanced" : "violated")
              << " max_dev=" << gqa::csv_double(ev.normalized_max_deviation)
              << " max_res=" << gqa::csv_double(ev.balance.max_abs_residual) << "\n";
    }
    human << (any_fail ? "verify: FAIL\n" : "verify: all configs pass\n");

    if (out.path.empty()) {
        // keep the CSV machine-readable on stdout, summary on stderr
        std::cout << csv;
        std::cerr << human.str();
    } else {
        out.emit(csv, human.str());
    }
    if (any_anomaly) return kExitAnomaly;
    return any_fail ? kExitViolated : kExitBalanced;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized quasi-arithmetic means: balance scans, inverse solver, classifier"};
    app.require_subcommand(1);

    std::string config_path;
    std::string config_dir;
    std::string out_path;
    std::string x_text;
    std::string c_text;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        if (needs_config) {
            sub->add_option("--config", config_path, "JSON config path")->required();
        }
        sub->add_option("--out", out_path, "CSV output path (default: config's output/stdout)");
        sub->add_option("--seed", seed, "override the sampler seed");
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate M(x) and the v_k at a point");
    add_common(eval_cmd, true);
    eval_cmd->add_option("--x", x_text, "comma-separated tuple")->required();

    auto* balance_cmd = app.add_subcommand("balance", "scan the balance residual");
    add_common(balance_cmd, true);

    auto* solve_cmd = app.add_subcommand("solve", "solve the target system c_k = v_k(x)");
    add_common(solve_cmd, true);
    solve_cmd->add_option("--c", c_text, "comma-separated target tuple")->required();

    auto* classify_cmd = app.add_subcommand("classify", "shift + balance classification");
    add_common(classify_cmd, true);

    auto* verify_cmd = app.add_subcommand("verify", "classify every config in a directory");
    verify_cmd->add_option("--config-dir", config_dir, "directory of JSON configs")->required();
    verify_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify(config_dir, Output{out_path});
        }
        const auto cfg = load(config_path, seed);
        const Output out{resolve_out(cfg, out_path)};
        if (app.got_subcommand(eval_cmd)) return cmd_eval(cfg, parse_tuple(x_text), out);
        if (app.got_subcommand(balance_cmd)) return cmd_balance(cfg, out);
        if (app.got_subcommand(solve_cmd)) return cmd_solve(cfg, parse_tuple(c_text), out);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(cfg, out);
        return kExitUsage;
    } catch (const gqa::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
