#include "irt/engine.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "irt/csv.hpp"
#include "irt/errors.hpp"
#include "irt/fmt.hpp"
#include "irt/svg.hpp"

namespace irt {

namespace {

namespace fs = std::filesystem;

template <typename Fn>
auto with_block(const char* block, Fn&& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(block) + ": " + e.what());
    } catch (const ModelError& e) {
        throw ModelError(std::string(block) + ": " + e.what());
    }
}

CsvTable sticky_table(const RunArtifacts& run) {
    CsvTable t;
    t.header = {"period",     "real_price", "nominal_price", "inflation", "output_gap",
                "real_output", "policy_rate", "premium",      "speed_q",   "money_supply"};
    const SimulationResult& s = run.sticky;
    for (std::size_t i = 0; i < s.real_price.size(); ++i) {
        t.rows.push_back({std::to_string(i), csv_number(s.real_price[i]),
                          csv_number(s.nominal_price[i]), csv_number(s.inflation[i]),
                          csv_number(s.output_gap[i]), csv_number(s.real_output[i]),
                          csv_number(s.policy_rate[i]), csv_number(s.premium[i]),
                          csv_number(s.speed[i]), csv_number(s.money[i])});
    }
    return t;
}

CsvTable money_table(const RunArtifacts& run) {
    CsvTable t;
    t.header = {"period", "real_balances", "money_supply"};
    const SimulationResult& s = run.sticky;
    for (std::size_t i = 0; i < s.money.size(); ++i) {
        t.rows.push_back({std::to_string(i), csv_number(s.money[i] / s.nominal_price[i]),
                          csv_number(s.money[i])});
    }
    return t;
}

CsvTable nk_table(const RunArtifacts& run) {
    CsvTable t;
    t.header = {"pi", "x", "R", "phillips_residual", "is_residual", "rule_residual"};
    const NKParams& p = run.config.calibration.nk;
    const NKState& s = *run.nk;
    const NKResiduals r = nk_residuals(s, p.pi_star, 0.0, p, 0.0, 0.0);
    t.rows.push_back({csv_number(s.pi), csv_number(s.x), csv_number(s.R),
                      csv_number(r.phillips), csv_number(r.is), csv_number(r.rule)});
    return t;
}

CsvTable soe_table(const RunArtifacts& run) {
    CsvTable t;
    t.header = {"period", "u", "exchange_rate", "price_level", "inflation",
                "expected_depreciation"};
    const SOEResult& s = *run.soe;
    for (std::size_t i = 0; i < s.price_level.size(); ++i) {
        t.rows.push_back({std::to_string(i), csv_number(run.config.soe.external[i].u),
                          csv_number(s.exchange_rate[i]), csv_number(s.price_level[i]),
                          csv_number(s.inflation[i]), csv_number(s.expected_depreciation[i])});
    }
    return t;
}

CsvTable forecast_table(const RunArtifacts& run) {
    CsvTable t;
    t.header = {"period", "money", "demand", "price", "inflation"};
    const HorizonForecast& f = *run.forecast;
    for (std::size_t k = 0; k < f.price_path.size(); ++k) {
        // Backward-dated inflation: the period-k cell holds the k-1 -> k rate.
        const std::string infl = k == 0 ? "" : csv_number(f.inflation_path[k - 1]);
        t.rows.push_back({std::to_string(k), csv_number(f.money_path[k]),
                          csv_number(f.demand_path[k]), csv_number(f.price_path[k]), infl});
    }
    return t;
}

std::string manifest_text(const RunArtifacts& run) {
    const ScenarioConfig& c = run.config;
    const Calibration& cal = c.calibration;
    std::string s;
    s += "name: " + yaml_quote(c.name) + "\n";
    s += "horizon: " + std::to_string(c.horizon) + "\n";
    s += "speed_mode: " + speed_mode_name(c.speed_mode) + "\n";
    s += "blocks: [sticky";
    if (c.money_enabled) s += ", money";
    if (c.nk_enabled) s += ", nk";
    if (c.soe_enabled) s += ", soe";
    if (c.forecast_enabled) s += ", horizon_forecast";
    s += "]\n";
    s += "calibration:\n";
    s += "  pi_star: " + to_shortest(cal.pi_star) + "\n";
    s += "  r_ss: " + to_shortest(cal.r_ss) + "\n";
    s += "  b1: " + to_shortest(cal.b1) + "\n";
    s += "  b2: " + to_shortest(cal.b2) + "\n";
    s += "  a1: " + to_shortest(cal.a1) + "\n";
    s += "  a2: " + to_shortest(cal.a2) + "\n";
    s += "  j: " + to_shortest(cal.j) + "\n";
    s += "  xi: " + to_shortest(cal.xi) + "\n";
    s += "derived:\n";
    s += "  R_bar: " + to_shortest(run.derived.R_bar) + "\n";
    s += "  c1: " + to_shortest(run.derived.c1) + "\n";
    s += "  p_star: " + to_shortest(run.derived.p_star) + "\n";
    if (c.shocks.events.empty()) {
        s += "shock: []\n";
    } else {
        s += "shock:\n";
        for (const Shock& e : c.shocks.events) {
            s += "  - period: " + std::to_string(e.period) + "\n";
            s += "    size: " + to_shortest(e.size) + "\n";
        }
    }
    s += "policy:\n";
    s += "  mode: " + policy_mode_name(c.policy.mode) + "\n";
    const PolicyPath resolved = resolve_policy(c.policy);
    if (resolved.points.empty()) {
        s += "  rates: []\n";
    } else {
        s += "  rates:\n";
        for (const RatePoint& pt : resolved.points) {
            s += "    - period: " + std::to_string(pt.period) + "\n";
            s += "      rate: " + to_shortest(pt.rate) + "\n";
        }
    }
    // The money column is always produced, so its parameters always matter.
    s += "money:\n";
    s += "  eta: " + to_shortest(c.money.eta) + "\n";
    s += "  xi: " + to_shortest(c.money.xi) + "\n";
    s += "  scale: " + to_shortest(c.money.scale) + "\n";
    if (c.nk_enabled) {
        const NKParams& p = cal.nk;
        s += "nk:\n";
        s += "  gamma: " + to_shortest(p.gamma) + "\n";
        s += "  alpha: " + to_shortest(p.alpha) + "\n";
        s += "  mu: " + to_shortest(p.mu) + "\n";
        s += "  theta: " + to_shortest(p.theta) + "\n";
        s += "  pi_star: " + to_shortest(p.pi_star) + "\n";
        s += "  beta: " + to_shortest(p.beta) + "\n";
        s += "  vartheta: " + to_shortest(p.vartheta) + "\n";
    }
    if (c.soe_enabled) {
        s += "soe:\n";
        s += "  lambda: " + to_shortest(c.soe.params.lambda) + "\n";
        s += "  gamma0: " + to_shortest(c.soe.params.gamma0) + "\n";
        s += "  gamma1: " + to_shortest(c.soe.params.gamma1) + "\n";
        s += "  external:\n";
        for (const ExternalPoint& pt : c.soe.external) {
            s += "    - period: " + std::to_string(pt.period) + "\n";
            s += "      external_price: " + to_shortest(pt.external_price) + "\n";
            s += "      external_inflation: " + to_shortest(pt.external_inflation) + "\n";
            s += "      u: " + to_shortest(pt.u) + "\n";
            if (pt.gamma0_hat) s += "      gamma0_hat: " + to_shortest(*pt.gamma0_hat) + "\n";
            if (pt.expected_R) s += "      expected_R: " + to_shortest(*pt.expected_R) + "\n";
            if (pt.expected_R_ext) {
                s += "      expected_R_ext: " + to_shortest(*pt.expected_R_ext) + "\n";
            }
            if (pt.uip_eps) s += "      uip_eps: " + to_shortest(*pt.uip_eps) + "\n";
        }
    }
    if (c.forecast_enabled) {
        s += "forecast:\n";
        s += "  money_path: [";
        for (std::size_t k = 0; k < c.forecast.money_path.size(); ++k) {
            if (k) s += ", ";
            s += to_shortest(c.forecast.money_path[k]);
        }
        s += "]\n";
        s += "  demand_path: [";
        for (std::size_t k = 0; k < c.forecast.demand_path.size(); ++k) {
            if (k) s += ", ";
            s += to_shortest(c.forecast.demand_path[k]);
        }
        s += "]\n";
    }
    if (run.warnings.empty()) {
        s += "warnings: []\n";
    } else {
        s += "warnings:\n";
        for (const std::string& w : run.warnings) {
            s += "  - " + yaml_quote(w) + "\n";
        }
    }
    return s;
}

std::vector<ChartPanel> run_panels(const RunArtifacts& run) {
    const SimulationResult& s = run.sticky;
    const std::string& label = run.config.name;
    return {
        {"price level", {{label, s.nominal_price}}},
        {"inflation", {{label, s.inflation}}},
        {"output gap", {{label, s.output_gap}}},
        {"policy rate", {{label, s.policy_rate}}},
    };
}

CompareResult compare_series(const std::vector<double>& base_pi,
                             const std::vector<double>& alt_pi,
                             const std::vector<double>& base_gap,
                             const std::vector<double>& alt_gap) {
    const std::size_t n = base_pi.size();
    CompareResult out;
    out.inflation_diff.resize(n);
    out.output_gap_diff.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        out.inflation_diff[t] = alt_pi[t] - base_pi[t];
        out.output_gap_diff[t] = alt_gap[t] - base_gap[t];
    }
    double max_abs = 0.0;
    int arg_max = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const double a = std::abs(out.inflation_diff[t]);
        if (a > max_abs) {
            max_abs = a;
            arg_max = static_cast<int>(t);
        }
    }
    out.summary.max_abs_inflation_diff = max_abs;
    out.summary.period_of_max = arg_max;
    int first = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (std::abs(out.inflation_diff[t]) >= kCompareConvergence) {
            first = static_cast<int>(t) + 1;
        }
    }
    out.summary.first_converged_period = first < static_cast<int>(n) ? first : -1;
    return out;
}

void write_compare(const std::string& out_dir, const CompareResult& cr) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw ModelError("cannot create output directory '" + out_dir +
                         "': " + ec.message());
    }
    CsvTable diff;
    diff.header = {"period", "inflation_diff", "output_gap_diff"};
    for (std::size_t t = 0; t < cr.inflation_diff.size(); ++t) {
        diff.rows.push_back({std::to_string(t), csv_number(cr.inflation_diff[t]),
                             csv_number(cr.output_gap_diff[t])});
    }
    write_csv((fs::path(out_dir) / "compare.csv").string(), diff);

    CsvTable summary;
    summary.header = {"metric", "value"};
    summary.rows.push_back(
        {"max_abs_inflation_diff", csv_number(cr.summary.max_abs_inflation_diff)});
    summary.rows.push_back({"period_of_max", std::to_string(cr.summary.period_of_max)});
    summary.rows.push_back(
        {"first_converged_period", std::to_string(cr.summary.first_converged_period)});
    write_csv((fs::path(out_dir) / "compare_summary.csv").string(), summary);
}

struct DirRun {
    int horizon = 0;
    ShockSchedule shocks;
    std::vector<double> inflation;
    std::vector<double> output_gap;
};

DirRun read_run_dir(const std::string& dir) {
    DirRun out;
    const CsvTable sticky = read_csv((fs::path(dir) / "sticky.csv").string());
    out.inflation = sticky.numeric_column("inflation");
    out.output_gap = sticky.numeric_column("output_gap");

    const std::string manifest_path = (fs::path(dir) / "manifest.yaml").string();
    YAML::Node manifest;
    try {
        manifest = YAML::LoadFile(manifest_path);
    } catch (const YAML::Exception& e) {
        throw ModelError("cannot read '" + manifest_path + "': " + e.what());
    }
    try {
        out.horizon = manifest["horizon"].as<int>();
        if (YAML::Node shocks = manifest["shock"]) {
            for (const auto& item : shocks) {
                out.shocks.events.push_back(
                    {item["period"].as<int>(), item["size"].as<double>()});
            }
        }
    } catch (const YAML::Exception& e) {
        throw ModelError("malformed manifest '" + manifest_path + "': " + e.what());
    }
    return out;
}

struct PresetDoc {
    const char* run_name;
    const char* text;
};

constexpr const char* kFigure1Steady =
    "name: \"figure1_steady\"\n"
    "horizon: 100\n"
    "speed_mode: paper_literal\n"
    "policy:\n"
    "  mode: constant\n";

constexpr const char* kFigure1Shock =
    "name: \"figure1_shock\"\n"
    "horizon: 100\n"
    "speed_mode: paper_literal\n"
    "shock:\n"
    "  - period: 20\n"
    "    size: 0.1\n"
    "policy:\n"
    "  mode: constant\n";

constexpr const char* kFigure2Shock =
    "name: \"figure2_shock\"\n"
    "horizon: 100\n"
    "speed_mode: paper_literal\n"
    "shock:\n"
    "  - period: 20\n"
    "    size: 0.1\n"
    "policy:\n"
    "  mode: constant\n";

constexpr const char* kFigure3Baseline =
    "name: \"figure3_baseline\"\n"
    "horizon: 100\n"
    "speed_mode: figure_consistent\n"
    "shock:\n"
    "  - period: 20\n"
    "    size: 0.1\n"
    "policy:\n"
    "  mode: constant\n";

constexpr const char* kFigure3Reactive =
    "name: \"figure3_reactive\"\n"
    "horizon: 100\n"
    "speed_mode: figure_consistent\n"
    "shock:\n"
    "  - period: 20\n"
    "    size: 0.1\n"
    "policy:\n"
    "  mode: reactive_figure3\n";

constexpr const char* kFigure4Baseline =
    "name: \"figure4_baseline\"\n"
    "horizon: 100\n"
    "speed_mode: figure_consistent\n"
    "shock:\n"
    "  - period: 20\n"
    "    size: 0.1\n"
    "policy:\n"
    "  mode: constant\n";

constexpr const char* kFigure4Reactive =
    "name: \"figure4_reactive\"\n"
    "horizon: 100\n"
    "speed_mode: figure_consistent\n"
    "shock:\n"
    "  - period: 20\n"
    "    size: 0.1\n"
    "policy:\n"
    "  mode: reactive_figure3\n";

std::vector<PresetDoc> builtin_preset(const std::string& preset) {
    if (preset == "figure1") {
        return {{"figure1_steady", kFigure1Steady}, {"figure1_shock", kFigure1Shock}};
    }
    if (preset == "figure2") {
        return {{"figure2_shock", kFigure2Shock}};
    }
    if (preset == "figure3") {
        return {{"figure3_baseline", kFigure3Baseline},
                {"figure3_reactive", kFigure3Reactive}};
    }
    if (preset == "figure4") {
        return {{"figure4_baseline", kFigure4Baseline},
                {"figure4_reactive", kFigure4Reactive}};
    }
    throw ConfigError("unknown preset '" + preset +
                      "' (expected figure1, figure2, figure3 or figure4)");
}

}  // namespace

RunArtifacts run_scenario(const ScenarioConfig& config) {
    RunArtifacts out;
    out.config = config;
    out.derived =
        with_block("sticky", [&] { return validate_calibration(config.calibration); });
    const PolicyPath policy = resolve_policy(config.policy);
    out.sticky = with_block("sticky", [&] {
        return simulate_sticky(config.calibration, config.shocks, policy, config.speed_mode,
                               config.horizon);
    });
    out.sticky.money =
        with_block("money", [&] { return endogenous_money_path(out.sticky, config.money); });
    if (config.nk_enabled) {
        out.nk = with_block(
            "nk", [&] { return nk_anchored_solve(config.calibration.nk, 0.0, 0.0); });
    }
    if (config.soe_enabled) {
        out.soe = with_block(
            "soe", [&] { return evaluate_soe_path(config.soe.params, config.soe.external); });
    }
    if (config.forecast_enabled) {
        out.forecast = with_block("horizon_forecast", [&] {
            return finite_horizon_forecast(config.forecast.money_path,
                                           config.forecast.demand_path);
        });
    }
    for (const std::string& w : out.sticky.warnings) {
        out.warnings.push_back("sticky: " + w);
    }
    if (out.soe) {
        for (const std::string& w : out.soe->warnings) {
            out.warnings.push_back("soe: " + w);
        }
    }
    return out;
}

RunArtifacts run_scenario_to_dir(const ScenarioConfig& config, const std::string& out_dir,
                                 bool svg) {
    RunArtifacts run = run_scenario(config);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw ModelError("cannot create output directory '" + out_dir +
                         "': " + ec.message());
    }
    auto emit_csv = [&](const char* fname, const CsvTable& t) {
        const std::string path = (fs::path(out_dir) / fname).string();
        write_csv(path, t);
        run.artifact_paths.push_back(path);
    };
    emit_csv("sticky.csv", sticky_table(run));
    if (config.money_enabled) emit_csv("money.csv", money_table(run));
    if (config.nk_enabled) emit_csv("nk.csv", nk_table(run));
    if (config.soe_enabled) emit_csv("soe.csv", soe_table(run));
    if (config.forecast_enabled) emit_csv("forecast.csv", forecast_table(run));

    const std::string manifest_path = (fs::path(out_dir) / "manifest.yaml").string();
    write_text_file(manifest_path, manifest_text(run));
    run.artifact_paths.push_back(manifest_path);

    if (svg) {
        const std::string chart_path = (fs::path(out_dir) / "chart.svg").string();
        write_text_file(chart_path, render_chart_svg(config.name, run_panels(run)));
        run.artifact_paths.push_back(chart_path);
    }
    return run;
}

CompareResult compare_runs(const RunArtifacts& baseline, const RunArtifacts& alternative) {
    if (baseline.config.horizon != alternative.config.horizon) {
        throw ConfigError("compare: horizon mismatch (" +
                          std::to_string(baseline.config.horizon) + " vs " +
                          std::to_string(alternative.config.horizon) + ")");
    }
    if (!(baseline.config.shocks == alternative.config.shocks)) {
        throw ConfigError("compare: shock schedules differ between the two runs");
    }
    return compare_series(baseline.sticky.inflation, alternative.sticky.inflation,
                          baseline.sticky.output_gap, alternative.sticky.output_gap);
}

CompareResult compare_dirs(const std::string& baseline_dir, const std::string& alt_dir,
                           const std::string& out_dir) {
    const DirRun base = read_run_dir(baseline_dir);
    const DirRun alt = read_run_dir(alt_dir);
    if (base.horizon != alt.horizon) {
        throw ConfigError("compare: horizon mismatch (" + std::to_string(base.horizon) +
                          " vs " + std::to_string(alt.horizon) + ")");
    }
    if (!(base.shocks == alt.shocks)) {
        throw ConfigError("compare: shock schedules differ between the two runs");
    }
    if (base.inflation.size() != alt.inflation.size()) {
        throw ConfigError("compare: series length mismatch (" +
                          std::to_string(base.inflation.size()) + " vs " +
                          std::to_string(alt.inflation.size()) + ")");
    }
    const CompareResult cr =
        compare_series(base.inflation, alt.inflation, base.output_gap, alt.output_gap);
    write_compare(out_dir, cr);
    return cr;
}

std::vector<std::pair<std::string, std::string>> preset_documents(const std::string& preset) {
    const std::vector<PresetDoc> docs = builtin_preset(preset);
    std::vector<std::pair<std::string, std::string>> out;
    const char* seed_dir = std::getenv("IRT_SIM_SEED_DIR");
    for (const PresetDoc& doc : docs) {
        std::string text = doc.text;
        if (seed_dir != nullptr && *seed_dir != '\0') {
            const fs::path candidate = fs::path(seed_dir) / (std::string(doc.run_name) + ".yaml");
            std::error_code ec;
            if (fs::exists(candidate, ec) && !ec) {
                std::ifstream in(candidate, std::ios::binary);
                if (!in) {
                    throw ModelError("cannot open seed document '" + candidate.string() + "'");
                }
                std::ostringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
        }
        out.emplace_back(doc.run_name, std::move(text));
    }
    return out;
}

std::vector<std::string> execute_preset(const std::string& preset,
                                        const std::string& out_dir) {
    const auto docs = preset_documents(preset);
    std::vector<std::string> artifacts;
    std::vector<RunArtifacts> runs;
    for (const auto& [run_name, text] : docs) {
        ScenarioConfig cfg;
        try {
            cfg = parse_scenario(text);
        } catch (ConfigError& e) {
            throw ConfigError(run_name + ": " + e.what());
        }
        RunArtifacts run =
            run_scenario_to_dir(cfg, (fs::path(out_dir) / run_name).string(), false);
        artifacts.insert(artifacts.end(), run.artifact_paths.begin(),
                         run.artifact_paths.end());
        runs.push_back(std::move(run));
    }

    std::vector<ChartPanel> panels;
    if (preset == "figure1") {
        panels = {
            {"price level",
             {{runs[0].config.name, runs[0].sticky.nominal_price},
              {runs[1].config.name, runs[1].sticky.nominal_price}}},
            {"real price",
             {{runs[0].config.name, runs[0].sticky.real_price},
              {runs[1].config.name, runs[1].sticky.real_price}}},
        };
    } else if (preset == "figure2") {
        panels = {
            {"inflation", {{runs[0].config.name, runs[0].sticky.inflation}}},
            {"output gap", {{runs[0].config.name, runs[0].sticky.output_gap}}},
        };
    } else if (preset == "figure3") {
        panels = {
            {"inflation",
             {{runs[0].config.name, runs[0].sticky.inflation},
              {runs[1].config.name, runs[1].sticky.inflation}}},
            {"policy rate",
             {{runs[0].config.name, runs[0].sticky.policy_rate},
              {runs[1].config.name, runs[1].sticky.policy_rate}}},
        };
    } else {
        panels = {
            {"output gap",
             {{runs[0].config.name, runs[0].sticky.output_gap},
              {runs[1].config.name, runs[1].sticky.output_gap}}},
            {"policy rate",
             {{runs[0].config.name, runs[0].sticky.policy_rate},
              {runs[1].config.name, runs[1].sticky.policy_rate}}},
        };
    }
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw ModelError("cannot create output directory '" + out_dir +
                         "': " + ec.message());
    }
    const std::string chart_path = (fs::path(out_dir) / (preset + ".svg")).string();
    write_text_file(chart_path, render_chart_svg(preset, panels));
    artifacts.push_back(chart_path);

    if (preset == "figure3" || preset == "figure4") {
        const CompareResult cr = compare_runs(runs[0], runs[1]);
        const std::string cmp_dir = (fs::path(out_dir) / (preset + "_compare")).string();
        write_compare(cmp_dir, cr);
        artifacts.push_back((fs::path(cmp_dir) / "compare.csv").string());
        artifacts.push_back((fs::path(cmp_dir) / "compare_summary.csv").string());
    }
    return artifacts;
}

}  // namespace irt
