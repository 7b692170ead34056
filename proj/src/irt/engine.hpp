#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irt/money.hpp"
#include "irt/nk.hpp"
#include "irt/scenario.hpp"
#include "irt/soe.hpp"
#include "irt/sticky.hpp"

namespace irt {

// Everything a run produced: the resolved inputs, every enabled block's
// series, block-annotated warnings, and (after writing) the artifact paths.
struct RunArtifacts {
    ScenarioConfig config;
    DerivedConstants derived{};
    SimulationResult sticky;  // money column filled
    std::optional<NKState> nk;
    std::optional<SOEResult> soe;
    std::optional<HorizonForecast> forecast;
    std::vector<std::string> warnings;
    std::vector<std::string> artifact_paths;
};

// Executes the enabled blocks in dependency order without touching the
// filesystem. Block errors are re-thrown with the block name prefixed.
RunArtifacts run_scenario(const ScenarioConfig& config);

// Runs and writes one CSV per enabled block plus manifest.yaml (and chart.svg
// when svg is set) into out_dir, creating it if needed.
RunArtifacts run_scenario_to_dir(const ScenarioConfig& config, const std::string& out_dir,
                                 bool svg);

struct CompareSummary {
    double max_abs_inflation_diff = 0.0;
    int period_of_max = 0;
    // First period from which |d_inflation| stays below 5e-4 through the end;
    // -1 when even the final period is not below the threshold.
    int first_converged_period = -1;
};

struct CompareResult {
    std::vector<double> inflation_diff;   // alternative - baseline
    std::vector<double> output_gap_diff;  // alternative - baseline
    CompareSummary summary;
};

inline constexpr double kCompareConvergence = 5e-4;

CompareResult compare_runs(const RunArtifacts& baseline, const RunArtifacts& alternative);

// Reads sticky.csv and manifest.yaml from two run directories, checks that
// horizons and shock schedules agree, and writes compare.csv and
// compare_summary.csv into out_dir.
CompareResult compare_dirs(const std::string& baseline_dir, const std::string& alt_dir,
                           const std::string& out_dir);

// The scenario documents behind a preset, as (run name, YAML text) pairs.
// When the IRT_SIM_SEED_DIR environment variable names a directory holding
// <run name>.yaml, that file's text replaces the built-in document.
std::vector<std::pair<std::string, std::string>> preset_documents(const std::string& preset);

// Runs a preset (figure1..figure4) into out_dir: one subdirectory per
// scenario, a figure SVG, and for figure3/figure4 a comparison subdirectory.
// Returns the artifact paths it wrote.
std::vector<std::string> execute_preset(const std::string& preset, const std::string& out_dir);

}  // namespace irt
