#pragma once

#include <string>
#include <vector>

#include "irt/calibration.hpp"
#include "irt/money.hpp"
#include "irt/soe.hpp"
#include "irt/sticky.hpp"

namespace irt {

// Policy section as written in a config document; reactive_figure3 is a
// built-in rate response that resolve_policy expands into explicit points.
struct PolicyConfig {
    enum class Mode {
        constant,
        explicit_path,
        reactive_figure3,
    };
    Mode mode = Mode::constant;
    std::vector<RatePoint> points;

    bool operator==(const PolicyConfig&) const = default;
};

struct ForecastConfig {
    std::vector<double> money_path;
    std::vector<double> demand_path;

    bool operator==(const ForecastConfig&) const = default;
};

struct SOEConfig {
    SOEParams params;
    ExternalPath external;

    bool operator==(const SOEConfig&) const = default;
};

// Fully resolved scenario: defaults applied, block enablement decided by the
// presence of the corresponding config section. The sticky block is always on.
struct ScenarioConfig {
    std::string name = "scenario";
    int horizon = 100;
    Calibration calibration{};
    ShockSchedule shocks{};
    PolicyConfig policy{};
    SpeedMode speed_mode = SpeedMode::paper_literal;
    MoneyDemandParams money{};
    SOEConfig soe{};
    ForecastConfig forecast{};
    bool money_enabled = false;
    bool nk_enabled = false;
    bool soe_enabled = false;
    bool forecast_enabled = false;

    bool operator==(const ScenarioConfig&) const = default;
};

// Parses a YAML scenario document. Unknown keys are errors (with their full
// key path), syntax errors carry line/column, and every config invariant
// violation names the offending key.
ScenarioConfig parse_scenario(const std::string& text);

// Same, reading the document from a file.
ScenarioConfig parse_scenario_file(const std::string& path);

// Canonical YAML rendering of a resolved config; parse_scenario applied to
// the output yields an equal ScenarioConfig.
std::string serialize_scenario(const ScenarioConfig& config);

// Expands the policy section into the simulation's PolicyPath. The
// reactive_figure3 mode produces the built-in response: 9% in period 21, then
// 0.5 pp less each period through 5% in period 29; later periods fall back to
// R_bar via the explicit-path default.
PolicyPath resolve_policy(const PolicyConfig& policy);

std::string speed_mode_name(SpeedMode mode);
std::string policy_mode_name(PolicyConfig::Mode mode);

}  // namespace irt
