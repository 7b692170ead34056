// Command-line front end; talks to the simulator through the C API only.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "irtsim.h"

namespace {

int exit_code(irt_status status) {
    switch (status) {
        case IRT_OK:
            return 0;
        case IRT_ERROR_CONFIG:
            return 1;
        default:
            return 2;
    }
}

int finish(irt_status status) {
    if (status != IRT_OK) {
        std::fprintf(stderr, "error: %s\n", irt_last_error());
    }
    return exit_code(status);
}

int run_command(const std::string& config_path, const std::string& out_dir, bool svg) {
    irt_scenario* scenario = nullptr;
    irt_status status = irt_scenario_parse_file(config_path.c_str(), &scenario);
    if (status != IRT_OK) {
        return finish(status);
    }
    irt_run* run = nullptr;
    status = irt_run_scenario(scenario, out_dir.c_str(), svg ? 1 : 0, &run);
    if (status == IRT_OK) {
        const size_t n = irt_run_warning_count(run);
        for (size_t i = 0; i < n; ++i) {
            std::fprintf(stderr, "warning: %s\n", irt_run_warning(run, i));
        }
    }
    irt_run_free(run);
    irt_scenario_free(scenario);
    return finish(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic simulator of inflation-and-interest-rate-targeting policy"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    bool svg = false;
    CLI::App* run = app.add_subcommand("run", "Execute a scenario config into a directory");
    run->add_option("--config", config_path, "Scenario config file (YAML)")->required();
    run->add_option("--out", out_dir, "Output directory")->required();
    run->add_flag("--svg", svg, "Also render chart.svg");

    std::string baseline_dir;
    std::string alt_dir;
    std::string compare_out;
    CLI::App* compare =
        app.add_subcommand("compare", "Diff the inflation and output-gap paths of two runs");
    compare->add_option("--baseline", baseline_dir, "Baseline run directory")->required();
    compare->add_option("--alt", alt_dir, "Alternative run directory")->required();
    compare->add_option("--out", compare_out, "Output directory")->required();

    std::string preset_name;
    std::string preset_out;
    CLI::App* preset =
        app.add_subcommand("preset", "Run a built-in scenario bundle (figure1..figure4)");
    preset->add_option("name", preset_name, "Preset name")->required();
    preset->add_option("--out", preset_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (run->parsed()) {
        return run_command(config_path, out_dir, svg);
    }
    if (compare->parsed()) {
        return finish(
            irt_compare_dirs(baseline_dir.c_str(), alt_dir.c_str(), compare_out.c_str()));
    }
    return finish(irt_preset_execute(preset_name.c_str(), preset_out.c_str()));
}
