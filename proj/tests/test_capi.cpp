#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "irtsim.h"

using doctest::Approx;

namespace fs = std::filesystem;

namespace {

const char* kShockDoc =
    "horizon: 60\n"
    "shock:\n"
    "  - period: 20\n"
    "    size: 0.1\n";

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("irt_capi_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("version and error slots behave") {
    CHECK(std::strcmp(irt_version(), "1.0.0") == 0);

    irt_scenario* sc = nullptr;
    REQUIRE(irt_scenario_parse("horizon: 10\n", &sc) == IRT_OK);
    CHECK(std::strcmp(irt_last_error(), "") == 0);  // success clears the slot
    irt_scenario_free(sc);
}

TEST_CASE("parse, run, and read a series") {
    irt_scenario* sc = nullptr;
    REQUIRE(irt_scenario_parse(kShockDoc, &sc) == IRT_OK);

    irt_run* run = nullptr;
    REQUIRE(irt_run_scenario(sc, nullptr, 0, &run) == IRT_OK);

    const double* data = nullptr;
    size_t len = 0;
    REQUIRE(irt_run_series(run, "sticky", "inflation", &data, &len) == IRT_OK);
    REQUIRE(len == 61);
    CHECK(data[0] == Approx(0.03).epsilon(1e-12));
    CHECK(data[20] == Approx(0.13300000000000023).epsilon(1e-12));

    REQUIRE(irt_run_series(run, "sticky", "real_price", &data, &len) == IRT_OK);
    CHECK(data[20] == Approx(1.1).epsilon(1e-14));

    REQUIRE(irt_run_series(run, "sticky", "money_supply", &data, &len) == IRT_OK);
    CHECK(len == 61);
    CHECK(data[0] == Approx(0.8309015777255739).epsilon(1e-15));

    // blocks the run did not produce are argument errors with a message
    CHECK(irt_run_series(run, "nk", "pi", &data, &len) == IRT_ERROR_ARGUMENT);
    CHECK(std::string(irt_last_error()).find("not produced") != std::string::npos);
    CHECK(irt_run_series(run, "orbit", "x", &data, &len) == IRT_ERROR_ARGUMENT);
    CHECK(std::string(irt_last_error()).find("unknown block") != std::string::npos);
    CHECK(irt_run_series(run, "sticky", "volume", &data, &len) == IRT_ERROR_ARGUMENT);
    CHECK(std::string(irt_last_error()).find("unknown column") != std::string::npos);

    CHECK(irt_run_warning_count(run) == 0);
    CHECK(irt_run_warning(run, 0) == nullptr);

    irt_run_free(run);
    irt_scenario_free(sc);
}

TEST_CASE("enabled blocks expose their series") {
    const char* doc =
        "horizon: 30\n"
        "nk:\n"
        "  gamma: 0.1\n"
        "soe:\n"
        "  lambda: 0.001\n"
        "  gamma0: 4000\n"
        "  gamma1: -0.8\n"
        "  external:\n"
        "    - period: 0\n"
        "      external_price: 2.0\n"
        "      external_inflation: 0.02\n"
        "      u: 0.0\n"
        "      gamma0_hat: 0.05\n"
        "    - period: 1\n"
        "      external_price: 2.04\n"
        "      external_inflation: 0.02\n"
        "      u: 0.01\n"
        "      gamma0_hat: 0.05\n";
    irt_scenario* sc = nullptr;
    REQUIRE(irt_scenario_parse(doc, &sc) == IRT_OK);
    irt_run* run = nullptr;
    REQUIRE(irt_run_scenario(sc, nullptr, 0, &run) == IRT_OK);

    const double* data = nullptr;
    size_t len = 0;
    REQUIRE(irt_run_series(run, "nk", "pi", &data, &len) == IRT_OK);
    REQUIRE(len == 1);
    CHECK(data[0] == Approx(0.03).epsilon(1e-14));
    REQUIRE(irt_run_series(run, "nk", "R", &data, &len) == IRT_OK);
    CHECK(data[0] == Approx(0.045).epsilon(1e-14));

    REQUIRE(irt_run_series(run, "soe", "exchange_rate", &data, &len) == IRT_OK);
    REQUIRE(len == 2);
    CHECK(data[0] == Approx(4000.0).epsilon(1e-15));
    REQUIRE(irt_run_series(run, "soe", "inflation", &data, &len) == IRT_OK);
    CHECK(data[1] == Approx(0.02 + 0.05 - 0.8 * 0.01).epsilon(1e-12));

    irt_run_free(run);
    irt_scenario_free(sc);
}

TEST_CASE("warnings cross the boundary") {
    irt_scenario* sc = nullptr;
    REQUIRE(irt_scenario_parse(
                "horizon: 40\nshock:\n  - period: 10\n    size: 0.4\n", &sc) == IRT_OK);
    irt_run* run = nullptr;
    REQUIRE(irt_run_scenario(sc, nullptr, 0, &run) == IRT_OK);
    REQUIRE(irt_run_warning_count(run) >= 1);
    const char* w = irt_run_warning(run, 0);
    REQUIRE(w != nullptr);
    CHECK(std::string(w).find("sticky: period 10") != std::string::npos);
    CHECK(irt_run_warning(run, irt_run_warning_count(run)) == nullptr);
    irt_run_free(run);
    irt_scenario_free(sc);
}

TEST_CASE("serialization round-trips through the boundary") {
    irt_scenario* sc = nullptr;
    REQUIRE(irt_scenario_parse(kShockDoc, &sc) == IRT_OK);
    char* text = nullptr;
    REQUIRE(irt_scenario_serialize(sc, &text) == IRT_OK);
    REQUIRE(text != nullptr);
    const std::string doc(text);
    irt_string_free(text);
    CHECK(doc.find("horizon: 60") != std::string::npos);
    CHECK(doc.find("period: 20") != std::string::npos);

    irt_scenario* back = nullptr;
    REQUIRE(irt_scenario_parse(doc.c_str(), &back) == IRT_OK);
    irt_scenario_free(back);
    irt_scenario_free(sc);
}

TEST_CASE("config failures come back as IRT_ERROR_CONFIG") {
    irt_scenario* sc = nullptr;
    CHECK(irt_scenario_parse("horizon: [\n", &sc) == IRT_ERROR_CONFIG);
    CHECK(sc == nullptr);
    CHECK(std::strlen(irt_last_error()) > 0);

    CHECK(irt_scenario_parse("horizont: 10\n", &sc) == IRT_ERROR_CONFIG);
    CHECK(std::string(irt_last_error()).find("horizont") != std::string::npos);

    CHECK(irt_scenario_parse_file("/nonexistent/irt.yaml", &sc) == IRT_ERROR_CONFIG);
    CHECK(std::string(irt_last_error()).find("/nonexistent/irt.yaml") != std::string::npos);
}

TEST_CASE("null arguments are rejected, not dereferenced") {
    CHECK(irt_scenario_parse(nullptr, nullptr) == IRT_ERROR_ARGUMENT);
    CHECK(std::strlen(irt_last_error()) > 0);
    CHECK(irt_run_scenario(nullptr, nullptr, 0, nullptr) == IRT_ERROR_ARGUMENT);
    CHECK(irt_run_series(nullptr, "sticky", "inflation", nullptr, nullptr) ==
          IRT_ERROR_ARGUMENT);
    CHECK(irt_scenario_serialize(nullptr, nullptr) == IRT_ERROR_ARGUMENT);
    CHECK(irt_compare_dirs(nullptr, nullptr, nullptr) == IRT_ERROR_ARGUMENT);
    CHECK(irt_preset_execute(nullptr, nullptr) == IRT_ERROR_ARGUMENT);
    // frees tolerate null
    irt_scenario_free(nullptr);
    irt_run_free(nullptr);
    irt_string_free(nullptr);
}

TEST_CASE("running with an output directory writes artifacts") {
    TempDir dir("run_out");
    irt_scenario* sc = nullptr;
    REQUIRE(irt_scenario_parse(kShockDoc, &sc) == IRT_OK);
    irt_run* run = nullptr;
    REQUIRE(irt_run_scenario(sc, dir.str().c_str(), 1, &run) == IRT_OK);
    CHECK(fs::exists(dir.path / "sticky.csv"));
    CHECK(fs::exists(dir.path / "manifest.yaml"));
    CHECK(fs::exists(dir.path / "chart.svg"));
    irt_run_free(run);
    irt_scenario_free(sc);
}

TEST_CASE("preset execution and directory comparison work end to end") {
    TempDir out("preset");
    REQUIRE(irt_preset_execute("figure4", out.str().c_str()) == IRT_OK);
    CHECK(fs::exists(out.path / "figure4_baseline" / "sticky.csv"));
    CHECK(fs::exists(out.path / "figure4_compare" / "compare_summary.csv"));

    TempDir cmp("cmp");
    REQUIRE(irt_compare_dirs((out.path / "figure4_baseline").string().c_str(),
                             (out.path / "figure4_reactive").string().c_str(),
                             cmp.str().c_str()) == IRT_OK);
    CHECK(fs::exists(cmp.path / "compare.csv"));

    CHECK(irt_compare_dirs("/nonexistent/a", "/nonexistent/b", cmp.str().c_str()) ==
          IRT_ERROR_RUNTIME);
    CHECK(std::strlen(irt_last_error()) > 0);

    CHECK(irt_preset_execute("figure9", out.str().c_str()) == IRT_ERROR_CONFIG);
}
