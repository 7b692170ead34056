#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "irt/calibration.hpp"
#include "irt/errors.hpp"
#include "irt/sticky.hpp"

using namespace irt;
using doctest::Approx;
using doctest::Contains;

namespace {

PolicyPath constant_policy() { return PolicyPath{}; }

PolicyPath explicit_policy(std::vector<RatePoint> points) {
    PolicyPath p;
    p.mode = PolicyPath::Mode::explicit_path;
    p.points = std::move(points);
    return p;
}

// The paper's reactive descent: 9% at period 21, minus 0.5 pp per period
// through 5% at period 29.
PolicyPath reactive_policy() {
    std::vector<RatePoint> pts;
    for (int k = 0; k < 9; ++k) {
        pts.push_back({21 + k, (90 - 5 * k) / 1000.0});
    }
    return explicit_policy(std::move(pts));
}

}  // namespace

TEST_CASE("premium") {
    CHECK(premium(0.04545, 0.04545) == 1.0);
    CHECK(premium(0.09, 0.04545) == Approx(1.04455).epsilon(1e-15));
    CHECK(premium(0.02, 0.04545) == Approx(0.97455).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(premium(-1.0, 0.04545), Contains("must exceed -1"), ModelError);
    CHECK_THROWS_WITH_AS(premium(-0.96, 0.04545), Contains("premium must be positive"),
                         ModelError);
}

TEST_CASE("adjustment speed in both modes") {
    CHECK(adjustment_speed(0.6, 1.0, 0.04545, 0.04545, SpeedMode::paper_literal) == 0.6);
    CHECK(adjustment_speed(0.6, 1.04455, 0.09, 0.04545, SpeedMode::paper_literal) ==
          Approx(0.5744100330285768).epsilon(1e-15));
    CHECK(adjustment_speed(0.6, 1.04455, 0.09, 0.04545, SpeedMode::figure_consistent) ==
          Approx(3.273).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(
        adjustment_speed(0.6, 1.0, -0.05, 0.04545, SpeedMode::figure_consistent),
        Contains("speed must be positive"), ModelError);
    CHECK_THROWS_WITH_AS(adjustment_speed(0.0, 1.0, 0.04545, 0.04545, SpeedMode::paper_literal),
                         Contains("j must be positive"), ModelError);
    CHECK_THROWS_WITH_AS(adjustment_speed(0.6, 0.0, 0.04545, 0.04545, SpeedMode::paper_literal),
                         Contains("premium must be positive"), ModelError);
}

TEST_CASE("speed monotonicity in the policy rate") {
    const double R_bar = 0.04545;
    double prev_paper = 0.0;
    double prev_fig = 0.0;
    bool first = true;
    for (double R = 0.04; R <= 0.12; R += 0.005) {
        const double rho = premium(R, R_bar);
        const double qp = adjustment_speed(0.6, rho, R, R_bar, SpeedMode::paper_literal);
        const double qf = adjustment_speed(0.6, rho, R, R_bar, SpeedMode::figure_consistent);
        if (!first) {
            CHECK(qp < prev_paper);  // restrictive policy slows adjustment
            CHECK(qf > prev_fig);    // ... or speeds it, in figure mode
        }
        prev_paper = qp;
        prev_fig = qf;
        first = false;
    }
}

TEST_CASE("real price step") {
    CHECK(real_price_step(1.0, 1.0, 0.6, 0.15, 0.0) == 1.0);
    CHECK(real_price_step(1.1, 1.0, 0.6, 0.15, 0.0) ==
          Approx(1.0913931185271228).epsilon(1e-15));
    CHECK(real_price_step(0.9, 1.0, 0.6, 0.15, 0.0) ==
          Approx(0.9086068814728772).epsilon(1e-15));
    CHECK_THROWS_AS(real_price_step(1.1, 1.0, 0.0, 0.15, 0.0), ModelError);
}

TEST_CASE("closed form real price") {
    CHECK(closed_form_real_price(1.0, 0.1, 0.6, 0.15, 0.0, 0.0) == Approx(1.1).epsilon(1e-15));
    CHECK(closed_form_real_price(1.0, 0.1, 0.6, 0.15, 0.0, 10.0) ==
          Approx(1.0406569659740599).epsilon(1e-15));
    CHECK(std::fabs(closed_form_real_price(1.0, 0.1, 0.6, 0.15, 0.0, 300.0) - 1.0) < 1e-10);
    CHECK_THROWS_AS(closed_form_real_price(1.0, 0.1, -0.2, 0.15, 0.0, 1.0), ModelError);
    CHECK_THROWS_AS(closed_form_real_price(1.0, 0.1, 0.6, 0.15, 0.0, -1.0), ModelError);
}

TEST_CASE("iterated step matches the closed form") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> draw_q(0.05, 4.0);
    std::uniform_real_distribution<double> draw_s(-0.5, 0.5);
    std::uniform_real_distribution<double> draw_a(0.01, 0.6);
    for (int i = 0; i < 200; ++i) {
        const double q = draw_q(rng);
        const double s = draw_s(rng);
        const double a1 = draw_a(rng);
        const double a2 = draw_a(rng) * 0.2;
        const double p_star = 1.0;
        double p = p_star + s;
        for (int tau = 1; tau <= 200; ++tau) {
            p = real_price_step(p, p_star, q, a1, a2);
            const double exact = closed_form_real_price(p_star, s, q, a1, a2, tau);
            CHECK(std::fabs(p - exact) <= 1e-12 * std::fabs(exact));
        }
    }
}

TEST_CASE("step contracts toward the equilibrium price") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> draw_q(0.01, 5.0);
    std::uniform_real_distribution<double> draw_p(0.1, 3.0);
    for (int i = 0; i < 500; ++i) {
        const double q = draw_q(rng);
        const double p_star = draw_p(rng);
        double p = draw_p(rng);
        if (p == p_star) continue;
        const double next = real_price_step(p, p_star, q, 0.15, 0.05);
        CHECK(std::fabs(next - p_star) < std::fabs(p - p_star));
    }
}

TEST_CASE("nominal price") {
    CHECK(nominal_price(1.0, 0.03, 0) == 1.0);
    CHECK(nominal_price(1.0, 0.03, 2) == Approx(1.0609).epsilon(1e-15));
    CHECK(nominal_price(1.1, 0.03, 20) == Approx(1.9867223581363564).epsilon(1e-15));
    CHECK_THROWS_AS(nominal_price(0.0, 0.03, 1), ModelError);
    CHECK_THROWS_AS(nominal_price(1.0, 0.03, -1), ModelError);
}

TEST_CASE("output gap and real output") {
    Calibration cal;
    CHECK(std::fabs(output_gap(1.0, cal)) <= 1e-15);
    CHECK(output_gap(1.1, cal) == Approx(-0.015).epsilon(1e-12));
    CHECK(output_gap(0.9, cal) == Approx(0.015).epsilon(1e-12));
    CHECK(real_output(1.0, cal) == Approx(0.85).epsilon(1e-15));
    CHECK(real_output(1.1, cal) == Approx(0.835).epsilon(1e-15));
}

TEST_CASE("the gap vanishes at the equilibrium price for any calibration") {
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> draw(0.05, 2.0);
    for (int i = 0; i < 500; ++i) {
        Calibration cal;
        cal.a1 = draw(rng);
        cal.a2 = draw(rng) * 0.3;
        cal.b2 = draw(rng);
        cal.b1 = cal.b2 + draw(rng);
        const double p_star = equilibrium_real_price(cal);
        CHECK(std::fabs(output_gap(p_star, cal)) <= 1e-14 * (1.0 + cal.b1));
    }
}

TEST_CASE("observed inflation") {
    CHECK(observed_inflation(1.03, 1.0) == Approx(0.03).epsilon(1e-14));
    CHECK(observed_inflation(1.986823, 1.763989) ==
          Approx(0.12632391698587697).epsilon(1e-15));
    CHECK(observed_inflation(1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(observed_inflation(0.0, 1.0), ModelError);
    CHECK_THROWS_AS(observed_inflation(1.0, 0.0), ModelError);
}

TEST_CASE("expand_policy fills unlisted periods with the steady rate") {
    const double R_bar = 0.04545;
    const auto flat = expand_policy(constant_policy(), R_bar, 5);
    REQUIRE(flat.size() == 6);
    for (double r : flat) CHECK(r == R_bar);

    const auto path = expand_policy(explicit_policy({{1, 0.09}, {3, 0.07}}), R_bar, 5);
    CHECK(path[0] == R_bar);
    CHECK(path[1] == 0.09);
    CHECK(path[2] == R_bar);  // point list, not hold-until-next
    CHECK(path[3] == 0.07);
    CHECK(path[4] == R_bar);
    CHECK(path[5] == R_bar);
}

TEST_CASE("steady state simulation stays exactly on the equilibrium path") {
    Calibration cal;
    const auto res =
        simulate_sticky(cal, ShockSchedule{}, constant_policy(), SpeedMode::paper_literal, 100);
    REQUIRE(res.real_price.size() == 101);
    const double p_star = equilibrium_real_price(cal);
    for (int t = 0; t <= 100; ++t) {
        CHECK(res.real_price[t] == p_star);  // bitwise fixed point
        CHECK(std::fabs(res.real_price[t] - 1.0) <= 1e-9);
        if (t >= 1) CHECK(res.inflation[t] == Approx(0.03).epsilon(1e-12));
        CHECK(std::fabs(res.output_gap[t]) <= 1e-15);
        CHECK(res.premium[t] == 1.0);
        CHECK(res.speed[t] == Approx(0.6).epsilon(1e-15));
    }
    CHECK(res.warnings.empty());
}

TEST_CASE("no drift over ten thousand periods") {
    Calibration cal;
    const auto res = simulate_sticky(cal, ShockSchedule{}, constant_policy(),
                                     SpeedMode::paper_literal, 10000);
    const double p_star = equilibrium_real_price(cal);
    for (int t = 0; t <= 10000; ++t) {
        CHECK(std::fabs(res.real_price[t] - p_star) <= 1e-9);
    }
}

TEST_CASE("shocked run matches the closed-form decay") {
    Calibration cal;
    ShockSchedule shocks;
    shocks.events.push_back({20, 0.1});
    const auto res =
        simulate_sticky(cal, shocks, constant_policy(), SpeedMode::paper_literal, 100);
    const double p_star = equilibrium_real_price(cal);
    CHECK(res.real_price[20] == Approx(1.1).epsilon(1e-15));
    CHECK(res.nominal_price[20] == Approx(1.9867223581363564).epsilon(1e-14));
    CHECK(res.inflation[20] == Approx(0.133).epsilon(1e-12));
    // rho = 1 exactly under constant policy, so q = j and Eq. II.6 applies.
    for (int t = 20; t <= 100; ++t) {
        const double exact =
            closed_form_real_price(p_star, 0.1 * p_star, cal.j, cal.a1, cal.a2, t - 20);
        CHECK(std::fabs(res.real_price[t] - exact) <= 1e-12 * exact);
    }
    // monotone decay with per-period factor e^{-0.09}
    const double factor = std::exp(-cal.j * (cal.a1 + cal.a2));
    for (int t = 21; t <= 100; ++t) {
        CHECK((res.real_price[t] - p_star) ==
              Approx((res.real_price[t - 1] - p_star) * factor).epsilon(1e-12));
    }
}

TEST_CASE("anti-Phillips then Phillips sign structure") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> draw_s(0.01, 0.2);
    for (int i = 0; i < 50; ++i) {
        Calibration cal;
        ShockSchedule shocks;
        shocks.events.push_back({10, draw_s(rng)});
        const auto res =
            simulate_sticky(cal, shocks, constant_policy(), SpeedMode::paper_literal, 80);
        CHECK(res.inflation[10] > cal.pi_star);
        CHECK(res.output_gap[10] < 0.0);
        for (int t = 11; t <= 80; ++t) {
            CHECK(res.inflation[t] < cal.pi_star);
            CHECK(res.output_gap[t] < 0.0);
            CHECK(res.output_gap[t] > res.output_gap[t - 1]);  // shrinking toward zero
        }
    }
}

TEST_CASE("reactive policy in figure mode nearly cancels shock-period inflation") {
    Calibration cal;
    ShockSchedule shocks;
    shocks.events.push_back({20, 0.1});
    const auto res = simulate_sticky(cal, shocks, reactive_policy(),
                                     SpeedMode::figure_consistent, 100);
    CHECK(res.policy_rate[21] == 0.09);
    CHECK(res.policy_rate[29] == 0.05);
    CHECK(res.policy_rate[30] == Approx(0.04545).epsilon(1e-12));  // back at R_bar
    CHECK(res.speed[21] == Approx(3.273).epsilon(1e-12));
    CHECK(res.real_price[21] == Approx(1.0612044675470083).epsilon(1e-13));
    CHECK(res.inflation[21] == Approx(-0.0063267258423471695).epsilon(1e-12));
    CHECK(std::fabs(res.inflation[21]) < 0.015);  // "almost zero"
}

TEST_CASE("shock schedule validation") {
    Calibration cal;
    const auto run = [&](ShockSchedule s) {
        return simulate_sticky(cal, s, constant_policy(), SpeedMode::paper_literal, 50);
    };
    ShockSchedule bad;
    bad.events = {{-1, 0.1}};
    CHECK_THROWS_WITH_AS(run(bad), Contains("non-negative"), ConfigError);
    bad.events = {{5, 0.1}, {5, 0.2}};
    CHECK_THROWS_WITH_AS(run(bad), Contains("strictly increasing"), ConfigError);
    bad.events = {{7, 0.1}, {3, 0.2}};
    CHECK_THROWS_WITH_AS(run(bad), Contains("strictly increasing"), ConfigError);
    bad.events = {{50, 0.1}};
    CHECK_THROWS_WITH_AS(run(bad), Contains("horizon"), ConfigError);
    bad.events = {{5, -1.0}};
    CHECK_THROWS_WITH_AS(run(bad), Contains("must exceed -1"), ConfigError);
}

TEST_CASE("policy path validation") {
    Calibration cal;
    const auto run = [&](PolicyPath p) {
        return simulate_sticky(cal, ShockSchedule{}, p, SpeedMode::paper_literal, 50);
    };
    PolicyPath constant_with_points;
    constant_with_points.points = {{1, 0.05}};
    CHECK_THROWS_WITH_AS(run(constant_with_points), Contains("constant policy"), ConfigError);
    CHECK_THROWS_WITH_AS(run(explicit_policy({{3, 0.05}, {3, 0.06}})),
                         Contains("strictly increasing"), ConfigError);
    CHECK_THROWS_WITH_AS(run(explicit_policy({{50, 0.05}})), Contains("horizon"), ConfigError);
    CHECK_THROWS_WITH_AS(run(explicit_policy({{3, -1.5}})), Contains("must exceed -1"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(run(explicit_policy({{-2, 0.05}})), Contains("non-negative"),
                         ConfigError);
}

TEST_CASE("simulation rejects tiny horizons and annotates period errors") {
    Calibration cal;
    CHECK_THROWS_WITH_AS(simulate_sticky(cal, ShockSchedule{}, constant_policy(),
                                         SpeedMode::paper_literal, 1),
                         Contains("horizon"), ModelError);
    // A rate far below R_bar drives the figure-mode speed negative at its period.
    CHECK_THROWS_WITH_AS(simulate_sticky(cal, ShockSchedule{}, explicit_policy({{4, -0.5}}),
                                         SpeedMode::figure_consistent, 50),
                         Contains("period 4: "), ModelError);
}

TEST_CASE("inflation far outside the target band raises a warning") {
    Calibration cal;
    ShockSchedule big;
    big.events.push_back({20, 0.3});  // pi_20 = 1.3*1.03 - 1 = 0.339 > 0.28
    const auto res =
        simulate_sticky(cal, big, constant_policy(), SpeedMode::paper_literal, 50);
    REQUIRE(res.warnings.size() == 1);
    CHECK(res.warnings[0].find("period 20") != std::string::npos);
    CHECK(res.warnings[0].find("validity") != std::string::npos);

    ShockSchedule small;
    small.events.push_back({20, 0.1});
    CHECK(simulate_sticky(cal, small, constant_policy(), SpeedMode::paper_literal, 50)
              .warnings.empty());
}
