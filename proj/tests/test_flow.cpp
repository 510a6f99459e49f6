#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vpmcf/flow.hpp"
#include "vpmcf/harness.hpp"

using namespace vpmcf;
using flow::FlowConfig;
using flow::Mode;
using flow::Status;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("plain-MCF speed on the unit cylinder is -(n-1)/rho") {
    const RadialProfile p = harness::make_cylinder({0, 1, 64, 2}, 1.0);
    const auto rhs = flow::profile_time_derivative(p, 0.0);
    for (double v : rhs) CHECK(v == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("volume-preserving cylinder is stationary under step") {
    const RadialProfile p = harness::make_cylinder({0, 1, 100, 2}, 1.0);
    FlowConfig cfg;
    cfg.mode = Mode::VolumePreserving;
    const flow::FlowState s0 = flow::make_state(p, cfg);
    CHECK(s0.h == doctest::Approx(1.0).epsilon(1e-14));

    const flow::FlowState s1 = flow::step(s0, 1e-5, cfg);
    for (int i = 0; i <= 100; ++i)
        CHECK(std::fabs(s1.profile.rho[i] - 1.0) <= 1e-14);
}

TEST_CASE("adaptive dt formula") {
    const RadialProfile p = harness::make_cylinder({0, 1, 100, 2}, 1.0);
    FlowConfig cfg;
    cfg.dt_safety = 0.2;
    cfg.t_end = 1.0;
    const auto s = flow::make_state(p, cfg);
    // 0.2 * min(dx^2/2 = 5e-5, rho^2/4 = 0.25, 1.0)
    CHECK(flow::adaptive_dt(s, cfg) == doctest::Approx(1e-5).epsilon(1e-12));

    // never exceeds dt_safety * dx^2 * min(1+rho'^2) / 2
    const RadialProfile q = harness::make_perturbed({0, 1, 64, 2}, 1.0, 0.4, 3);
    const auto sq = flow::make_state(q, cfg);
    CHECK(flow::adaptive_dt(sq, cfg) <= 0.2 * q.grid.dx() * q.grid.dx() / 2.0 * (1 + 1e-12));

    // dt ~ rho_min^2 scaling once the reaction bound binds
    RadialProfile thin = harness::make_cylinder({0, 1, 16, 2}, 1e-3);
    const auto st = flow::make_state(thin, cfg);
    CHECK(flow::adaptive_dt(st, cfg) == doctest::Approx(0.2 * 1e-6 / 4.0).epsilon(1e-10));
}

TEST_CASE("stationary cylinder run drifts below 1e-8") {
    GridSpec g{0, 1, 64, 2};
    FlowConfig cfg;
    cfg.mode = Mode::VolumePreserving;
    cfg.t_end = 0.05;
    cfg.dt_safety = 0.5;
    cfg.output_every = 200;
    const auto traj = flow::run(harness::make_cylinder(g, 1.0), cfg);
    CHECK(traj.final_status == Status::ReachedTEnd);
    double drift = 0;
    for (const auto& s : traj.states)
        for (double r : s.profile.rho) drift = std::max(drift, std::fabs(r - 1.0));
    CHECK(drift <= 1e-8);
}

TEST_CASE("plain-MCF cylinder tracks the closed-form collapse") {
    GridSpec g{0, 1, 64, 2};
    FlowConfig cfg;
    cfg.mode = Mode::PlainMcf;
    cfg.t_end = 1.0;
    cfg.dt_safety = 0.4;
    cfg.output_every = 500;
    const auto traj = flow::run(harness::make_cylinder(g, 1.0), cfg);
    CHECK((traj.final_status == Status::AxisContact ||
           traj.final_status == Status::StepUnderflow));

    double worst = 0;
    for (const auto& s : traj.states) {
        const double ex = std::sqrt(std::max(0.0, 1.0 - 2.0 * s.t()));
        if (ex < 0.1) continue;
        worst = std::max(worst, std::fabs(s.diag.min_rho - ex) / ex);
    }
    CHECK(worst <= 1e-4);
    CHECK(traj.final_state().t() == doctest::Approx(0.5).epsilon(5e-3));
}

TEST_CASE("volume projection holds the discrete volume to 1e-12") {
    GridSpec g{0, 1, 128, 2};
    FlowConfig cfg;
    cfg.mode = Mode::VolumePreserving;
    cfg.t_end = 0.01;
    cfg.dt_safety = 0.4;
    cfg.output_every = 100;
    const auto traj = flow::run(harness::make_perturbed(g, 1.0, 0.2, 2), cfg);
    for (const auto& s : traj.states)
        CHECK(std::fabs(s.diag.volume - s.V0) / s.V0 <= 1e-12);
}

TEST_CASE("reflection symmetry is preserved") {
    GridSpec g{0, 1, 128, 2};
    FlowConfig cfg;
    cfg.mode = Mode::VolumePreserving;
    cfg.t_end = 0.02;
    cfg.dt_safety = 0.4;
    cfg.output_every = 1000;
    const auto traj = flow::run(harness::make_perturbed(g, 1.0, 0.25, 2), cfg);
    double asym = 0;
    for (const auto& s : traj.states)
        for (int i = 0; i <= 128; ++i)
            asym = std::max(asym, std::fabs(s.profile.rho[i] - s.profile.rho[128 - i]));
    CHECK(asym <= 1e-10);
}

TEST_CASE("surface area decreases and h stays positive on a VP run") {
    GridSpec g{0, 1, 128, 2};
    FlowConfig cfg;
    cfg.mode = Mode::VolumePreserving;
    cfg.t_end = 0.05;
    cfg.dt_safety = 0.4;
    cfg.output_every = 500;
    const auto traj = flow::run(harness::make_perturbed(g, 1.0, 0.2, 2), cfg);
    for (std::size_t j = 0; j + 1 < traj.states.size(); ++j)
        CHECK(traj.states[j + 1].diag.area <=
              traj.states[j].diag.area + 1e-8 * traj.states[0].diag.area);
    for (const auto& s : traj.states) CHECK(s.h > 0.0);
}

TEST_CASE("dumbbell pinch: interior neck within 2 dx of the symmetric center") {
    GridSpec g{0, 6, 150, 2};
    FlowConfig cfg;
    cfg.mode = Mode::VolumePreserving;
    cfg.t_end = 30.0;
    cfg.dt_safety = 0.8;
    cfg.output_every = 100;
    cfg.stop_rho_min = 2.0 * g.dx();
    const auto traj = flow::run(harness::make_dumbbell(g, 1.0, 0.5), cfg);
    REQUIRE((traj.final_status == Status::AxisContact ||
             traj.final_status == Status::CurvatureBlowup));
    const auto& rho = traj.final_state().profile.rho;
    const int imin = (int)(std::min_element(rho.begin(), rho.end()) - rho.begin());
    CHECK(std::fabs(g.node(imin) - 3.0) <= 2.0 * g.dx());
}

TEST_CASE("dt shrinks like rho_min^2 once a pinch outruns the grid") {
    // coarse grid, deep stop: the reaction bound takes over below dx*sqrt(2)
    GridSpec g{0, 6, 76, 2};
    FlowConfig cfg;
    cfg.mode = Mode::VolumePreserving;
    cfg.t_end = 30.0;
    cfg.dt_safety = 0.8;
    cfg.output_every = 1;
    cfg.stop_rho_min = 2e-3;
    const auto traj = flow::run(harness::make_dumbbell(g, 1.0, 0.5), cfg);
    REQUIRE(traj.final_status == Status::AxisContact);

    int checked = 0;
    for (std::size_t j = 0; j + 1 < traj.states.size(); ++j) {
        const auto& s = traj.states[j];
        if (s.diag.min_rho >= 0.5 * g.dx()) continue;  // reaction-bound regime
        const double dt = traj.states[j + 1].t() - s.t();
        const double expect = cfg.dt_safety * s.diag.min_rho * s.diag.min_rho / 4.0;
        CHECK(dt == doctest::Approx(expect).epsilon(0.10));
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("step underflow on an extreme threshold") {
    GridSpec g{0, 1, 16, 2};
    FlowConfig cfg;
    cfg.mode = Mode::PlainMcf;
    cfg.t_end = 1.0;
    cfg.dt_safety = 1e-14;  // forces dt below the underflow cutoff
    const auto traj = flow::run(harness::make_cylinder(g, 1.0), cfg);
    CHECK(traj.final_status == Status::StepUnderflow);
}
