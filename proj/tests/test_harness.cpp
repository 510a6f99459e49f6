#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "vpmcf/cli.hpp"
#include "vpmcf/csv.hpp"
#include "vpmcf/harness.hpp"
#include "vpmcf/monitors.hpp"

using namespace vpmcf;
namespace fs = std::filesystem;

namespace {
fs::path scratch_dir() {
    const fs::path p = fs::temp_directory_path() / "vpmcf_unit_scratch";
    fs::create_directories(p);
    return p;
}
}  // namespace

TEST_CASE("config parsing: round trip, defaults, and errors") {
    const std::string text =
        "# comment\n"
        "grid.a = 0\n"
        "grid.b = 2\n"
        "grid.N = 128\n"
        "grid.n = 3\n"
        "initial = dumbbell\n"
        "initial.r = 1.0\n"
        "initial.amp = 0.4\n"
        "flow.mode = plain_mcf\n"
        "flow.t_end = 0.25\n"
        "flow.stop_rho_min = auto\n"
        "monitors = volume_drift,area_monotone\n"
        "out_dir = somewhere\n";
    const auto cfg = harness::parse_config_text(text);
    CHECK(cfg.grid.b == 2.0);
    CHECK(cfg.grid.dim == 3);
    CHECK(cfg.initial == harness::InitialKind::Dumbbell);
    CHECK(cfg.flow.mode == flow::Mode::PlainMcf);
    CHECK(cfg.flow.stop_rho_min == -1.0);
    CHECK(cfg.monitors.size() == 2);
    CHECK(cfg.out_dir == "somewhere");

    // malformed line reports its number
    try {
        harness::parse_config_text("grid.a = 0\nnot a key value pair\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 2);
    }
    // unknown keys rejected
    try {
        harness::parse_config_text("grid.a = 0\ngrid.c = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(harness::parse_config_text("grid.N = twelve\n"), ConfigError);
}

TEST_CASE("snapshot CSV round-trips doubles exactly") {
    const auto dir = scratch_dir();
    const RadialProfile p = harness::make_perturbed({0, 1, 32, 2}, 1.0, 0.37, 2);
    const CurvatureField f = curvature_fields(p);
    const std::string path = (dir / "snap.csv").string();
    csv::write_snapshot(path, p, f);

    const RadialProfile q = csv::read_profile(path, 2);
    REQUIRE(q.grid.N == 32);
    CHECK(q.grid.a == p.grid.a);
    CHECK(q.grid.b == p.grid.b);
    for (int i = 0; i <= 32; ++i) CHECK(q.rho[i] == p.rho[i]);
}

TEST_CASE("run pipeline writes its artifacts and is byte-deterministic") {
    const auto dir = scratch_dir();
    harness::SimConfig cfg;
    cfg.grid = {0, 1, 64, 2};
    cfg.initial = harness::InitialKind::Perturbed;
    cfg.init_r = 1.0;
    cfg.init_amp = 0.1;
    cfg.init_modes = 2;
    cfg.flow.mode = flow::Mode::VolumePreserving;
    cfg.flow.t_end = 0.01;
    cfg.flow.dt_safety = 0.5;
    cfg.flow.output_every = 50;
    cfg.snapshot_stride = 4;
    cfg.svg = true;

    auto read_all = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };

    std::string first;
    for (int run = 0; run < 2; ++run) {
        cfg.out_dir = (dir / ("pipe" + std::to_string(run))).string();
        CHECK(harness::run_and_write(cfg, true) == 0);
        CHECK(fs::exists(fs::path(cfg.out_dir) / "timeseries.csv"));
        CHECK(fs::exists(fs::path(cfg.out_dir) / "census.csv"));
        CHECK(fs::exists(fs::path(cfg.out_dir) / "monitors.txt"));
        CHECK(fs::exists(fs::path(cfg.out_dir) / "snapshots" / "0000.csv"));
        CHECK(fs::exists(fs::path(cfg.out_dir) / "snapshots" / "0000.svg"));
        const std::string ts = read_all(fs::path(cfg.out_dir) / "timeseries.csv");
        if (run == 0)
            first = ts;
        else
            CHECK(ts == first);
    }
}

TEST_CASE("monitor reports on a clean VP run") {
    GridSpec g{0, 1, 64, 2};
    flow::FlowConfig fcfg;
    fcfg.mode = flow::Mode::VolumePreserving;
    fcfg.t_end = 0.02;
    fcfg.dt_safety = 0.5;
    fcfg.output_every = 200;
    const auto traj = flow::run(harness::make_perturbed(g, 1.0, 0.2, 2), fcfg);

    harness::MonitorOptions opt;
    const auto reports = harness::evaluate_monitors(traj, opt);
    REQUIRE(reports.size() == 9);
    for (const auto& r : reports) {
        INFO(r.name, " worst=", r.worst_value);
        CHECK(r.status != harness::MonitorStatus::Fail);
    }
}

TEST_CASE("cli: run exit codes and error reporting") {
    const auto dir = scratch_dir();
    const auto cfg_path = dir / "bad.cfg";
    {
        std::ofstream out(cfg_path);
        out << "grid.a = 0\nthis line is wrong\n";
    }
    const char* bad[] = {"vpmcf", "run", "--config", nullptr, nullptr};
    const std::string p = cfg_path.string();
    bad[3] = p.c_str();
    CHECK(cli::main(4, bad) == 1);

    const char* missing[] = {"vpmcf", "run", "--config", "/nonexistent/x.cfg"};
    CHECK(cli::main(4, missing) == 1);
}

TEST_CASE("cli: fit on a synthetic timeseries and on missing columns") {
    const auto dir = scratch_dir();
    const auto ts = dir / "fit_in.csv";
    {
        std::ofstream out(ts);
        out << "t,max_A2\n";
        for (double t = 0.0; t <= 0.995 + 1e-12; t += 0.005)
            out << t << ',' << csv::format_double(2.0 / (1.0 - t)) << "\n";
    }
    const std::string p = ts.string();
    const char* ok[] = {"vpmcf", "fit", p.c_str()};
    CHECK(cli::main(3, ok) == 0);

    const auto bad_ts = dir / "fit_bad.csv";
    {
        std::ofstream out(bad_ts);
        out << "time,value\n0,1\n";
    }
    const std::string q = bad_ts.string();
    const char* bad[] = {"vpmcf", "fit", q.c_str()};
    CHECK(cli::main(3, bad) == 1);
}

TEST_CASE("cli: rescale a snapshot with auto center and alpha") {
    const auto dir = scratch_dir();
    const RadialProfile p = harness::make_dumbbell({0, 1, 128, 2}, 1.0, 0.5);
    const CurvatureField f = curvature_fields(p);
    const auto snap = (dir / "neck.csv").string();
    csv::write_snapshot(snap, p, f);

    const auto out = (dir / "zoom.csv").string();
    const char* args[] = {"vpmcf", "rescale", snap.c_str(), "--alpha", "auto",
                          "--center", "auto", "--out", out.c_str()};
    CHECK(cli::main(9, args) == 0);
    const RadialProfile z = csv::read_profile(out, 2);
    // neck height normalized to 1 at the center
    double zmin = z.rho[0];
    for (double r : z.rho) zmin = std::min(zmin, r);
    CHECK(zmin == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("VPMCF_OUT overrides the configured out_dir") {
    const auto dir = scratch_dir();
    harness::SimConfig cfg;
    cfg.out_dir = (dir / "ignored").string();
    const std::string target = (dir / "env_target").string();
    setenv("VPMCF_OUT", target.c_str(), 1);
    CHECK(harness::resolve_out_dir(cfg) == target);
    unsetenv("VPMCF_OUT");
    CHECK(harness::resolve_out_dir(cfg) == cfg.out_dir);
}

TEST_CASE("plain-MCF monitors mark h and volume as observed-only") {
    GridSpec g{0, 1, 64, 2};
    flow::FlowConfig fcfg;
    fcfg.mode = flow::Mode::PlainMcf;
    fcfg.t_end = 0.05;
    fcfg.dt_safety = 0.5;
    fcfg.output_every = 500;
    const auto traj = flow::run(harness::make_cylinder(g, 1.0), fcfg);

    harness::MonitorOptions opt;
    const auto reports = harness::evaluate_monitors(traj, opt);
    for (const auto& r : reports) {
        if (r.name == "h_positive" || r.name == "volume_drift")
            CHECK(r.status == harness::MonitorStatus::ObservedOnly);
        else
            CHECK(r.status != harness::MonitorStatus::Fail);
    }
}
