#pragma once

#include <string>
#include <vector>

#include "vpmcf/flow.hpp"
#include "vpmcf/profile.hpp"

namespace vpmcf::harness {

enum class InitialKind { Cylinder, Perturbed, Dumbbell, FromFile };

// Line-oriented `key = value` run configuration. Unknown keys are rejected
// with the offending line number.
struct SimConfig {
    GridSpec grid;
    flow::FlowConfig flow;
    InitialKind initial = InitialKind::Cylinder;
    double init_r = 1.0;
    double init_amp = 0.1;
    int init_modes = 2;
    std::string init_path;
    std::vector<std::string> monitors;  // empty = all
    bool monitors_none = false;
    double census_tol = 1e-8;
    double c00 = 4.0;
    double rescale_half_width = 5.0;
    bool svg = false;
    int snapshot_stride = 1;
    std::string out_dir = "out";
};

SimConfig parse_config_text(const std::string& text);           // throws ConfigError
SimConfig parse_config_file(const std::string& path);           // throws ConfigError

// ---- initial-data presets ----------------------------------------------

RadialProfile make_cylinder(const GridSpec& grid, double r);
// r + amp cos(2 pi modes (x-a)/(b-a)); requires |amp| < r
RadialProfile make_perturbed(const GridSpec& grid, double r, double amp, int modes);
// r + amp cos(2 pi (x-a)/(b-a)): interior neck at the midpoint
RadialProfile make_dumbbell(const GridSpec& grid, double r, double amp);

RadialProfile make_initial(const SimConfig& config);

// ---- run pipeline --------------------------------------------------------

// Executes flow::run and writes timeseries.csv, census.csv, monitors.txt,
// snapshots/NNNN.csv (every snapshot_stride-th recorded state), fit.txt for
// singular terminations, and optional per-snapshot SVG plots.
// VPMCF_OUT overrides config.out_dir. Returns 0, or 2 when a monitor fails
// and strict is set.
int run_and_write(const SimConfig& config, bool strict);

// Writes the timeseries rows for an existing trajectory (exposed for tests).
void write_timeseries(const std::string& path, const flow::Trajectory& traj,
                      double census_tol, double c00);

std::string resolve_out_dir(const SimConfig& config);

}  // namespace vpmcf::harness
