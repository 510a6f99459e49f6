#pragma once

#include <string>
#include <vector>

#include "vpmcf/profile.hpp"

namespace vpmcf::flow {

enum class Mode { VolumePreserving, PlainMcf };

enum class Status { Running, ReachedTEnd, AxisContact, CurvatureBlowup, StepUnderflow };

std::string to_string(Status s);
std::string to_string(Mode m);

struct FlowConfig {
    Mode mode = Mode::VolumePreserving;
    double dt_safety = 0.2;        // in (0,1]
    double t_end = 1.0;
    double stop_rho_min = -1.0;    // < 0: auto = 1e-3 * initial min rho
    double stop_A2_max = -1.0;     // < 0: auto = 1e8 * initial max |A|^2
    bool volume_projection = true;
    int output_every = 100;
    double vol_tol = 1e-6;         // monitored drift bound while running
    double rho_floor = kDefaultRhoFloor;

    void validate() const;
};

// Scalar diagnostics captured at recording time.
struct StateDiag {
    double volume = 0, area = 0;
    double min_rho = 0, max_A2 = 0;
    double max_v = 0, max_vy = 0;
    double max_H = 0, min_H = 0;
};

// One recorded state. The curvature field is recomputed on demand via
// curvature_fields(state.profile); recorded trajectories would otherwise
// carry ten per-node arrays per state.
struct FlowState {
    RadialProfile profile;
    double h = 0.0;  // averaged mean curvature forcing (0 in plain-MCF mode)
    double V0 = 0.0;
    Status status = Status::Running;
    StateDiag diag;

    double t() const { return profile.time; }
};

struct Trajectory {
    FlowConfig config;
    std::vector<FlowState> states;
    Status final_status = Status::Running;
    long long total_steps = 0;

    const FlowState& final_state() const { return states.back(); }
};

// Averaged mean curvature of a bare profile (volume-preserving forcing).
double averaged_h(const RadialProfile& profile);

// Right-hand side of the evolved graph equation,
// rho_t = rho''/(1+rho'^2) - (dim-1)/rho + h sqrt(1+rho'^2).
std::vector<double> profile_time_derivative(const RadialProfile& profile, double h);

// Initial FlowState for a run: computes V0, h, and diagnostics.
FlowState make_state(const RadialProfile& initial, const FlowConfig& config);

// dt = dt_safety * min(dx^2 min(1+rho'^2)/2, min rho^2/(4(dim-1)), t_end - t).
double adaptive_dt(const FlowState& state, const FlowConfig& config);

// One explicit RK4 step with per-stage h and Neumann ghosts, followed by the
// exact volume re-projection when enabled. On mid-step axis contact or
// non-finite values, returns the input state with the terminal status set.
FlowState step(const FlowState& state, double dt, const FlowConfig& config);

// Iterate adaptive_dt + step until a terminal status; records every
// output_every steps plus the final state. Never throws on singular geometry.
Trajectory run(const RadialProfile& initial, const FlowConfig& config);

}  // namespace vpmcf::flow
