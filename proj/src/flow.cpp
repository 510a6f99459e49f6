#include "vpmcf/flow.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "vpmcf/kernels.hpp"

namespace vpmcf::flow {

std::string to_string(Status s) {
    switch (s) {
        case Status::Running: return "running";
        case Status::ReachedTEnd: return "reached_t_end";
        case Status::AxisContact: return "axis_contact";
        case Status::CurvatureBlowup: return "curvature_blowup";
        case Status::StepUnderflow: return "step_underflow";
    }
    return "?";
}

std::string to_string(Mode m) {
    return m == Mode::VolumePreserving ? "volume_preserving" : "plain_mcf";
}

void FlowConfig::validate() const {
    if (!(dt_safety > 0.0 && dt_safety <= 1.0))
        throw InvalidArgument("FlowConfig: dt_safety must be in (0,1]");
    if (!(t_end > 0.0)) throw InvalidArgument("FlowConfig: t_end must be > 0");
    if (output_every < 1) throw InvalidArgument("FlowConfig: output_every must be >= 1");
    if (!(vol_tol > 0.0) || !(rho_floor > 0.0))
        throw InvalidArgument("FlowConfig: thresholds must be positive");
}

namespace {

constexpr double kMinDt = 1e-16;

// Shared workspace so the hot loop never allocates.
struct Stepper {
    GridSpec grid;
    FlowConfig cfg;
    double V0 = 0.0;
    std::vector<double> d1, d2, num, den, k1, k2, k3, k4, tmp, vol;

    Stepper(const GridSpec& g, const FlowConfig& c, double V0_) : grid(g), cfg(c), V0(V0_) {
        const std::size_t m = g.nodes();
        for (auto* v : {&d1, &d2, &num, &den, &k1, &k2, &k3, &k4, &tmp, &vol}) v->resize(m);
    }

    double stage_h(std::span<const double> rho) {
        if (cfg.mode == Mode::PlainMcf) return 0.0;
        kernels::derivatives(rho, grid.dx(), d1, d2);
        kernels::h_integrands(rho, d1, d2, grid.dim, num, den);
        return kernels::simpson_sum(num, grid.dx()) / kernels::simpson_sum(den, grid.dx());
    }

    void stage_rhs(std::span<const double> rho, std::span<double> out) {
        const double h = stage_h(rho);
        if (cfg.mode == Mode::PlainMcf) kernels::derivatives(rho, grid.dx(), d1, d2);
        kernels::flow_rhs(rho, d1, d2, grid.dim, h, out);
    }

    double discrete_volume(std::span<const double> rho) {
        kernels::pow_dim(rho, grid.dim, vol);
        return unit_sphere_area(grid.dim) / grid.dim * kernels::simpson_sum(vol, grid.dx());
    }

    // Advance rho in place. Returns Running on success; on failure rho is
    // left unchanged and the failing status is returned.
    Status advance(std::vector<double>& rho, double dt) {
        auto stage_ok = [&](std::span<const double> r) {
            return kernels::min_value(r) > cfg.rho_floor && kernels::all_finite(r);
        };

        stage_rhs(rho, k1);
        kernels::axpy(rho, 0.5 * dt, k1, tmp);
        if (!stage_ok(tmp)) return failing(tmp);
        stage_rhs(tmp, k2);
        kernels::axpy(rho, 0.5 * dt, k2, tmp);
        if (!stage_ok(tmp)) return failing(tmp);
        stage_rhs(tmp, k3);
        kernels::axpy(rho, dt, k3, tmp);
        if (!stage_ok(tmp)) return failing(tmp);
        stage_rhs(tmp, k4);
        kernels::rk4_combine(rho, dt, k1, k2, k3, k4, tmp);
        if (!stage_ok(tmp)) return failing(tmp);

        if (cfg.mode == Mode::VolumePreserving && cfg.volume_projection) {
            const double V = discrete_volume(tmp);
            if (!(V > 0.0) || !std::isfinite(V)) return Status::CurvatureBlowup;
            kernels::scale_inplace(tmp, std::pow(V0 / V, 1.0 / grid.dim));
        }
        rho.swap(tmp);
        return Status::Running;
    }

    static Status failing(std::span<const double> r) {
        return kernels::all_finite(r) ? Status::AxisContact : Status::CurvatureBlowup;
    }
};

StateDiag make_diag(const RadialProfile& p, const CurvatureField& f) {
    StateDiag d;
    d.volume = enclosed_volume(p);
    d.area = surface_area(p);
    d.min_rho = kernels::min_value(p.rho);
    d.max_A2 = kernels::max_value(f.A2);
    d.max_v = kernels::max_value(f.v);
    d.max_H = kernels::max_value(f.H);
    d.min_H = kernels::min_value(f.H);
    double vy = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) vy = std::max(vy, f.v[i] * p.rho[i]);
    d.max_vy = vy;
    return d;
}

FlowState snapshot(const RadialProfile& p, const FlowConfig& cfg, double V0, Status st) {
    CurvatureField f = curvature_fields(p, cfg.rho_floor);
    FlowState s;
    s.profile = p;
    s.h = cfg.mode == Mode::PlainMcf ? 0.0 : averaged_mean_curvature(f, p);
    s.V0 = V0;
    s.status = st;
    s.diag = make_diag(p, f);
    return s;
}

}  // namespace

double averaged_h(const RadialProfile& profile) {
    const CurvatureField f = curvature_fields(profile);
    return averaged_mean_curvature(f, profile);
}

std::vector<double> profile_time_derivative(const RadialProfile& profile, double h) {
    const std::size_t m = profile.rho.size();
    std::vector<double> d1(m), d2(m), out(m);
    kernels::derivatives(profile.rho, profile.grid.dx(), d1, d2);
    kernels::flow_rhs(profile.rho, d1, d2, profile.grid.dim, h, out);
    return out;
}

FlowState make_state(const RadialProfile& initial, const FlowConfig& config) {
    initial.validate();
    config.validate();
    return snapshot(initial, config, enclosed_volume(initial), Status::Running);
}

double adaptive_dt(const FlowState& state, const FlowConfig& config) {
    const GridSpec& g = state.profile.grid;
    const std::size_t m = state.profile.rho.size();
    std::vector<double> d1(m), d2(m);
    kernels::derivatives(state.profile.rho, g.dx(), d1, d2);
    double min_v2 = 1.0 + d1[0] * d1[0];
    for (double s : d1) min_v2 = std::min(min_v2, 1.0 + s * s);
    const double rmin = kernels::min_value(state.profile.rho);
    const double diffusion = g.dx() * g.dx() * min_v2 / 2.0;
    const double reaction = rmin * rmin / (4.0 * (g.dim - 1));
    const double remaining = config.t_end - state.t();
    return config.dt_safety * std::min({diffusion, reaction, remaining});
}

FlowState step(const FlowState& state, double dt, const FlowConfig& config) {
    Stepper st(state.profile.grid, config, state.V0);
    RadialProfile p = state.profile;
    const Status outcome = st.advance(p.rho, dt);
    if (outcome != Status::Running) {
        FlowState failed = state;
        failed.status = outcome;
        return failed;
    }
    p.time = state.profile.time + dt;
    return snapshot(p, config, state.V0, Status::Running);
}

Trajectory run(const RadialProfile& initial, const FlowConfig& config) {
    initial.validate();
    config.validate();

    FlowConfig cfg = config;
    {
        const CurvatureField f0 = curvature_fields(initial, cfg.rho_floor);
        if (cfg.stop_rho_min < 0.0)
            cfg.stop_rho_min = 1e-3 * kernels::min_value(initial.rho);
        if (cfg.stop_A2_max < 0.0) cfg.stop_A2_max = 1e8 * kernels::max_value(f0.A2);
    }

    Trajectory traj;
    traj.config = cfg;

    RadialProfile p = initial;
    const double V0 = enclosed_volume(p);
    Stepper st(p.grid, cfg, V0);

    Status status = Status::Running;
    long long steps = 0;
    bool last_recorded = true;

    traj.states.push_back(snapshot(p, cfg, V0, Status::Running));

    while (status == Status::Running) {
        if (cfg.t_end - p.time <= std::max(1e-14, 1e-12 * cfg.t_end)) {
            status = Status::ReachedTEnd;
            break;
        }
        // dt per the published formula, reusing the stepper workspace
        kernels::derivatives(p.rho, p.grid.dx(), st.d1, st.d2);
        double min_v2 = 1.0;
        for (double s : st.d1) min_v2 = std::min(min_v2, 1.0 + s * s);
        const double rmin_now = kernels::min_value(p.rho);
        const double dt =
            cfg.dt_safety * std::min({p.grid.dx() * p.grid.dx() * min_v2 / 2.0,
                                      rmin_now * rmin_now / (4.0 * (p.grid.dim - 1)),
                                      cfg.t_end - p.time});
        if (dt < kMinDt) {
            status = Status::StepUnderflow;
            break;
        }

        const Status outcome = st.advance(p.rho, dt);
        if (outcome != Status::Running) {
            status = outcome;  // p unchanged; previous state is the final one
            break;
        }
        p.time += dt;
        ++steps;

        // post-step stopping checks need |A|^2 of the fresh profile
        kernels::derivatives(p.rho, p.grid.dx(), st.d1, st.d2);
        kernels::curvature(p.rho, st.d1, st.d2, p.grid.dim,
                           {st.num, st.den, st.k1, st.k2, st.k3, st.k4, st.tmp});
        const double max_A2 = kernels::max_value(st.k4);  // A2 slot of the view
        const double min_rho = kernels::min_value(p.rho);
        if (min_rho <= cfg.stop_rho_min)
            status = Status::AxisContact;
        else if (max_A2 >= cfg.stop_A2_max || !std::isfinite(max_A2))
            status = Status::CurvatureBlowup;

        last_recorded = false;
        if (steps % cfg.output_every == 0 || status != Status::Running) {
            traj.states.push_back(snapshot(p, cfg, V0, status));
            last_recorded = true;
        }
    }

    if (!last_recorded || traj.states.back().t() < p.time) {
        traj.states.push_back(snapshot(p, cfg, V0, status));
    }
    traj.states.back().status = status;
    traj.final_status = status;
    traj.total_steps = steps;
    return traj;
}

}  // namespace vpmcf::flow
