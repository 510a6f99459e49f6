#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "vpmcf/csv.hpp"
#include "vpmcf/harness.hpp"
#include "vpmcf/monitors.hpp"
#include "vpmcf/singularity.hpp"
#include "vpmcf/sturm.hpp"
#include "vpmcf/svg.hpp"

namespace vpmcf::harness {

namespace fs = std::filesystem;

std::string resolve_out_dir(const SimConfig& config) {
    if (const char* env = std::getenv("VPMCF_OUT"); env && *env) return env;
    return config.out_dir;
}

namespace {

std::string join_semicolon(const std::vector<double>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ';';
        s += csv::format_double(xs[i]);
    }
    return s;
}

void write_census_csv(const std::string& path, const flow::Trajectory& traj,
                      double census_tol) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("write_census_csv: cannot open " + path);
    out << "t,zeros_d1,zeros_d2,zeros_H,neck_positions,multiplicity_flag_count\n";
    for (const auto& s : traj.states) {
        const auto c = sturm::zero_census(s, census_tol);
        int flags = 0;
        for (bool b : c.multiplicity_flags) flags += b ? 1 : 0;
        out << csv::format_double(c.t) << ',' << c.zeros_d1 << ',' << c.zeros_d2 << ','
            << c.zeros_H << ',' << join_semicolon(c.necks) << ',' << flags << '\n';
    }
}

void write_fit_txt(const std::string& path, const flow::Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("write_fit_txt: cannot open " + path);
    try {
        const auto fit = singularity::fit_type1(traj);
        out << "T_est = " << csv::format_double(fit.T_est) << '\n';
        out << "C_est = " << csv::format_double(fit.C_est) << '\n';
        out << "r2 = " << csv::format_double(fit.r2) << '\n';
        out << "classification = " << singularity::to_string(fit.cls) << '\n';
        out << "window = (" << csv::format_double(fit.window_lo) << ", "
            << csv::format_double(fit.window_hi) << ")\n";
        out << "n_points = " << fit.n_points << '\n';
    } catch (const InsufficientBlowupData& e) {
        out << "classification = insufficient_data\n";
        out << "note = " << e.what() << '\n';
    }
}

}  // namespace

void write_timeseries(const std::string& path, const flow::Trajectory& traj,
                      double census_tol, double c00) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("write_timeseries: cannot open " + path);
    out << "t,h,volume,area,min_rho,max_A2,max_v,max_vy,max_H,min_H,"
           "zeros_d1,zeros_d2,zeros_H,neck_positions,status,"
           "frac_breve,frac_sharp,min_y_breve,max_v_sharp,boundary_height_flat\n";

    const bool vp = traj.config.mode == flow::Mode::VolumePreserving;
    double c2_obs = traj.states.empty() ? 0.0 : traj.states.front().h;
    const double nan = std::nan("");

    for (const auto& s : traj.states) {
        c2_obs = std::min(c2_obs, s.h);
        const auto c = sturm::zero_census(s, census_tol);

        double frac_breve = nan, frac_sharp = nan, min_y_breve = nan, max_v_sharp = nan,
               bhf = nan;
        if (vp && c2_obs > 0.0) {
            const auto mask = singularity::classify_regions(s, c2_obs, c00);
            frac_breve = mask.frac_breve;
            frac_sharp = mask.frac_sharp;
            min_y_breve = mask.min_y_breve;
            max_v_sharp = mask.max_v_sharp;
            bhf = mask.boundary_height_flat;
        }

        out << csv::format_double(s.t()) << ',' << csv::format_double(s.h) << ','
            << csv::format_double(s.diag.volume) << ',' << csv::format_double(s.diag.area)
            << ',' << csv::format_double(s.diag.min_rho) << ','
            << csv::format_double(s.diag.max_A2) << ',' << csv::format_double(s.diag.max_v)
            << ',' << csv::format_double(s.diag.max_vy) << ','
            << csv::format_double(s.diag.max_H) << ',' << csv::format_double(s.diag.min_H)
            << ',' << c.zeros_d1 << ',' << c.zeros_d2 << ',' << c.zeros_H << ','
            << join_semicolon(c.necks) << ',' << flow::to_string(s.status) << ','
            << csv::format_double(frac_breve) << ',' << csv::format_double(frac_sharp) << ','
            << csv::format_double(min_y_breve) << ',' << csv::format_double(max_v_sharp)
            << ',' << csv::format_double(bhf) << '\n';
    }
}

int run_and_write(const SimConfig& config, bool strict) {
    const RadialProfile initial = make_initial(config);
    const flow::Trajectory traj = flow::run(initial, config.flow);

    const fs::path dir = resolve_out_dir(config);
    fs::create_directories(dir / "snapshots");

    write_timeseries((dir / "timeseries.csv").string(), traj, config.census_tol, config.c00);
    write_census_csv((dir / "census.csv").string(), traj, config.census_tol);

    for (std::size_t j = 0; j < traj.states.size(); j += config.snapshot_stride) {
        char name[32];
        std::snprintf(name, sizeof name, "%04zu", j);
        const auto& s = traj.states[j];
        const CurvatureField f = curvature_fields(s.profile);
        csv::write_snapshot((dir / "snapshots" / (std::string(name) + ".csv")).string(),
                            s.profile, f);
        if (config.svg)
            svg::write_profile_svg((dir / "snapshots" / (std::string(name) + ".svg")).string(),
                                   s.profile);
    }

    MonitorOptions mopt;
    mopt.c00 = config.c00;
    mopt.census_tol = config.census_tol;
    mopt.enabled = config.monitors;
    std::vector<MonitorReport> reports;
    if (!config.monitors_none) reports = evaluate_monitors(traj, mopt);
    write_monitor_report((dir / "monitors.txt").string(), reports);

    const bool singular = traj.final_status == flow::Status::AxisContact ||
                          traj.final_status == flow::Status::CurvatureBlowup ||
                          traj.final_status == flow::Status::StepUnderflow;
    if (singular) write_fit_txt((dir / "fit.txt").string(), traj);

    if (strict && any_failed(reports)) return 2;
    return 0;
}

}  // namespace vpmcf::harness
