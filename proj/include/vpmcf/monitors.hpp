#pragma once

#include <string>
#include <vector>

#include "vpmcf/flow.hpp"

namespace vpmcf::harness {

enum class MonitorStatus { Pass, Fail, ObservedOnly };

std::string to_string(MonitorStatus s);

struct MonitorReport {
    std::string name;
    MonitorStatus status = MonitorStatus::ObservedOnly;
    double worst_value = 0.0;
    double worst_time = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct MonitorOptions {
    double c00 = 4.0;
    double census_tol = 1e-8;
    std::vector<std::string> enabled;  // empty = the full default set
};

// Default monitor set, one report each:
//   volume_drift        |V-V0|/V0 (1e-12 with projection, vol_tol without)
//   area_monotone       per-recorded-step area increase <= 1e-8 rel
//   h_positive          min h > 0 (volume-preserving runs)
//   vy_growth_bound     max(vy)(t) <= max(vy)(0) + c3_obs t + 1e-3
//   kp_bound            max k/p <= max(1, initial max) + 1e-3
//   min_H_bound         observed constant C with min H >= -C^2
//   breve_height_floor  min y over { H <= c2_obs/2 } >= 0.5 x initial
//   sturm_monotone      zero censuses nonincreasing (hysteresis)
//   sharp_gradient_bound observed sup of v over the sharp region
std::vector<MonitorReport> evaluate_monitors(const flow::Trajectory& traj,
                                             const MonitorOptions& options);

bool any_failed(const std::vector<MonitorReport>& reports);

void write_monitor_report(const std::string& path, const std::vector<MonitorReport>& reports);

}  // namespace vpmcf::harness
