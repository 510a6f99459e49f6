#include "vpmcf/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "vpmcf/csv.hpp"
#include "vpmcf/singularity.hpp"
#include "vpmcf/sturm.hpp"

namespace vpmcf::harness {

std::string to_string(MonitorStatus s) {
    switch (s) {
        case MonitorStatus::Pass: return "pass";
        case MonitorStatus::Fail: return "fail";
        case MonitorStatus::ObservedOnly: return "observed-only";
    }
    return "?";
}

namespace {

constexpr double kVyTol = 1e-3;
constexpr double kKpTol = 1e-3;
constexpr double kAreaTolRel = 1e-8;
constexpr double kBreveFloorFactor = 0.5;

bool wants(const MonitorOptions& o, const std::string& name) {
    return o.enabled.empty() ||
           std::find(o.enabled.begin(), o.enabled.end(), name) != o.enabled.end();
}

}  // namespace

std::vector<MonitorReport> evaluate_monitors(const flow::Trajectory& traj,
                                             const MonitorOptions& options) {
    std::vector<MonitorReport> out;
    const auto& states = traj.states;
    if (states.empty()) return out;
    const bool vp = traj.config.mode == flow::Mode::VolumePreserving;
    const std::size_t M = states.size();

    // prefix extrema of h: the observed stand-ins for the paper's c2, c3
    std::vector<double> c2_obs(M), c3_obs(M);
    {
        double lo = states[0].h, hi = states[0].h;
        for (std::size_t j = 0; j < M; ++j) {
            lo = std::min(lo, states[j].h);
            hi = std::max(hi, states[j].h);
            c2_obs[j] = lo;
            c3_obs[j] = hi;
        }
    }

    if (wants(options, "volume_drift")) {
        MonitorReport r;
        r.name = "volume_drift";
        r.tolerance = traj.config.volume_projection ? 1e-12 : traj.config.vol_tol;
        double worst = 0, wt = states[0].t();
        for (const auto& s : states) {
            const double drift = std::fabs(s.diag.volume - s.V0) / s.V0;
            if (drift > worst) {
                worst = drift;
                wt = s.t();
            }
        }
        r.worst_value = worst;
        r.worst_time = wt;
        if (vp)
            r.status = worst <= r.tolerance ? MonitorStatus::Pass : MonitorStatus::Fail;
        else {
            r.status = MonitorStatus::ObservedOnly;
            r.note = "plain_mcf does not conserve volume";
        }
        out.push_back(r);
    }

    if (wants(options, "area_monotone")) {
        MonitorReport r;
        r.name = "area_monotone";
        r.tolerance = kAreaTolRel * states[0].diag.area;
        double worst = -std::numeric_limits<double>::infinity(), wt = states[0].t();
        for (std::size_t j = 0; j + 1 < M; ++j) {
            const double inc = states[j + 1].diag.area - states[j].diag.area;
            if (inc > worst) {
                worst = inc;
                wt = states[j + 1].t();
            }
        }
        if (M < 2) worst = 0;
        r.worst_value = worst;
        r.worst_time = wt;
        r.status = worst <= r.tolerance ? MonitorStatus::Pass : MonitorStatus::Fail;
        out.push_back(r);
    }

    if (wants(options, "h_positive")) {
        MonitorReport r;
        r.name = "h_positive";
        r.tolerance = 0.0;
        double worst = states[0].h, wt = states[0].t();
        for (const auto& s : states)
            if (s.h < worst) {
                worst = s.h;
                wt = s.t();
            }
        r.worst_value = worst;
        r.worst_time = wt;
        if (vp)
            r.status = worst > 0.0 ? MonitorStatus::Pass : MonitorStatus::Fail;
        else {
            r.status = MonitorStatus::ObservedOnly;
            r.note = "h is identically 0 in plain_mcf mode";
        }
        out.push_back(r);
    }

    if (wants(options, "vy_growth_bound")) {
        MonitorReport r;
        r.name = "vy_growth_bound";
        r.tolerance = kVyTol;
        const double vy0 = states[0].diag.max_vy;
        double worst = -std::numeric_limits<double>::infinity(), wt = states[0].t();
        for (std::size_t j = 0; j < M; ++j) {
            const double excess =
                states[j].diag.max_vy - (vy0 + std::max(0.0, c3_obs[j]) * states[j].t());
            if (excess > worst) {
                worst = excess;
                wt = states[j].t();
            }
        }
        r.worst_value = worst;
        r.worst_time = wt;
        r.status = worst <= kVyTol ? MonitorStatus::Pass : MonitorStatus::Fail;
        out.push_back(r);
    }

    const bool need_fields = wants(options, "kp_bound") ||
                             wants(options, "breve_height_floor") ||
                             wants(options, "sharp_gradient_bound") ||
                             wants(options, "min_H_bound");

    double kp0 = 0, kp_worst = -std::numeric_limits<double>::infinity(), kp_time = 0;
    double breve_y0 = std::numeric_limits<double>::quiet_NaN();
    double breve_worst = std::numeric_limits<double>::infinity(), breve_time = 0;
    bool breve_seen = false;
    double sharp_sup = -std::numeric_limits<double>::infinity(), sharp_time = 0;
    bool sharp_seen = false;
    double minH = std::numeric_limits<double>::infinity(), minH_time = 0;

    if (need_fields) {
        for (std::size_t j = 0; j < M; ++j) {
            const auto& s = states[j];
            const CurvatureField f = curvature_fields(s.profile);

            double kp = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < f.size(); ++i)
                kp = std::max(kp, f.k[i] / f.p[i]);
            if (j == 0) kp0 = kp;
            if (kp > kp_worst) {
                kp_worst = kp;
                kp_time = s.t();
            }
            if (s.diag.min_H < minH) {
                minH = s.diag.min_H;
                minH_time = s.t();
            }

            if (vp && c2_obs[j] > 0.0) {
                const auto mask =
                    singularity::classify_from_field(f, s.profile, c2_obs[j], options.c00);
                if (!std::isnan(mask.min_y_breve)) {
                    if (!breve_seen) breve_y0 = mask.min_y_breve;  // first occupancy
                    if (!breve_seen || mask.min_y_breve < breve_worst) {
                        breve_worst = mask.min_y_breve;
                        breve_time = s.t();
                    }
                    breve_seen = true;
                }
                if (!std::isnan(mask.max_v_sharp)) {
                    if (!sharp_seen || mask.max_v_sharp > sharp_sup) {
                        sharp_sup = mask.max_v_sharp;
                        sharp_time = s.t();
                    }
                    sharp_seen = true;
                }
            }
        }
    }

    if (wants(options, "kp_bound")) {
        MonitorReport r;
        r.name = "kp_bound";
        r.tolerance = kKpTol;
        r.worst_value = kp_worst;
        r.worst_time = kp_time;
        const double bound = std::max(1.0, kp0) + kKpTol;
        r.status = kp_worst <= bound ? MonitorStatus::Pass : MonitorStatus::Fail;
        r.note = "bound max(1, initial max k/p) = " + csv::format_double(std::max(1.0, kp0));
        out.push_back(r);
    }

    if (wants(options, "min_H_bound")) {
        MonitorReport r;
        r.name = "min_H_bound";
        r.status = MonitorStatus::ObservedOnly;
        r.worst_value = std::sqrt(std::max(0.0, -minH));  // the observed constant C
        r.worst_time = minH_time;
        r.tolerance = 0.0;
        r.note = "min H = " + csv::format_double(minH) + ", C = sqrt(max(0,-min H))";
        out.push_back(r);
    }

    if (wants(options, "breve_height_floor")) {
        MonitorReport r;
        r.name = "breve_height_floor";
        r.worst_value = breve_seen ? breve_worst : std::numeric_limits<double>::quiet_NaN();
        r.worst_time = breve_time;
        if (!vp) {
            r.status = MonitorStatus::ObservedOnly;
            r.note = "region needs the volume-preserving h";
        } else if (!breve_seen || std::isnan(breve_y0)) {
            r.status = MonitorStatus::Pass;
            r.note = "breve region empty (H > c2_obs/2 everywhere)";
            r.tolerance = 0.0;
        } else {
            r.tolerance = kBreveFloorFactor * breve_y0;
            r.status = breve_worst >= r.tolerance ? MonitorStatus::Pass : MonitorStatus::Fail;
        }
        out.push_back(r);
    }

    if (wants(options, "sturm_monotone")) {
        MonitorReport r;
        r.name = "sturm_monotone";
        const auto violations = sturm::monotonicity_report(traj, options.census_tol);
        r.worst_value = (double)violations.size();
        r.worst_time = violations.empty() ? states.back().t() : violations.front().t;
        r.tolerance = 0.0;
        r.status = violations.empty() ? MonitorStatus::Pass : MonitorStatus::Fail;
        if (!violations.empty())
            r.note = "first: zeros_" + violations.front().quantity + " " +
                     std::to_string(violations.front().from) + "->" +
                     std::to_string(violations.front().to);
        out.push_back(r);
    }

    if (wants(options, "sharp_gradient_bound")) {
        MonitorReport r;
        r.name = "sharp_gradient_bound";
        r.status = MonitorStatus::ObservedOnly;
        r.worst_value = sharp_seen ? sharp_sup : std::numeric_limits<double>::quiet_NaN();
        r.worst_time = sharp_time;
        r.tolerance = 0.0;
        r.note = sharp_seen ? "sup of v over the sharp region" : "sharp region always empty";
        out.push_back(r);
    }

    return out;
}

bool any_failed(const std::vector<MonitorReport>& reports) {
    for (const auto& r : reports)
        if (r.status == MonitorStatus::Fail) return true;
    return false;
}

void write_monitor_report(const std::string& path, const std::vector<MonitorReport>& reports) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("write_monitor_report: cannot open " + path);
    out << "name status worst_value worst_time tolerance note\n";
    for (const auto& r : reports) {
        out << r.name << ' ' << to_string(r.status) << ' ' << csv::format_double(r.worst_value)
            << ' ' << csv::format_double(r.worst_time) << ' '
            << csv::format_double(r.tolerance) << ' '
            << (r.note.empty() ? "-" : r.note) << '\n';
    }
}

}  // namespace vpmcf::harness
