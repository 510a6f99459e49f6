#include "vpmcf/sturm.hpp"

#include <algorithm>
#include <cmath>

#include "vpmcf/kernels.hpp"

namespace vpmcf::sturm {

int sign_change_count(std::span<const double> values, double tol) {
    int count = 0;
    int last_sign = 0;
    for (double v : values) {
        if (std::fabs(v) < tol || v == 0.0) continue;  // clamped sample
        const int s = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++count;
        last_sign = s;
    }
    return count;
}

namespace {

struct Crossing {
    double x;
    bool multiple;
};

// Sign changes of the interior slice of `f` with interpolated locations.
std::vector<Crossing> crossings(std::span<const double> f, const GridSpec& g, double tol_abs,
                                double tol_rel) {
    std::vector<Crossing> out;
    const double dx = g.dx();

    // discrete-derivative scale for the multiplicity heuristic
    double dscale = 0.0;
    for (int i = 2; i < g.N; ++i) dscale = std::max(dscale, std::fabs(f[i] - f[i - 1]) / dx);

    int last_idx = -1;
    int last_sign = 0;
    for (int i = 1; i < g.N; ++i) {
        if (std::fabs(f[i]) < tol_abs || f[i] == 0.0) continue;
        const int s = f[i] > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) {
            const double x0 = g.node(last_idx), x1 = g.node(i);
            const double f0 = f[last_idx], f1 = f[i];
            const double x = x0 + (0.0 - f0) * (x1 - x0) / (f1 - f0);
            const double slope = std::fabs(f1 - f0) / (x1 - x0);
            const bool multiple = std::min(std::fabs(f0), std::fabs(f1)) < tol_abs &&
                                  slope < tol_rel * dscale;
            out.push_back({x, multiple});
        }
        last_sign = s;
        last_idx = i;
    }
    return out;
}

std::vector<double> neck_positions(const RadialProfile& p) {
    std::vector<double> necks;
    const auto& r = p.rho;
    const int N = p.grid.N;
    if (r[0] < r[1]) necks.push_back(p.grid.node(0));  // mirror makes it strict
    for (int i = 1; i < N; ++i)
        if (r[i] < r[i - 1] && r[i] < r[i + 1]) necks.push_back(p.grid.node(i));
    if (r[N] < r[N - 1]) necks.push_back(p.grid.node(N));
    return necks;
}

std::span<const double> interior(const std::vector<double>& a, int N) {
    return {a.data() + 1, (std::size_t)(N - 1)};
}

}  // namespace

ZeroCensus zero_census(const flow::FlowState& state, double tol_rel) {
    const CurvatureField f = curvature_fields(state.profile);
    const GridSpec& g = state.profile.grid;

    ZeroCensus c;
    c.t = state.t();

    auto count_of = [&](const std::vector<double>& a) {
        const auto slice = interior(a, g.N);
        return sign_change_count(slice, tol_rel * kernels::max_abs(slice));
    };
    c.zeros_d1 = count_of(f.d1);
    c.zeros_d2 = count_of(f.d2);
    // H stands in for the paper's H/p: p > 0 on a valid profile, so the zero
    // sets coincide and H avoids the cancellation as p blows up.
    c.zeros_H = count_of(f.H);

    const double d2tol = tol_rel * kernels::max_abs(interior(f.d2, g.N));
    for (const Crossing& cr : crossings(f.d2, g, d2tol, tol_rel)) {
        c.zero_locations_d2.push_back(cr.x);
        c.multiplicity_flags.push_back(cr.multiple);
    }
    c.necks = neck_positions(state.profile);
    return c;
}

std::vector<ZeroCensus> census_trajectory(const flow::Trajectory& traj, double tol_rel) {
    std::vector<ZeroCensus> out;
    out.reserve(traj.states.size());
    for (const auto& s : traj.states) out.push_back(zero_census(s, tol_rel));
    return out;
}

std::vector<MonotonicityViolation> monotonicity_report(const flow::Trajectory& traj,
                                                       double tol_rel) {
    std::vector<MonotonicityViolation> out;
    if (traj.states.size() < 2) return out;
    const auto censuses = census_trajectory(traj, tol_rel);

    const char* names[3] = {"d1", "d2", "H"};
    for (int qi = 0; qi < 3; ++qi) {
        std::vector<int> raw(censuses.size());
        for (std::size_t j = 0; j < censuses.size(); ++j) {
            const ZeroCensus& c = censuses[j];
            raw[j] = qi == 0 ? c.zeros_d1 : qi == 1 ? c.zeros_d2 : c.zeros_H;
        }
        // hysteresis: a count must hold for two consecutive states
        std::vector<int> persistent(raw.size() - 1);
        for (std::size_t j = 0; j + 1 < raw.size(); ++j)
            persistent[j] = std::min(raw[j], raw[j + 1]);
        for (std::size_t j = 1; j < persistent.size(); ++j) {
            if (persistent[j] > persistent[j - 1]) {
                out.push_back({names[qi], traj.states[j].t(), persistent[j - 1], persistent[j]});
            }
        }
    }
    return out;
}

std::vector<NeckSeries> neck_convergence(const flow::Trajectory& traj, double tol_rel) {
    std::vector<NeckSeries> series;
    if (traj.states.empty()) return series;
    const double dx = traj.states.front().profile.grid.dx();
    const double cutoff = 5.0 * dx;
    (void)tol_rel;

    std::vector<int> active;  // indices into series, sorted by last position
    for (const auto& state : traj.states) {
        const auto necks = neck_positions(state.profile);
        std::vector<int> next_active;
        std::vector<bool> taken(necks.size(), false);

        for (int si : active) {
            NeckSeries& s = series[si];
            const double last = s.x.back();
            int best = -1;
            double best_d = cutoff;
            for (std::size_t ni = 0; ni < necks.size(); ++ni) {
                if (taken[ni]) continue;
                const double d = std::fabs(necks[ni] - last);
                if (d <= best_d) {
                    best_d = d;
                    best = (int)ni;
                }
            }
            if (best >= 0) {
                taken[best] = true;
                s.t.push_back(state.t());
                s.x.push_back(necks[best]);
                next_active.push_back(si);
            } else {
                s.tracking_lost = true;
            }
        }
        for (std::size_t ni = 0; ni < necks.size(); ++ni) {
            if (taken[ni]) continue;
            NeckSeries s;
            s.t.push_back(state.t());
            s.x.push_back(necks[ni]);
            series.push_back(std::move(s));
            next_active.push_back((int)series.size() - 1);
        }
        active = std::move(next_active);
    }

    for (NeckSeries& s : series) {
        const std::size_t n = s.x.size();
        const std::size_t q0 = n - std::max<std::size_t>(1, n / 4);
        double lo = s.x[q0], hi = s.x[q0];
        for (std::size_t j = q0; j < n; ++j) {
            lo = std::min(lo, s.x[j]);
            hi = std::max(hi, s.x[j]);
        }
        s.converged = (hi - lo) < 3.0 * dx;
    }
    return series;
}

}  // namespace vpmcf::sturm
