#pragma once

#include <span>
#include <string>
#include <vector>

#include "vpmcf/flow.hpp"

namespace vpmcf::sturm {

inline constexpr double kDefaultCensusTol = 1e-8;  // relative to max |field|

// Sign-change census of one recorded state. Sign changes are counted over
// interior nodes; necks (strict local minima of rho) may sit at the
// endpoints via the Neumann mirror.
struct ZeroCensus {
    double t = 0.0;
    int zeros_d1 = 0;
    int zeros_d2 = 0;
    int zeros_H = 0;
    std::vector<double> zero_locations_d2;   // linear interpolation of sign changes
    std::vector<bool> multiplicity_flags;    // parallel to zero_locations_d2
    std::vector<double> necks;               // sorted x positions
};

// Counts pairs of opposite sign after clamping |values| < tol to zero; a run
// of clamped samples between opposite signs is one change, between equal
// signs none.
int sign_change_count(std::span<const double> values, double tol);

ZeroCensus zero_census(const flow::FlowState& state, double tol_rel = kDefaultCensusTol);

std::vector<ZeroCensus> census_trajectory(const flow::Trajectory& traj,
                                          double tol_rel = kDefaultCensusTol);

struct MonotonicityViolation {
    std::string quantity;  // "d1", "d2", "H"
    double t;
    int from, to;
};

// Times where a zero count strictly increases. Hysteresis: a count only
// enters the comparison once it persists for two consecutive recorded
// states, which suppresses single-state roundoff flicker.
std::vector<MonotonicityViolation> monotonicity_report(const flow::Trajectory& traj,
                                                       double tol_rel = kDefaultCensusTol);

struct NeckSeries {
    std::vector<double> t;
    std::vector<double> x;
    bool converged = false;      // last-quartile position diameter < 3 dx
    bool tracking_lost = false;  // series ended before the final state
};

// Matches necks across consecutive censuses by nearest position with cutoff
// 5 dx.
std::vector<NeckSeries> neck_convergence(const flow::Trajectory& traj,
                                         double tol_rel = kDefaultCensusTol);

}  // namespace vpmcf::sturm
