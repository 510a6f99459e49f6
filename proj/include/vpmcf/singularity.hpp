#pragma once

#include <span>
#include <string>
#include <vector>

#include "vpmcf/flow.hpp"
#include "vpmcf/profile.hpp"

namespace vpmcf::singularity {

enum class Classification { TypeI, Inconclusive, TypeIISuspect };

std::string to_string(Classification c);

// Affine fit of u(t) = 1/max|A|^2(t): under the type-I ansatz
// max|A|^2 = C/(T-t) the series u is affine with slope -1/C and
// intercept T/C.
struct BlowupFit {
    double T_est = 0.0;
    double C_est = 0.0;
    double r2 = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
    int n_points = 0;
    Classification cls = Classification::Inconclusive;
};

// Window rule: recorded states with max|A|^2 > 10 x the value at the first
// sample (the trajectory's initial state). Throws InsufficientBlowupData if
// fewer than 10 states qualify.
BlowupFit fit_type1(const flow::Trajectory& traj);
BlowupFit fit_type1_series(std::span<const double> t, std::span<const double> max_A2,
                           double initial_max_A2);

inline constexpr double kDefaultRescaleHalfWidth = 5.0;

// Zoom (x, rho) -> (alpha (x - center), alpha rho), resampled by linear
// interpolation onto a uniform grid over [-half_width, half_width] clipped
// to the image of [a,b]. Throws EmptyWindow when the window covers fewer
// than 8 source-grid intervals.
RadialProfile rescale_profile(const RadialProfile& p, double center_x, double alpha,
                              double half_width = kDefaultRescaleHalfWidth);
RadialProfile rescale(const flow::FlowState& state, double center_x, double alpha,
                      double half_width = kDefaultRescaleHalfWidth);

// Default zoom of a near-singular state: center = argmin rho,
// alpha = 1/min rho.
RadialProfile rescale_auto(const flow::FlowState& state,
                           double half_width = kDefaultRescaleHalfWidth);

// Cylinder template: r = mean(rho), residual = RMS deviation / min rho.
std::pair<double, double> fit_cylinder(const RadialProfile& p);

// Catenoid template rho = c5 cosh((x - x0)/c5) centered at the interior
// minimum; c5 searched over [min rho / 2, 2 min rho]. Throws
// NoInteriorMinimum when rho has no strict interior minimum.
std::pair<double, double> fit_catenoid(const RadialProfile& p);

struct TemplateFit {
    double cyl_r = 0, cyl_resid = 0;
    double cat_c5 = 0, cat_resid = 0;  // NaN when catenoid_ok is false
    bool catenoid_ok = false;
};

TemplateFit fit_templates(const RadialProfile& p);

// Region decomposition of one state:
//   breve  = { H <= c2_obs/2 }   (hat = complement)
//   flat   = { |k|/p <= sqrt(c00/(2(c00-1))) }   (sharp = complement)
// Ties go to the closed lower region.
struct RegionMask {
    std::vector<bool> in_breve;  // in_hat = !in_breve
    std::vector<bool> in_flat;   // in_sharp = !in_flat
    double c2_obs = 0, c00 = 0;
    double frac_breve = 0, frac_sharp = 0;
    double min_y_breve = 0;            // NaN when breve empty
    double max_v_sharp = 0;            // NaN when sharp empty
    double boundary_height_flat = 0;   // min y adjacent to the flat/sharp interface; NaN if none
    double max_abs_kp_Hpos = 0;        // max |k|/p over nodes with H >= 0; NaN if none
};

RegionMask classify_from_field(const CurvatureField& field, const RadialProfile& profile,
                               double c2_obs, double c00 = 4.0);
RegionMask classify_regions(const flow::FlowState& state, double c2_obs, double c00 = 4.0);

}  // namespace vpmcf::singularity
