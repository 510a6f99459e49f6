#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vpmcf/errors.hpp"

namespace vpmcf {

// Uniform grid on [a,b] with N intervals; the generating curve rotates to a
// dim-dimensional hypersurface in (dim+1)-space.
struct GridSpec {
    double a = 0.0;
    double b = 1.0;
    int N = 200;
    int dim = 2;

    double dx() const { return (b - a) / N; }
    int nodes() const { return N + 1; }
    double node(int i) const { return a + i * dx(); }
    void validate() const;
};

// Sampled generating curve. Neumann boundary conditions are built into every
// stencil via mirror ghosts, so rho'(a) = rho'(b) = 0 holds exactly.
struct RadialProfile {
    GridSpec grid;
    std::vector<double> rho;
    double time = 0.0;

    void validate() const;  // grid valid, size match, rho > 0 everywhere
};

// Per-node geometric quantities of the surface of revolution.
//   y = rho, v = sqrt(1+rho'^2), p = 1/(y v), q = -rho'/(y v),
//   k = -rho''/v^3, H = k + (dim-1)p, A2 = k^2 + (dim-1)p^2,
//   C3 = k^3 + (dim-1)p^3.
// q uses the outward normal of the solid of revolution.
struct CurvatureField {
    std::vector<double> d1, d2, y, v, p, q, k, H, A2, C3;
    std::size_t size() const { return y.size(); }
};

inline constexpr double kDefaultRhoFloor = 1e-12;

// Surface area of the unit (n-1)-sphere in R^n, omega_{n-1} = 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

// Centered 2nd-order differences; exact zeros of d1 at the endpoints.
std::pair<std::vector<double>, std::vector<double>> derivatives(const RadialProfile& profile);

// Throws AxisContact if any rho <= rho_floor.
CurvatureField curvature_fields(const RadialProfile& profile, double rho_floor = kDefaultRhoFloor);

// (omega_{dim-1}/dim) * integral of rho^dim, composite Simpson.
// Throws OddIntervalCount when N is odd.
double enclosed_volume(const RadialProfile& profile);

// omega_{dim-1} * integral of rho^{dim-1} v, same quadrature.
double surface_area(const RadialProfile& profile);

// integral(H rho^{dim-1} v) / integral(rho^{dim-1} v); the sphere factors cancel.
double averaged_mean_curvature(const CurvatureField& field, const RadialProfile& profile);

}  // namespace vpmcf
