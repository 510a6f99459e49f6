#include "vpmcf/profile.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vpmcf/kernels.hpp"

namespace vpmcf {

void GridSpec::validate() const {
    if (!(b > a)) throw InvalidArgument("GridSpec: requires b > a");
    if (N < 8) throw InvalidArgument("GridSpec: requires N >= 8");
    if (dim < 2) throw InvalidArgument("GridSpec: requires dim >= 2");
}

void RadialProfile::validate() const {
    grid.validate();
    if ((int)rho.size() != grid.nodes())
        throw InvalidArgument("RadialProfile: rho size does not match grid");
    for (double r : rho)
        if (!(r > 0.0)) throw InvalidArgument("RadialProfile: rho must be positive");
    if (!(time >= 0.0)) throw InvalidArgument("RadialProfile: time must be >= 0");
}

double unit_sphere_area(int n) {
    return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

std::pair<std::vector<double>, std::vector<double>> derivatives(const RadialProfile& profile) {
    const std::size_t m = profile.rho.size();
    std::vector<double> d1(m), d2(m);
    kernels::derivatives(profile.rho, profile.grid.dx(), d1, d2);
    return {std::move(d1), std::move(d2)};
}

CurvatureField curvature_fields(const RadialProfile& profile, double rho_floor) {
    const double rmin = kernels::min_value(profile.rho);
    if (!(rmin > rho_floor))
        throw AxisContact("curvature_fields: rho <= rho_floor (" + std::to_string(rmin) + ")");

    const std::size_t m = profile.rho.size();
    CurvatureField f;
    f.y = profile.rho;
    f.d1.resize(m);
    f.d2.resize(m);
    f.v.resize(m);
    f.p.resize(m);
    f.q.resize(m);
    f.k.resize(m);
    f.H.resize(m);
    f.A2.resize(m);
    f.C3.resize(m);
    kernels::derivatives(profile.rho, profile.grid.dx(), f.d1, f.d2);
    kernels::curvature(profile.rho, f.d1, f.d2, profile.grid.dim,
                       {f.v, f.p, f.q, f.k, f.H, f.A2, f.C3});
    return f;
}

namespace {
void require_even(const GridSpec& g, const char* who) {
    if (g.N % 2 != 0)
        throw OddIntervalCount(std::string(who) + ": Simpson quadrature needs even N, got N=" +
                               std::to_string(g.N));
}
}  // namespace

double enclosed_volume(const RadialProfile& profile) {
    require_even(profile.grid, "enclosed_volume");
    const std::size_t m = profile.rho.size();
    std::vector<double> integrand(m);
    kernels::pow_dim(profile.rho, profile.grid.dim, integrand);
    const double I = kernels::simpson_sum(integrand, profile.grid.dx());
    return unit_sphere_area(profile.grid.dim) / profile.grid.dim * I;
}

double surface_area(const RadialProfile& profile) {
    require_even(profile.grid, "surface_area");
    const std::size_t m = profile.rho.size();
    std::vector<double> d1(m), d2(m), num(m), den(m);
    kernels::derivatives(profile.rho, profile.grid.dx(), d1, d2);
    kernels::h_integrands(profile.rho, d1, d2, profile.grid.dim, num, den);
    return unit_sphere_area(profile.grid.dim) * kernels::simpson_sum(den, profile.grid.dx());
}

double averaged_mean_curvature(const CurvatureField& field, const RadialProfile& profile) {
    require_even(profile.grid, "averaged_mean_curvature");
    const std::size_t m = profile.rho.size();
    std::vector<double> num(m), den(m);
    for (std::size_t i = 0; i < m; ++i) {
        double w = field.v[i];
        for (int e = 1; e < profile.grid.dim; ++e) w *= profile.rho[i];
        den[i] = w;
        num[i] = field.H[i] * w;
    }
    const double dx = profile.grid.dx();
    return kernels::simpson_sum(num, dx) / kernels::simpson_sum(den, dx);
}

}  // namespace vpmcf
