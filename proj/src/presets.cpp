#include <cmath>
#include <numbers>

#include "vpmcf/csv.hpp"
#include "vpmcf/harness.hpp"

namespace vpmcf::harness {

RadialProfile make_cylinder(const GridSpec& grid, double r) {
    grid.validate();
    if (!(r > 0.0)) throw InvalidArgument("make_cylinder: r must be > 0");
    RadialProfile p;
    p.grid = grid;
    p.rho.assign(grid.nodes(), r);
    return p;
}

RadialProfile make_perturbed(const GridSpec& grid, double r, double amp, int modes) {
    grid.validate();
    if (!(r > 0.0)) throw InvalidArgument("make_perturbed: r must be > 0");
    if (!(std::fabs(amp) < r))
        throw InvalidArgument("make_perturbed: need |amp| < r for positivity");
    if (modes < 1) throw InvalidArgument("make_perturbed: modes must be >= 1");
    RadialProfile p;
    p.grid = grid;
    p.rho.resize(grid.nodes());
    const double w = 2.0 * std::numbers::pi * modes / (grid.b - grid.a);
    for (int i = 0; i <= grid.N; ++i)
        p.rho[i] = r + amp * std::cos(w * (grid.node(i) - grid.a));
    return p;
}

RadialProfile make_dumbbell(const GridSpec& grid, double r, double amp) {
    return make_perturbed(grid, r, amp, 1);
}

RadialProfile make_initial(const SimConfig& config) {
    switch (config.initial) {
        case InitialKind::Cylinder: return make_cylinder(config.grid, config.init_r);
        case InitialKind::Perturbed:
            return make_perturbed(config.grid, config.init_r, config.init_amp,
                                  config.init_modes);
        case InitialKind::Dumbbell:
            return make_dumbbell(config.grid, config.init_r, config.init_amp);
        case InitialKind::FromFile: return csv::read_profile(config.init_path, config.grid.dim);
    }
    throw InvalidArgument("make_initial: unreachable");
}

}  // namespace vpmcf::harness
