#pragma once

#include <span>
#include <vector>

#include "vpmcf/flow.hpp"
#include "vpmcf/profile.hpp"

namespace vpmcf::operators {

using ScalarField = std::vector<double>;

// Laplace–Beltrami operator of a rotationally symmetric scalar on the
// surface generated by the profile, in x1 coordinates:
//   Δf = f''/v^2 + f' [ (dim-1) rho'/(rho v^2) - rho' rho''/v^4 ].
// f gets the same Neumann mirror ghosts as rho.
ScalarField surface_laplacian(const RadialProfile& profile, std::span<const double> f);

enum class EvolvedQuantity { Y, H, V, P, Q, K };

const char* to_string(EvolvedQuantity q);

// Pointwise |LHS - RHS| of the selected intrinsic evolution equation at the
// middle state of a 3-state window (interior nodes; endpoints are 0).
//
// The solver evolves rho at fixed x1 while the equations follow normal
// motion, so the material time derivative is reconstructed as
//   (d/dt) f = (∂/∂t)|x1 f + (H-h)(rho'/v) f' ,
// the x1-drift of a normally-moving point being (H-h) rho'/v.
ScalarField evolution_residual(const RadialProfile& prev, const RadialProfile& mid,
                               const RadialProfile& next, double h_mid,
                               EvolvedQuantity q);

// Window form: requires >= 3 states (InsufficientHistory otherwise) and
// evaluates at the center state, index window.size()/2.
ScalarField evolution_residual(std::span<const flow::FlowState> window, EvolvedQuantity q);

}  // namespace vpmcf::operators
