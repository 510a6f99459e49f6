#pragma once

#include <cstddef>
#include <span>

// Data-parallel node kernels. Every kernel has a serial reference
// implementation and an OpenMP one; the two are bit-identical by
// construction. Sums use a fixed chunk decomposition (partial sums per
// 1024-node chunk, combined in chunk order), so the result does not
// depend on the thread count. Min/max/finite scans are exact reductions
// and need no such care.

namespace vpmcf::kernels {

enum class Exec {
    Serial,    // reference path, always available
    Parallel,  // force the OpenMP path (falls back to serial without OpenMP)
    Auto,      // parallel for large arrays only
};

void set_exec(Exec e) noexcept;
Exec exec() noexcept;

inline constexpr std::size_t kChunk = 1024;
// Below this the fork/join overhead dominates at typical grid sizes.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

bool use_parallel(std::size_t n) noexcept;

// ---- reductions -------------------------------------------------------

double sum_chunked(std::span<const double> x);
double min_value(std::span<const double> x);
double max_value(std::span<const double> x);
double max_abs(std::span<const double> x);
bool all_finite(std::span<const double> x);

// Composite Simpson rule over n = x.size()-1 intervals of width dx.
// Requires odd x.size() (even interval count); caller validates.
double simpson_sum(std::span<const double> x, double dx);

// ---- pointwise stencils and fields ------------------------------------

// Centered 2nd-order differences with Neumann mirror ghosts
// (rho[-1] = rho[1], rho[N+1] = rho[N-1]), so d1 vanishes exactly at the
// endpoints.
void derivatives(std::span<const double> rho, double dx,
                 std::span<double> d1, std::span<double> d2);

struct CurvatureView {
    std::span<double> v, p, q, k, H, A2, C3;
};

// v = sqrt(1+d1^2); p = 1/(rho v); q = -d1/(rho v); k = -d2/v^3;
// H = k + (dim-1)p; A2 = k^2 + (dim-1)p^2; C3 = k^3 + (dim-1)p^3.
void curvature(std::span<const double> rho, std::span<const double> d1,
               std::span<const double> d2, int dim, const CurvatureView& out);

// Graph-form flow speed: d2/(1+d1^2) - (dim-1)/rho + h*sqrt(1+d1^2).
void flow_rhs(std::span<const double> rho, std::span<const double> d1,
              std::span<const double> d2, int dim, double h,
              std::span<double> out);

// Integrands of the averaged mean curvature: den = rho^{dim-1} v,
// num = H rho^{dim-1} v.
void h_integrands(std::span<const double> rho, std::span<const double> d1,
                  std::span<const double> d2, int dim,
                  std::span<double> num, std::span<double> den);

void pow_dim(std::span<const double> rho, int dim, std::span<double> out);

// out = a + c*b
void axpy(std::span<const double> a, double c, std::span<const double> b,
          std::span<double> out);

// out = rho + dt/6 * (k1 + 2 k2 + 2 k3 + k4)
void rk4_combine(std::span<const double> rho, double dt,
                 std::span<const double> k1, std::span<const double> k2,
                 std::span<const double> k3, std::span<const double> k4,
                 std::span<double> out);

void scale_inplace(std::span<double> x, double s);

}  // namespace vpmcf::kernels
