#include "vpmcf/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

#ifdef VPMCF_HAVE_OPENMP
#include <omp.h>
#endif

namespace vpmcf::kernels {

namespace {
std::atomic<Exec> g_exec{Exec::Auto};
}

void set_exec(Exec e) noexcept { g_exec.store(e, std::memory_order_relaxed); }
Exec exec() noexcept { return g_exec.load(std::memory_order_relaxed); }

bool use_parallel(std::size_t n) noexcept {
#ifdef VPMCF_HAVE_OPENMP
    switch (exec()) {
        case Exec::Serial: return false;
        case Exec::Parallel: return true;
        case Exec::Auto: return n >= kParallelThreshold;
    }
#endif
    (void)n;
    return false;
}

// ---- reductions -------------------------------------------------------

namespace {

inline double chunk_sum(const double* x, std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += x[i];
    return s;
}

}  // namespace

double sum_chunked(std::span<const double> x) {
    const std::size_t n = x.size();
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    if (nchunks <= 1) return chunk_sum(x.data(), 0, n);

    std::vector<double> partial(nchunks);
    if (use_parallel(n)) {
#ifdef VPMCF_HAVE_OPENMP
#pragma omp parallel for schedule(static)
        for (long long c = 0; c < (long long)nchunks; ++c) {
            const std::size_t lo = (std::size_t)c * kChunk;
            partial[c] = chunk_sum(x.data(), lo, std::min(lo + kChunk, n));
        }
#endif
    } else {
        for (std::size_t c = 0; c < nchunks; ++c) {
            const std::size_t lo = c * kChunk;
            partial[c] = chunk_sum(x.data(), lo, std::min(lo + kChunk, n));
        }
    }
    // combine in chunk order: the canonical result
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

double min_value(std::span<const double> x) {
    double m = x.empty() ? 0.0 : x[0];
    if (use_parallel(x.size())) {
#ifdef VPMCF_HAVE_OPENMP
#pragma omp parallel for reduction(min : m) schedule(static)
        for (long long i = 0; i < (long long)x.size(); ++i) m = std::min(m, x[i]);
#endif
    } else {
        for (double v : x) m = std::min(m, v);
    }
    return m;
}

double max_value(std::span<const double> x) {
    double m = x.empty() ? 0.0 : x[0];
    if (use_parallel(x.size())) {
#ifdef VPMCF_HAVE_OPENMP
#pragma omp parallel for reduction(max : m) schedule(static)
        for (long long i = 0; i < (long long)x.size(); ++i) m = std::max(m, x[i]);
#endif
    } else {
        for (double v : x) m = std::max(m, v);
    }
    return m;
}

double max_abs(std::span<const double> x) {
    double m = 0.0;
    if (use_parallel(x.size())) {
#ifdef VPMCF_HAVE_OPENMP
#pragma omp parallel for reduction(max : m) schedule(static)
        for (long long i = 0; i < (long long)x.size(); ++i) m = std::max(m, std::fabs(x[i]));
#endif
    } else {
        for (double v : x) m = std::max(m, std::fabs(v));
    }
    return m;
}

bool all_finite(std::span<const double> x) {
    int bad = 0;
    if (use_parallel(x.size())) {
#ifdef VPMCF_HAVE_OPENMP
#pragma omp parallel for reduction(| : bad) schedule(static)
        for (long long i = 0; i < (long long)x.size(); ++i)
            bad |= std::isfinite(x[i]) ? 0 : 1;
#endif
    } else {
        for (double v : x)
            if (!std::isfinite(v)) return false;
    }
    return bad == 0;
}

double simpson_sum(std::span<const double> x, double dx) {
    const std::size_t m = x.size();
    const std::size_t n = m - 1;  // intervals, even by precondition
    const std::size_t nchunks = (m + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks);

    auto weighted_chunk = [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, m);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            s += w * x[i];
        }
        return s;
    };

    if (use_parallel(m)) {
#ifdef VPMCF_HAVE_OPENMP
#pragma omp parallel for schedule(static)
        for (long long c = 0; c < (long long)nchunks; ++c) partial[c] = weighted_chunk(c);
#endif
    } else {
        for (std::size_t c = 0; c < nchunks; ++c) partial[c] = weighted_chunk(c);
    }
    double s = 0.0;
    for (double p : partial) s += p;
    return s * (dx / 3.0);
}

// ---- pointwise kernels --------------------------------------------------

namespace {

// mirror-ghost neighbor indices for node i on 0..N
inline std::size_t left_of(std::size_t i) { return i == 0 ? 1 : i - 1; }
inline std::size_t right_of(std::size_t i, std::size_t N) { return i == N ? N - 1 : i + 1; }

template <class F>
inline void for_each_node(std::size_t m, F&& body, bool parallel) {
    if (parallel) {
#ifdef VPMCF_HAVE_OPENMP
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < (long long)m; ++i) body((std::size_t)i);
#else
        for (std::size_t i = 0; i < m; ++i) body(i);
#endif
    } else {
        for (std::size_t i = 0; i < m; ++i) body(i);
    }
}

}  // namespace

void derivatives(std::span<const double> rho, double dx,
                 std::span<double> d1, std::span<double> d2) {
    const std::size_t m = rho.size();
    const std::size_t N = m - 1;
    const double inv2dx = 1.0 / (2.0 * dx);
    const double invdx2 = 1.0 / (dx * dx);
    for_each_node(
        m,
        [&](std::size_t i) {
            const double rl = rho[left_of(i)];
            const double rr = rho[right_of(i, N)];
            d1[i] = (i == 0 || i == N) ? 0.0 : (rr - rl) * inv2dx;
            d2[i] = (rr - 2.0 * rho[i] + rl) * invdx2;
        },
        use_parallel(m));
}

void curvature(std::span<const double> rho, std::span<const double> d1,
               std::span<const double> d2, int dim, const CurvatureView& out) {
    const std::size_t m = rho.size();
    const double nm1 = dim - 1;
    for_each_node(
        m,
        [&](std::size_t i) {
            const double s = d1[i];
            const double v = std::sqrt(1.0 + s * s);
            const double p = 1.0 / (rho[i] * v);
            const double k = -d2[i] / (v * v * v);
            out.v[i] = v;
            out.p[i] = p;
            out.q[i] = -s * p;
            out.k[i] = k;
            out.H[i] = k + nm1 * p;
            out.A2[i] = k * k + nm1 * p * p;
            out.C3[i] = k * k * k + nm1 * p * p * p;
        },
        use_parallel(m));
}

void flow_rhs(std::span<const double> rho, std::span<const double> d1,
              std::span<const double> d2, int dim, double h,
              std::span<double> out) {
    const std::size_t m = rho.size();
    const double nm1 = dim - 1;
    for_each_node(
        m,
        [&](std::size_t i) {
            const double s = d1[i];
            const double v2 = 1.0 + s * s;
            out[i] = d2[i] / v2 - nm1 / rho[i] + h * std::sqrt(v2);
        },
        use_parallel(m));
}

void h_integrands(std::span<const double> rho, std::span<const double> d1,
                  std::span<const double> d2, int dim,
                  std::span<double> num, std::span<double> den) {
    const std::size_t m = rho.size();
    const double nm1 = dim - 1;
    for_each_node(
        m,
        [&](std::size_t i) {
            const double s = d1[i];
            const double v = std::sqrt(1.0 + s * s);
            const double p = 1.0 / (rho[i] * v);
            const double H = -d2[i] / (v * v * v) + nm1 * p;
            double w = v;  // rho^{dim-1} * v
            for (int e = 1; e < dim; ++e) w *= rho[i];
            den[i] = w;
            num[i] = H * w;
        },
        use_parallel(m));
}

void pow_dim(std::span<const double> rho, int dim, std::span<double> out) {
    const std::size_t m = rho.size();
    for_each_node(
        m,
        [&](std::size_t i) {
            double w = rho[i];
            for (int e = 1; e < dim; ++e) w *= rho[i];
            out[i] = w;
        },
        use_parallel(m));
}

void axpy(std::span<const double> a, double c, std::span<const double> b,
          std::span<double> out) {
    const std::size_t m = a.size();
    for_each_node(m, [&](std::size_t i) { out[i] = a[i] + c * b[i]; }, use_parallel(m));
}

void rk4_combine(std::span<const double> rho, double dt,
                 std::span<const double> k1, std::span<const double> k2,
                 std::span<const double> k3, std::span<const double> k4,
                 std::span<double> out) {
    const std::size_t m = rho.size();
    const double c = dt / 6.0;
    for_each_node(
        m,
        [&](std::size_t i) {
            out[i] = rho[i] + c * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        },
        use_parallel(m));
}

void scale_inplace(std::span<double> x, double s) {
    const std::size_t m = x.size();
    for_each_node(m, [&](std::size_t i) { x[i] *= s; }, use_parallel(m));
}

}  // namespace vpmcf::kernels
