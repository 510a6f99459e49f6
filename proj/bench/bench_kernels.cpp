// Timing comparison of the serial reference kernels against the OpenMP
// variants across grid sizes, plus a bit-identity check of the results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "vpmcf/kernels.hpp"

using namespace vpmcf;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Case {
    std::vector<double> rho, d1, d2, out, num, den;
    double dx;
    explicit Case(std::size_t m) : rho(m), d1(m), d2(m), out(m), num(m), den(m), dx(1.0 / (m - 1)) {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> uni(0.5, 2.0);
        for (auto& r : rho) r = uni(rng);
    }
};

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

}  // namespace

int main() {
    std::printf("%-22s %10s %12s %12s %8s %s\n", "kernel", "nodes", "serial_us", "openmp_us",
                "speedup", "bitwise");
    for (std::size_t m : {(std::size_t)4097, (std::size_t)65537, (std::size_t)1048577}) {
        Case c(m);
        const int reps = m > 200000 ? 20 : 200;

        struct Row {
            const char* name;
            void (*run)(Case&);
        };
        auto run_pipeline = [](Case& cc) {
            kernels::derivatives(cc.rho, cc.dx, cc.d1, cc.d2);
            kernels::h_integrands(cc.rho, cc.d1, cc.d2, 2, cc.num, cc.den);
            const double h = kernels::simpson_sum(cc.num, cc.dx) /
                             kernels::simpson_sum(cc.den, cc.dx);
            kernels::flow_rhs(cc.rho, cc.d1, cc.d2, 2, h, cc.out);
        };

        kernels::set_exec(kernels::Exec::Serial);
        const double ts = time_best_of(reps, [&] { run_pipeline(c); });
        std::vector<double> serial_out = c.out;
        const double serial_sum = kernels::sum_chunked(c.out);

        kernels::set_exec(kernels::Exec::Parallel);
        const double tp = time_best_of(reps, [&] { run_pipeline(c); });
        const double par_sum = kernels::sum_chunked(c.out);
        bool bitwise = serial_sum == par_sum;
        for (std::size_t i = 0; i < m; ++i)
            if (c.out[i] != serial_out[i]) bitwise = false;

        std::printf("%-22s %10zu %12.1f %12.1f %8.2f %s\n", "rhs_pipeline", m, ts * 1e6,
                    tp * 1e6, ts / tp, bitwise ? "yes" : "NO");
        kernels::set_exec(kernels::Exec::Auto);
    }
    return 0;
}
