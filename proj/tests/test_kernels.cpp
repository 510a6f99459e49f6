#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "vpmcf/kernels.hpp"

using namespace vpmcf;

namespace {

std::vector<double> random_positive(std::size_t m, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.3, 2.5);
    std::vector<double> v(m);
    for (auto& x : v) x = uni(rng);
    return v;
}

struct ExecGuard {
    kernels::Exec saved;
    ExecGuard() : saved(kernels::exec()) {}
    ~ExecGuard() { kernels::set_exec(saved); }
};

}  // namespace

TEST_CASE("parallel kernels are bit-identical to the serial reference") {
    ExecGuard guard;
    // sizes straddling the chunk boundary and well above it
    for (std::size_t m : {257u, 1024u, 1025u, 20001u, 100001u}) {
        const auto rho = random_positive(m, (unsigned)m);
        const double dx = 1.0 / (m - 1);
        std::vector<double> d1s(m), d2s(m), d1p(m), d2p(m), outs(m), outp(m);
        std::vector<double> nums(m), dens(m), nump(m), denp(m);
        std::vector<double> vs(m), ps(m), qs(m), ks(m), Hs(m), A2s(m), C3s(m);
        std::vector<double> vp(m), pp(m), qp(m), kp(m), Hp(m), A2p(m), C3p(m);

        kernels::set_exec(kernels::Exec::Serial);
        kernels::derivatives(rho, dx, d1s, d2s);
        kernels::curvature(rho, d1s, d2s, 3, {vs, ps, qs, ks, Hs, A2s, C3s});
        kernels::h_integrands(rho, d1s, d2s, 3, nums, dens);
        kernels::flow_rhs(rho, d1s, d2s, 3, 0.7, outs);
        const double sum_s = kernels::sum_chunked(rho);
        const double min_s = kernels::min_value(rho);
        const double max_s = kernels::max_value(rho);

        kernels::set_exec(kernels::Exec::Parallel);
        kernels::derivatives(rho, dx, d1p, d2p);
        kernels::curvature(rho, d1p, d2p, 3, {vp, pp, qp, kp, Hp, A2p, C3p});
        kernels::h_integrands(rho, d1p, d2p, 3, nump, denp);
        kernels::flow_rhs(rho, d1p, d2p, 3, 0.7, outp);
        const double sum_p = kernels::sum_chunked(rho);
        const double min_p = kernels::min_value(rho);
        const double max_p = kernels::max_value(rho);

        CHECK(sum_s == sum_p);
        CHECK(min_s == min_p);
        CHECK(max_s == max_p);
        for (std::size_t i = 0; i < m; ++i) {
            REQUIRE(d1s[i] == d1p[i]);
            REQUIRE(d2s[i] == d2p[i]);
            REQUIRE(outs[i] == outp[i]);
            REQUIRE(Hs[i] == Hp[i]);
            REQUIRE(A2s[i] == A2p[i]);
            REQUIRE(nums[i] == nump[i]);
        }
        if (m % 2 == 1) {  // even interval count
            kernels::set_exec(kernels::Exec::Serial);
            const double is = kernels::simpson_sum(rho, dx);
            kernels::set_exec(kernels::Exec::Parallel);
            const double ip = kernels::simpson_sum(rho, dx);
            CHECK(is == ip);
        }
    }
}

TEST_CASE("simpson quadrature is exact for cubics") {
    const std::size_t m = 101;
    const double dx = 1.0 / (m - 1);
    std::vector<double> f(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = i * dx;
        f[i] = 2.0 + x - 3.0 * x * x + 5.0 * x * x * x;
    }
    // integral over [0,1]: 2 + 1/2 - 1 + 5/4 = 2.75
    CHECK(kernels::simpson_sum(f, dx) == doctest::Approx(2.75).epsilon(1e-14));
}

TEST_CASE("derivatives: constants and mirror endpoints") {
    const std::size_t m = 65;
    std::vector<double> rho(m, 1.7), d1(m), d2(m);
    kernels::derivatives(rho, 0.01, d1, d2);
    for (std::size_t i = 0; i < m; ++i) {
        CHECK(d1[i] == 0.0);
        CHECK(d2[i] == 0.0);
    }
}

TEST_CASE("all_finite flags NaN and Inf") {
    std::vector<double> x(5000, 1.0);
    CHECK(kernels::all_finite(x));
    x[4321] = std::nan("");
    CHECK_FALSE(kernels::all_finite(x));
    x[4321] = INFINITY;
    CHECK_FALSE(kernels::all_finite(x));
}
