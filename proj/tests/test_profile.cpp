#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "vpmcf/harness.hpp"
#include "vpmcf/profile.hpp"

using namespace vpmcf;

namespace {

constexpr double kPi = std::numbers::pi;

RadialProfile cos_profile(int N, double base = 2.0) {
    // rho(x) = base + cos(2 pi x) on [0,1]; Neumann-compatible
    RadialProfile p;
    p.grid = {0.0, 1.0, N, 2};
    p.rho.resize(N + 1);
    for (int i = 0; i <= N; ++i) p.rho[i] = base + std::cos(2.0 * kPi * p.grid.node(i));
    return p;
}

double max_err(const std::vector<double>& a, const std::vector<double>& b) {
    double w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::fabs(a[i] - b[i]));
    return w;
}

}  // namespace

TEST_CASE("grid and profile validation") {
    CHECK_THROWS_AS((GridSpec{1.0, 0.0, 100, 2}.validate()), InvalidArgument);
    CHECK_THROWS_AS((GridSpec{0.0, 1.0, 4, 2}.validate()), InvalidArgument);
    CHECK_THROWS_AS((GridSpec{0.0, 1.0, 100, 1}.validate()), InvalidArgument);

    RadialProfile p = harness::make_cylinder({0, 1, 16, 2}, 1.0);
    p.rho[3] = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
}

TEST_CASE("derivatives of the cosine profile match the symbolic oracle") {
    const int N = 512;
    const RadialProfile p = cos_profile(N);
    const auto [d1, d2] = derivatives(p);

    CHECK(d1[0] == 0.0);
    CHECK(d1[N] == 0.0);
    CHECK(d2[0] == doctest::Approx(-4.0 * kPi * kPi).epsilon(1e-3));

    std::vector<double> d1_ex(N + 1), d2_ex(N + 1);
    for (int i = 0; i <= N; ++i) {
        const double x = p.grid.node(i);
        d1_ex[i] = -2.0 * kPi * std::sin(2.0 * kPi * x);
        d2_ex[i] = -4.0 * kPi * kPi * std::cos(2.0 * kPi * x);
    }
    CHECK(max_err(d1, d1_ex) <= 1e-3);
    CHECK(max_err(d2, d2_ex) <= 1e-3);

    // halving dx cuts the d2 error by ~4
    const RadialProfile p2 = cos_profile(2 * N);
    const auto [d1b, d2b] = derivatives(p2);
    std::vector<double> d2_ex2(2 * N + 1);
    for (int i = 0; i <= 2 * N; ++i)
        d2_ex2[i] = -4.0 * kPi * kPi * std::cos(2.0 * kPi * p2.grid.node(i));
    const double ratio = max_err(d2, d2_ex) / max_err(d2b, d2_ex2);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.10));
}

TEST_CASE("curvature fields on cylinders") {
    {
        const RadialProfile p = harness::make_cylinder({0, 1, 64, 2}, 1.0);
        const CurvatureField f = curvature_fields(p);
        for (int i = 0; i <= 64; ++i) {
            CHECK(f.p[i] == doctest::Approx(1.0));
            CHECK(f.q[i] == 0.0);
            CHECK(f.k[i] == 0.0);
            CHECK(f.v[i] == 1.0);
            CHECK(f.H[i] == doctest::Approx(1.0));
            CHECK(f.A2[i] == doctest::Approx(1.0));
        }
    }
    for (int dim : {2, 3, 5}) {
        const double r = 0.7;
        const RadialProfile p = harness::make_cylinder({0, 2, 32, dim}, r);
        const CurvatureField f = curvature_fields(p);
        CHECK(f.H[7] == doctest::Approx((dim - 1) / r).epsilon(1e-14));
        CHECK(f.A2[7] == doctest::Approx((dim - 1) / (r * r)).epsilon(1e-14));
        CHECK(f.C3[7] == doctest::Approx((dim - 1) / (r * r * r)).epsilon(1e-14));
    }
}

TEST_CASE("curvature fields at x=0 of 2+cos(2 pi x) match symbolic values") {
    const RadialProfile p = cos_profile(512);
    const CurvatureField f = curvature_fields(p);
    // at x=0: rho=3, rho'=0, rho''=-4pi^2
    CHECK(f.v[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(f.p[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(f.k[0] == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-3));
    CHECK(f.H[0] == doctest::Approx(4.0 * kPi * kPi + 1.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("axis contact guard") {
    RadialProfile p = harness::make_cylinder({0, 1, 16, 2}, 1.0);
    p.rho[7] = 5e-13;
    CHECK_THROWS_AS(curvature_fields(p), AxisContact);
}

TEST_CASE("enclosed volume and surface area") {
    const RadialProfile unit = harness::make_cylinder({0, 1, 100, 2}, 1.0);
    CHECK(enclosed_volume(unit) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(surface_area(unit) == doctest::Approx(2.0 * kPi).epsilon(1e-14));

    const RadialProfile cyl = harness::make_cylinder({0, 3, 60, 2}, 0.5);
    CHECK(surface_area(cyl) == doctest::Approx(2.0 * kPi * 0.5 * 3.0).epsilon(1e-14));

    // rho = x + 1 on [0,1]: volume = pi * 7/3, exact for Simpson (degree 2)
    RadialProfile lin;
    lin.grid = {0, 1, 50, 2};
    lin.rho.resize(51);
    for (int i = 0; i <= 50; ++i) lin.rho[i] = lin.grid.node(i) + 1.0;
    CHECK(enclosed_volume(lin) == doctest::Approx(kPi * 7.0 / 3.0).epsilon(1e-14));

    RadialProfile odd = unit;
    odd.grid.N = 99;
    odd.rho.resize(100);
    CHECK_THROWS_AS(enclosed_volume(odd), OddIntervalCount);

    // O(dx^4) quadrature convergence on a smooth non-periodic integrand
    // (rho = e^x: volume = pi (e^2 - 1)/2)
    auto exp_profile = [](int N) {
        RadialProfile p;
        p.grid = {0, 1, N, 2};
        p.rho.resize(N + 1);
        for (int i = 0; i <= N; ++i) p.rho[i] = std::exp(p.grid.node(i));
        return p;
    };
    const double exact = kPi * (std::exp(2.0) - 1.0) / 2.0;
    const double e1 = std::fabs(enclosed_volume(exp_profile(16)) - exact);
    const double e2 = std::fabs(enclosed_volume(exp_profile(32)) - exact);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.15));
}

TEST_CASE("averaged mean curvature") {
    const RadialProfile cyl = harness::make_cylinder({0, 1, 64, 2}, 2.0);
    const CurvatureField f = curvature_fields(cyl);
    CHECK(averaged_mean_curvature(f, cyl) == doctest::Approx(0.5).epsilon(1e-13));

    // weighted mean lies between min H and max H
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        RadialProfile p;
        p.grid = {0, 1, 128, 2};
        p.rho.resize(129);
        const double a = 0.3 * uni(rng), b = 0.2 * uni(rng);
        for (int i = 0; i <= 128; ++i) {
            const double x = p.grid.node(i);
            p.rho[i] = 1.0 + a * std::cos(2 * kPi * x) + b * std::cos(4 * kPi * x);
        }
        const CurvatureField cf = curvature_fields(p);
        const double h = averaged_mean_curvature(cf, p);
        double lo = cf.H[0], hi = cf.H[0];
        for (double H : cf.H) {
            lo = std::min(lo, H);
            hi = std::max(hi, H);
        }
        CHECK(h >= lo - 1e-12);
        CHECK(h <= hi + 1e-12);
    }

    // agreement with an independent high-resolution trapezoid oracle
    // (profile fine enough that the 2nd-order stencil error sits below 1e-6)
    const RadialProfile p = cos_profile(4096);
    const CurvatureField cf = curvature_fields(p);
    const double h = averaged_mean_curvature(cf, p);

    const int M = 1 << 16;
    const double dx = 1.0 / M;
    double num = 0.0, den = 0.0;
    for (int i = 0; i <= M; ++i) {
        const double x = i * dx;
        const double rho = 2.0 + std::cos(2 * kPi * x);
        const double d1 = -2.0 * kPi * std::sin(2 * kPi * x);
        const double d2 = -4.0 * kPi * kPi * std::cos(2 * kPi * x);
        const double v = std::sqrt(1.0 + d1 * d1);
        const double H = -d2 / (v * v * v) + 1.0 / (rho * v);
        const double w = (i == 0 || i == M) ? 0.5 : 1.0;
        num += w * H * rho * v * dx;
        den += w * rho * v * dx;
    }
    CHECK(h == doctest::Approx(num / den).epsilon(1e-6));
}

TEST_CASE("scaling covariance of the geometric fields") {
    for (double alpha : {0.5, 2.0, 3.7}) {
        RadialProfile p;
        p.grid = {0.25, 1.75, 96, 3};
        p.rho.resize(97);
        for (int i = 0; i <= 96; ++i) {
            const double s = (p.grid.node(i) - p.grid.a) / (p.grid.b - p.grid.a);
            p.rho[i] = 1.0 + 0.4 * std::cos(2 * kPi * s);
        }
        RadialProfile ps = p;
        ps.grid.a *= alpha;
        ps.grid.b *= alpha;
        for (auto& r : ps.rho) r *= alpha;

        const CurvatureField f = curvature_fields(p);
        const CurvatureField fs = curvature_fields(ps);
        for (int i = 0; i <= 96; i += 7) {
            CHECK(fs.p[i] == doctest::Approx(f.p[i] / alpha).epsilon(1e-12));
            CHECK(fs.k[i] == doctest::Approx(f.k[i] / alpha).epsilon(1e-11));
            CHECK(fs.H[i] == doctest::Approx(f.H[i] / alpha).epsilon(1e-11));
            CHECK(fs.A2[i] == doctest::Approx(f.A2[i] / (alpha * alpha)).epsilon(1e-11));
            CHECK(fs.v[i] == doctest::Approx(f.v[i]).epsilon(1e-12));
        }
        const double vol_ratio = enclosed_volume(ps) / enclosed_volume(p);
        CHECK(vol_ratio ==
              doctest::Approx(std::pow(alpha, p.grid.dim + 1)).epsilon(1e-12));
    }
}

TEST_CASE("pointwise identities on random profiles") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        RadialProfile p;
        p.grid = {0, 1, 64, 2 + (int)(uni(rng) * 3)};
        p.rho.resize(65);
        for (int i = 0; i <= 64; ++i) p.rho[i] = 0.2 + 2.0 * uni(rng);
        const CurvatureField f = curvature_fields(p);
        for (int i = 0; i <= 64; ++i) {
            worst = std::max(worst, std::fabs(f.p[i] * f.v[i] * f.y[i] - 1.0));
            const double inv_y2 = 1.0 / (f.y[i] * f.y[i]);
            worst = std::max(
                worst, std::fabs(f.p[i] * f.p[i] + f.q[i] * f.q[i] - inv_y2) / inv_y2);
        }
    }
    CHECK(worst <= 1e-12);
}
