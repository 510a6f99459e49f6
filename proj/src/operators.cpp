#include "vpmcf/operators.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace vpmcf::operators {

namespace {

inline double mirror(std::span<const double> f, long i, long N) {
    if (i < 0) return f[-i];
    if (i > N) return f[2 * N - i];
    return f[i];
}

}  // namespace

ScalarField surface_laplacian(const RadialProfile& profile, std::span<const double> f) {
    profile.validate();
    if (f.size() != profile.rho.size())
        throw InvalidArgument("surface_laplacian: field size does not match profile");
    const CurvatureField cf = curvature_fields(profile);  // AxisContact guard lives here

    const long N = profile.grid.N;
    const double dx = profile.grid.dx();
    const double nm1 = profile.grid.dim - 1;
    ScalarField out(f.size());
    for (long i = 0; i <= N; ++i) {
        const double fl = mirror(f, i - 1, N);
        const double fr = mirror(f, i + 1, N);
        const double f1 = (fr - fl) / (2.0 * dx);
        const double f2 = (fr - 2.0 * f[i] + fl) / (dx * dx);
        const double v2 = cf.v[i] * cf.v[i];
        const double drift = nm1 * cf.d1[i] / (profile.rho[i] * v2) -
                             cf.d1[i] * cf.d2[i] / (v2 * v2);
        out[i] = f2 / v2 + f1 * drift;
    }
    return out;
}

const char* to_string(EvolvedQuantity q) {
    switch (q) {
        case EvolvedQuantity::Y: return "y";
        case EvolvedQuantity::H: return "H";
        case EvolvedQuantity::V: return "v";
        case EvolvedQuantity::P: return "p";
        case EvolvedQuantity::Q: return "q";
        case EvolvedQuantity::K: return "k";
    }
    return "?";
}

namespace {

const std::vector<double>& select(const CurvatureField& f, EvolvedQuantity q) {
    switch (q) {
        case EvolvedQuantity::Y: return f.y;
        case EvolvedQuantity::H: return f.H;
        case EvolvedQuantity::V: return f.v;
        case EvolvedQuantity::P: return f.p;
        case EvolvedQuantity::Q: return f.q;
        case EvolvedQuantity::K: return f.k;
    }
    return f.y;
}

}  // namespace

ScalarField evolution_residual(const RadialProfile& prev, const RadialProfile& mid,
                               const RadialProfile& next, double h_mid,
                               EvolvedQuantity q) {
    const CurvatureField fp = curvature_fields(prev);
    const CurvatureField fm = curvature_fields(mid);
    const CurvatureField fn = curvature_fields(next);

    const std::vector<double>& up = select(fp, q);
    const std::vector<double>& um = select(fm, q);
    const std::vector<double>& un = select(fn, q);

    // nonuniform 3-point centered time derivative, exact on quadratics
    const double t0 = prev.time, t1 = mid.time, t2 = next.time;
    const double c0 = (t1 - t2) / ((t0 - t1) * (t0 - t2));
    const double c1 = (2.0 * t1 - t0 - t2) / ((t1 - t0) * (t1 - t2));
    const double c2 = (t1 - t0) / ((t2 - t0) * (t2 - t1));

    const ScalarField lap = surface_laplacian(mid, um);

    const long N = mid.grid.N;
    const double dx = mid.grid.dx();
    const double nm1 = mid.grid.dim - 1;
    const double nm3 = mid.grid.dim - 3;

    ScalarField res(um.size(), 0.0);
    for (long i = 1; i < N; ++i) {
        const double y = fm.y[i], v = fm.v[i], p = fm.p[i], qq = fm.q[i];
        const double k = fm.k[i], H = fm.H[i], A2 = fm.A2[i];

        const double fprime = (um[i + 1] - um[i - 1]) / (2.0 * dx);
        const double dfdt = c0 * up[i] + c1 * um[i] + c2 * un[i];
        const double lhs = dfdt + (H - h_mid) * (fm.d1[i] / v) * fprime;

        double rhs = lap[i];
        switch (q) {
            case EvolvedQuantity::Y:
                rhs += -nm1 / y + h_mid * p * y;
                break;
            case EvolvedQuantity::H:
                rhs += (H - h_mid) * A2;
                break;
            case EvolvedQuantity::V: {
                const double grad2 = (fprime * fprime) / (v * v);  // |∇v|^2
                rhs += -A2 * v + nm1 * v / (y * y) - 2.0 / v * grad2;
                break;
            }
            case EvolvedQuantity::P:
                rhs += A2 * p + 2.0 * qq * qq * (k - p) - h_mid * p * p;
                break;
            case EvolvedQuantity::Q:
                rhs += A2 * qq + qq * (nm1 * p * p + nm3 * qq * qq - 2.0 * k * p) -
                       h_mid * p * qq;
                break;
            case EvolvedQuantity::K:
                rhs += A2 * k - 2.0 * nm1 * qq * qq * (k - p) - h_mid * k * k;
                break;
        }
        res[i] = std::fabs(lhs - rhs);
    }
    return res;
}

ScalarField evolution_residual(std::span<const flow::FlowState> window, EvolvedQuantity q) {
    if (window.size() < 3)
        throw InsufficientHistory("evolution_residual: need >= 3 consecutive states, got " +
                                  std::to_string(window.size()));
    const std::size_t m = window.size() / 2;
    return evolution_residual(window[m - 1].profile, window[m].profile,
                              window[m + 1].profile, window[m].h, q);
}

}  // namespace vpmcf::operators
