#include "vpmcf/svg.hpp"

#include <cstdio>
#include <fstream>

#include "vpmcf/kernels.hpp"

namespace vpmcf::svg {

void write_profile_svg(const std::string& path, const RadialProfile& profile) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("write_profile_svg: cannot open " + path);

    const double x0 = 40, x1 = 780, y0 = 380, y1 = 20;
    const double a = profile.grid.a, b = profile.grid.b;
    const double rmax = 1.05 * kernels::max_value(profile.rho);

    auto px = [&](double x) { return x0 + (x - a) / (b - a) * (x1 - x0); };
    auto py = [&](double r) { return y0 + r / rmax * (y1 - y0); };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 400\">\n";
    out << "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n";
    out << "<line x1=\"40\" y1=\"380\" x2=\"780\" y2=\"380\" stroke=\"black\"/>\n";
    out << "<line x1=\"40\" y1=\"380\" x2=\"40\" y2=\"20\" stroke=\"black\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (int i = 0; i <= profile.grid.N; ++i) {
        if (i) out << ' ';
        out << num(px(profile.grid.node(i))) << ',' << num(py(profile.rho[i]));
    }
    out << "\"/>\n";
    char tbuf[48];
    std::snprintf(tbuf, sizeof tbuf, "%.6g", profile.time);
    out << "<text x=\"44\" y=\"34\" font-size=\"12\">rho, t=" << tbuf << "</text>\n";
    out << "</svg>\n";
}

}  // namespace vpmcf::svg
