#include "vpmcf/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vpmcf::csv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_snapshot(const std::string& path, const RadialProfile& profile,
                    const CurvatureField& field) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("write_snapshot: cannot open " + path);
    out << "x,rho,d1,d2,y,v,p,q,k,H,A2\n";
    for (int i = 0; i <= profile.grid.N; ++i) {
        out << format_double(profile.grid.node(i)) << ',' << format_double(profile.rho[i])
            << ',' << format_double(field.d1[i]) << ',' << format_double(field.d2[i]) << ','
            << format_double(field.y[i]) << ',' << format_double(field.v[i]) << ','
            << format_double(field.p[i]) << ',' << format_double(field.q[i]) << ','
            << format_double(field.k[i]) << ',' << format_double(field.H[i]) << ','
            << format_double(field.A2[i]) << '\n';
    }
}

int Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return (int)i;
    return -1;
}

Table read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("read_table: cannot open " + path);
    Table t;
    std::string line;
    if (!std::getline(in, line)) throw InvalidArgument("read_table: empty file " + path);
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) t.header.push_back(cell);
    }
    t.columns.resize(t.header.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ss, cell, ',') && c < t.columns.size()) {
            // non-numeric cells (status, neck lists) parse as NaN
            try {
                t.columns[c].push_back(std::stod(cell));
            } catch (...) {
                t.columns[c].push_back(std::nan(""));
            }
            ++c;
        }
        while (c < t.columns.size()) t.columns[c++].push_back(std::nan(""));
    }
    return t;
}

RadialProfile read_profile(const std::string& path, int dim) {
    const Table t = read_table(path);
    const int xc = t.column("x"), rc = t.column("rho");
    if (xc < 0 || rc < 0)
        throw InvalidArgument("read_profile: " + path + " needs x and rho columns");
    const auto& x = t.columns[xc];
    const auto& r = t.columns[rc];
    if (x.size() < 9) throw InvalidArgument("read_profile: need at least 9 rows");

    RadialProfile p;
    p.grid.a = x.front();
    p.grid.b = x.back();
    p.grid.N = (int)x.size() - 1;
    p.grid.dim = dim;
    const double dx = p.grid.dx();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (std::fabs(x[i + 1] - x[i] - dx) > 1e-9 * std::max(1.0, std::fabs(dx)))
            throw InvalidArgument("read_profile: x column is not uniformly spaced");
    }
    p.rho = r;
    p.validate();
    return p;
}

}  // namespace vpmcf::csv
