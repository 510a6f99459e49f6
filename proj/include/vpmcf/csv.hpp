#pragma once

#include <string>
#include <vector>

#include "vpmcf/profile.hpp"

namespace vpmcf::csv {

// Shortest round-trip decimal form ("%.17g"); identical bytes for identical
// doubles, which is what the determinism criterion hashes.
std::string format_double(double v);

// Snapshot schema: x,rho,d1,d2,y,v,p,q,k,H,A2 with mandatory header.
void write_snapshot(const std::string& path, const RadialProfile& profile,
                    const CurvatureField& field);

// Reads a snapshot (or any CSV with x and rho columns); grid inferred from
// the x column, spacing must be uniform.
RadialProfile read_profile(const std::string& path, int dim);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;  // column-major

    int column(const std::string& name) const;  // -1 when missing
};

Table read_table(const std::string& path);

}  // namespace vpmcf::csv
