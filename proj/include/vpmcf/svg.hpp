#pragma once

#include <string>

#include "vpmcf/profile.hpp"

namespace vpmcf::svg {

// Flat polyline plot of the profile with a fixed 800x400 viewBox; the
// vertical scale is [0, 1.05 max rho].
void write_profile_svg(const std::string& path, const RadialProfile& profile);

}  // namespace vpmcf::svg
