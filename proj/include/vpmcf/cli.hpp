#pragma once

namespace vpmcf::cli {

// Full command-line interface: run / verify / fit / rescale.
// Returns the process exit code (0 ok, 1 usage or config error, 2 monitor
// failure under run --strict).
int main(int argc, const char* const* argv);

}  // namespace vpmcf::cli
