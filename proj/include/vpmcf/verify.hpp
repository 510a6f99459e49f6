#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vpmcf::verify {

enum class Suite { Identities, Oracles, Sturm, Blowup, All };

// Throws InvalidArgument for unknown names.
Suite parse_suite(const std::string& name);

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the acceptance criteria of the suite, one pass/fail line each.
std::vector<CriterionResult> run_suite(Suite suite, std::ostream& log);

// Prints per-criterion lines plus a summary; returns 0 iff all pass.
int verify_main(Suite suite, std::ostream& log);

}  // namespace vpmcf::verify
