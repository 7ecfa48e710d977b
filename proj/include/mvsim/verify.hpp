#pragma once

#include <string>
#include <vector>

#include "mvsim/trace_io.hpp"

namespace mvsim {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string table() const;  // one aligned pass/fail line per check
};

// Re-derives every trace guarantee from the recorded states alone: pairwise
// separation, closest approach of the per-round linear motions, the two-color
// set, no side roles after round one, hull perimeter growth while off robots
// remain, safe-zone containment of side/interior destinations, and the final
// configuration (all red, strictly convex, all-pairs oracle visibility).
VerifyReport verify_trace(const ParsedTrace& trace, int oracle_k = 4096);

}  // namespace mvsim
