#pragma once

#include <stdexcept>
#include <string>

#include "mvsim/engine.hpp"

namespace mvsim {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection-sample n robot centers uniformly in [0, spread]^2 with pairwise
// distance >= 1 + 1e-6; `collinear` lays them on the x-axis with gaps jittered
// in [1 + 1e-6, 1.2 + 1e-6) along the line only. Throws std::runtime_error
// after 10^6 failed draws and std::invalid_argument when spread < sqrt(n).
Scenario generate_scenario(int n, std::uint64_t seed, double spread, bool collinear = false);

std::string scenario_to_text(const Scenario& sc);
Scenario scenario_from_text(const std::string& text);  // throws ParseError

std::string frame_policy_name(FramePolicy p);
FramePolicy frame_policy_from_name(const std::string& name);  // throws ParseError

// 17 significant digits: doubles round-trip bit-exactly through the text form.
std::string format_double(double v);

}  // namespace mvsim
