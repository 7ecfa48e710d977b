#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvsim/engine.hpp"
#include "mvsim/scenario.hpp"

namespace mvsim {

// Re-parsed form of a trace file. Light tokens are kept verbatim so the
// verifier can flag colors outside the two-color set instead of refusing to
// parse them.
struct ParsedRobot {
    int id = 0;
    Point pos;
    std::string light_token;
    std::optional<Light> light;
    std::optional<Role> role;
    bool terminated = false;
};

struct ParsedRound {
    int round = 0;
    std::vector<ParsedRobot> robots;
    std::vector<MoveEvent> moves;
    std::vector<ViolationEvent> violations;
};

struct ParsedTrace {
    long n = 0;
    std::uint64_t seed = 0;
    FramePolicy policy = FramePolicy::Rotated;
    bool predict = true;
    int k_samples = 64;
    int max_rounds = 0;
    std::vector<ParsedRound> rounds;  // rounds[0] is the initial state
    std::string outcome_token;
    int total_rounds = 0;
};

std::string trace_to_text(const Trace& trace);
ParsedTrace trace_from_text(const std::string& text);  // throws ParseError

std::string light_name(Light l);
std::string role_name(const std::optional<Role>& r);
std::string outcome_name(Outcome o);

}  // namespace mvsim
