#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mvsim/algorithm.hpp"
#include "mvsim/model.hpp"

namespace mvsim {

struct SimParams {
    std::uint64_t seed = 0;
    FramePolicy policy = FramePolicy::Rotated;
    bool predict = true;
    int k_samples = 64;
    int max_rounds = 0;  // 0 selects the default 10n + 10
};

struct Scenario {
    std::vector<Point> positions;
    SimParams params;
    double spread = 0.0;  // generation-time echo, not needed for replay
};

enum class Outcome { Solved, MaxRoundsExceeded, Violation };

struct MoveEvent {
    int id;
    Point from, to;
};

struct LightEvent {
    int id;
    Light from, to;
};

struct ViolationEvent {
    std::string kind;
    int i = -1, j = -1;
    double value = 0.0;
};

struct RoundEvents {
    std::vector<MoveEvent> moves;
    std::vector<LightEvent> light_changes;
    std::vector<std::optional<Role>> roles;  // per robot; empty for never-classified
    std::vector<ViolationEvent> violations;
};

struct RoundRecord {
    Configuration config;  // state after the round
    RoundEvents events;
};

struct Trace {
    Scenario scenario;
    Configuration initial;
    std::vector<RoundRecord> rounds;
    Outcome outcome = Outcome::MaxRoundsExceeded;

    int total_rounds() const { return static_cast<int>(rounds.size()); }
    const Configuration& final_config() const {
        return rounds.empty() ? initial : rounds.back().config;
    }
};

using ComputeFn = std::function<Decision(const Snapshot&, const ComputeOptions&)>;

int default_max_rounds(int n);

// One fully synchronous round: every active robot Looks at the same input
// configuration, Computes, then all moves commit atomically. Every pair's
// closest approach along the round's linear motions must stay >= 1 - 1e-9,
// otherwise a violation is recorded and the caller is expected to stop.
std::pair<Configuration, RoundEvents> step(const Configuration& config,
                                           const std::vector<Frame>& frames,
                                           const SimParams& params,
                                           const ComputeFn& fn,
                                           const std::vector<std::optional<Role>>& prev_roles);

Trace run(const Scenario& scenario);
Trace run(const Scenario& scenario, const ComputeFn& fn);

// Deliberately broken Compute for the harness self-test: every robot charges
// at its nearest visible robot, which must trip the collision detector.
Decision broken_compute(const Snapshot& s, const ComputeOptions& opts);

struct FinalReport {
    bool all_visible = false;
    bool all_red = false;
    bool strictly_convex = false;
    bool min_separation = false;

    bool pass() const { return all_visible && all_red && strictly_convex && min_separation; }
};

// Independent checks on a final configuration: all-pairs visibility through
// the dense oracle, lights, strict convexity, and pairwise separation.
FinalReport check_final(const Configuration& config, int oracle_k = 4096);

bool strictly_convex_positions(const std::vector<Point>& centers);

}  // namespace mvsim
