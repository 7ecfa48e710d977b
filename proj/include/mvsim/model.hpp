#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mvsim/geometry.hpp"
#include "mvsim/visibility.hpp"

namespace mvsim {

enum class Light { Off, Red };

enum class FramePolicy { Aligned, Rotated, RotatedReflected };

struct Robot {
    int id = 0;  // simulation bookkeeping only; never reaches Compute
    Point center;
    Light light = Light::Off;
    bool terminated = false;
};

struct Configuration {
    std::vector<Robot> robots;
    int round = 0;
};

// Rigid local coordinate frame of one robot. Rotation and reflection are
// drawn once per robot from the run seed; the origin is re-anchored to the
// robot's current center every round.
struct Frame {
    Point origin;
    double rotation = 0.0;  // radians, local-to-global
    bool reflect = false;
};

struct SnapshotEntry {
    Point pos;  // local frame
    Light light = Light::Off;
};

// A robot's anonymized view: itself at the origin plus the visible robots in
// local coordinates. No identities, no round number, no history.
struct Snapshot {
    Light self_light = Light::Off;
    std::vector<SnapshotEntry> others;
};

struct Decision {
    std::optional<Point> destination;  // local frame; empty = stay
    Light new_light = Light::Off;
    bool terminate = false;
};

Frame make_frame(std::uint64_t seed, int robot_index, FramePolicy policy);

Point to_local(const Frame& frame, const Point& p);
Point to_global(const Frame& frame, const Point& p);

// Snapshot for robot i against the full configuration (visibility computed
// internally with k_samples). Entries are sorted lexicographically by local
// position so equal views compare equal.
Snapshot make_snapshot(const Configuration& config, int i, const Frame& frame, int k_samples = 64);

// Same, but with the visible index set already computed (engine fast path).
Snapshot make_snapshot_from(const Configuration& config, int i, const Frame& frame,
                            const std::vector<int>& visible_indices);

DiskSet disks_of(const Configuration& config);

}  // namespace mvsim
