#include "mvsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mvsim {

namespace {

double unit_draw(std::mt19937_64& rng) {
    // 53-bit mantissa mapping; identical on every platform for a given seed.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Frame make_frame(std::uint64_t seed, int robot_index, FramePolicy policy) {
    if (robot_index < 0) throw std::invalid_argument("make_frame: negative index");
    Frame f;
    if (policy == FramePolicy::Aligned) return f;
    std::mt19937_64 rng(seed);
    rng.discard(2 * static_cast<unsigned long long>(robot_index));
    f.rotation = unit_draw(rng) * 2.0 * M_PI;
    const bool flip = (rng() & 1ull) != 0;
    f.reflect = policy == FramePolicy::RotatedReflected && flip;
    return f;
}

Point to_local(const Frame& frame, const Point& p) {
    const Point v = p - frame.origin;
    const double c = std::cos(frame.rotation);
    const double s = std::sin(frame.rotation);
    Point local{c * v.x + s * v.y, -s * v.x + c * v.y};
    if (frame.reflect) local.y = -local.y;
    return local;
}

Point to_global(const Frame& frame, const Point& p) {
    Point v = p;
    if (frame.reflect) v.y = -v.y;
    const double c = std::cos(frame.rotation);
    const double s = std::sin(frame.rotation);
    return Point{c * v.x - s * v.y, s * v.x + c * v.y} + frame.origin;
}

DiskSet disks_of(const Configuration& config) {
    DiskSet d;
    d.centers.reserve(config.robots.size());
    for (const Robot& r : config.robots) d.centers.push_back(r.center);
    return d;
}

Snapshot make_snapshot_from(const Configuration& config, int i, const Frame& frame,
                            const std::vector<int>& visible_indices) {
    if (config.robots[i].terminated)
        throw std::invalid_argument("make_snapshot: robot is terminated");
    Frame anchored = frame;
    anchored.origin = config.robots[i].center;  // re-anchored every round
    Snapshot s;
    s.self_light = config.robots[i].light;
    s.others.reserve(visible_indices.size());
    for (int j : visible_indices)
        s.others.push_back({to_local(anchored, config.robots[j].center), config.robots[j].light});
    std::sort(s.others.begin(), s.others.end(), [](const SnapshotEntry& a, const SnapshotEntry& b) {
        if (a.pos.x != b.pos.x) return a.pos.x < b.pos.x;
        if (a.pos.y != b.pos.y) return a.pos.y < b.pos.y;
        return a.light < b.light;
    });
    return s;
}

Snapshot make_snapshot(const Configuration& config, int i, const Frame& frame, int k_samples) {
    return make_snapshot_from(config, i, frame, visible_set(i, disks_of(config), k_samples));
}

}  // namespace mvsim
